#include <set>

#include "doctest.h"
#include "sgd/aut.hpp"
#include "sgd/catalog.hpp"
#include "sgd/error.hpp"
#include "sgd/structure.hpp"

using namespace sgd;

namespace {

std::vector<CatalogEntry> catalog_up_to(std::size_t n) {
  std::vector<CatalogEntrySpec> spec;
  for (const auto& s : default_catalog_spec())
    if (auto o = expected_order(s.construction); o && *o <= n) spec.push_back(s);
  return build_catalog(spec);
}

bool preserves(const GroupTable& g, const Permutation& p) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (p(g.mul(a, b)) != g.mul(p(a), p(b))) return false;
  return true;
}

// Every bijection fixing the identity, filtered by the table.
std::size_t count_automorphisms_brute(const GroupTable& g) {
  std::vector<Point> images(g.order());
  for (Elem i = 0; i < g.order(); ++i) images[i] = i;
  std::size_t count = 0;
  do {
    if (preserves(g, Permutation(images))) ++count;
  } while (std::next_permutation(images.begin() + 1, images.end()));
  return count;
}

}  // namespace

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(cyclic_group(3).table()).automorphisms.size() == 2);
  const AutGroup v4 = automorphisms(direct_product(cyclic_group(2), cyclic_group(2)).table());
  CHECK(v4.automorphisms.size() == 6);
  CHECK(v4.inner.size() == 1);
  CHECK(v4.out_order == 6);
  CHECK(automorphisms(symmetric_group(4).table()).out_order == 1);
  CHECK(automorphisms(quaternion_group().table()).automorphisms.size() == 24);
  CHECK(automorphisms(dihedral_group(4).table()).out_order == 2);
  CHECK_THROWS_AS(automorphisms(symmetric_group(5).table()), Error);
}

TEST_CASE("automorphism search matches brute force for order <= 8") {
  for (const auto& e : catalog_up_to(8)) {
    const AutGroup aut = automorphisms(*e.table);
    CHECK_MESSAGE(aut.automorphisms.size() == count_automorphisms_brute(*e.table), e.name);
    for (const auto& a : aut.automorphisms) CHECK(preserves(*e.table, a));
    CHECK(aut.automorphisms.front().is_identity());
    CHECK(aut.out_order * aut.inner.size() == aut.automorphisms.size());
  }
}

TEST_CASE("regular representation") {
  const RegularRep c2 = regular_representation(cyclic_group(2).table());
  CHECK(c2.image.order() == 2);
  CHECK(c2.image.contains(Permutation::cycle(2, {0, 1})));
  const RegularRep c4 = regular_representation(cyclic_group(4).table());
  CHECK(c4.image.order() == 4);
  bool has_4_cycle = false;
  for (const auto& p : c4.image.elements()) has_4_cycle |= p.order() == 4 && p.support_size() == 4;
  CHECK(has_4_cycle);

  for (const auto& e : catalog_up_to(12)) {
    if (e.order() != 12) continue;
    const GroupTable& g = *e.table;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        CHECK(left_translation(g, g.mul(a, b)) == left_translation(g, a) * left_translation(g, b));
    std::set<Permutation> distinct;
    for (Elem a = 0; a < g.order(); ++a) distinct.insert(left_translation(g, a));
    CHECK(distinct.size() == g.order());
  }
}

TEST_CASE("holomorphs") {
  CHECK(holomorph(cyclic_group(3).table()).order() == 6);
  CHECK(holomorph(direct_product(cyclic_group(2), cyclic_group(2)).table()).order() == 24);
  CHECK(holomorph(cyclic_group(1).table()).order() == 1);
}

TEST_CASE("R is a homomorphism onto Aut(G) with inner translations") {
  for (const auto& e : catalog_up_to(12)) {
    const GroupTable& g = *e.table;
    const AutGroup aut = automorphisms(g);
    const PermGroup hol = holomorph(aut);
    std::set<Permutation> image;
    std::vector<Permutation> r(hol.order());
    for (Elem i = 0; i < hol.order(); ++i) {
      r[i] = r_map(g, hol.element(i));
      image.insert(r[i]);
    }
    CHECK(image == std::set<Permutation>(aut.automorphisms.begin(), aut.automorphisms.end()));
    if (hol.order() <= 200)
      for (Elem i = 0; i < hol.order(); ++i)
        for (Elem j = 0; j < hol.order(); ++j) CHECK(r_map(g, hol.element(i) * hol.element(j)) == r[i] * r[j]);
    const std::set<Permutation> inner(aut.inner.begin(), aut.inner.end());
    for (Elem u = 0; u < g.order(); ++u) CHECK(inner.contains(r_map(g, left_translation(g, u))));
    for (const auto& a : aut.automorphisms) CHECK(r_map(g, a) == a);
  }
  CHECK(r_map(cyclic_group(3).table(), Permutation(3)).is_identity());
  const GroupTable c4 = cyclic_group(4).table();
  const PermGroup n4 = brute_normalizer(regular_representation(c4).image);
  std::size_t rejected = 0;
  const PermGroup s4 = symmetric_group(4);
  for (const auto& p : s4.elements()) {
    if (n4.contains(p)) continue;
    ++rejected;
    try {
      r_map(c4, p);
      FAIL("expected NotNormalizing");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kNotNormalizing);
    }
  }
  CHECK(rejected == 16);
}

TEST_CASE("brute normaliser equals the holomorph for order <= 8") {
  for (const auto& e : catalog_up_to(8)) {
    const GroupTable& g = *e.table;
    const AutGroup aut = automorphisms(g);
    const PermGroup hol = holomorph(aut);
    const PermGroup brute = brute_normalizer(regular_representation(g).image);
    CHECK_MESSAGE(std::equal(hol.elements().begin(), hol.elements().end(), brute.elements().begin(),
                             brute.elements().end()),
                  e.name);
    // N_G is the holomorph G⋊Aut(G); modulo the left and right regular
    // images together it is Out(G).
    CHECK(brute.order() == g.order() * aut.automorphisms.size());
    const std::size_t both = g.order() * g.order() / centre(g).size();
    CHECK(brute.order() / both == aut.out_order);
    if (g.is_abelian()) CHECK(brute.order() / g.order() == aut.out_order);
  }
  const PermGroup s4 = symmetric_group(4);
  CHECK(brute_normalizer(s4).order() == 24);
  CHECK_THROWS_AS(brute_normalizer(symmetric_group(9)), Error);
}

TEST_CASE("centre bound") {
  const CentreBoundReport trivial = centre_bound_report(PermGroup(5, {}));
  CHECK(trivial.centre_order == 1);
  CHECK(trivial.holds);
  const CentreBoundReport c4 = centre_bound_report(regular_representation(cyclic_group(4).table()).image);
  CHECK(c4.centre_order == 4);
  CHECK(c4.orbit_reps.size() == 1);
  CHECK(c4.bound == 4);
  for (std::uint32_t m = 1; m <= 4; ++m) {
    const CentreBoundReport w = centre_bound_report(wreath_c2(m));
    CHECK(w.centre_order == 2);
    CHECK(w.holds);
  }
}
