#include "sgd/aut.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sgd/error.hpp"
#include "sgd/structure.hpp"

namespace sgd {

AutGroup automorphisms(const GroupTable& g, AutOptions options) {
  if (g.order() > options.max_order)
    throw Error(Errc::kSizeLimit, "automorphism search limited to " + std::to_string(options.max_order) +
                                      " elements (got " + std::to_string(g.order()) + ")");
  AutGroup out{g, {}, {}, 0};
  const auto gens = generating_sequence(g);
  for_each_isomorphism(g, g, gens, [&](std::span<const Elem> map) {
    out.automorphisms.emplace_back(std::vector<Point>(map.begin(), map.end()));
    return true;
  });
  std::sort(out.automorphisms.begin(), out.automorphisms.end());

  std::set<Permutation> inner;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Point> images(g.order());
    for (Elem y = 0; y < g.order(); ++y) images[y] = g.conjugate(x, y);
    inner.emplace(std::move(images));
  }
  out.inner.assign(inner.begin(), inner.end());
  out.out_order = out.automorphisms.size() / out.inner.size();
  return out;
}

Permutation left_translation(const GroupTable& g, Elem x) {
  const auto row = g.row(x);
  return Permutation(std::vector<Point>(row.begin(), row.end()));
}

RegularRep regular_representation(const GroupTable& g) {
  std::vector<Permutation> gens;
  for (Elem x : generating_sequence(g)) gens.push_back(left_translation(g, x));
  const auto degree = static_cast<std::uint32_t>(g.order());
  RegularRep rep{g, PermGroup(degree, std::move(gens), g.order())};
  if (rep.image.order() != g.order())
    throw Error(Errc::kInvalidGroup, "regular image has the wrong order");
  return rep;
}

PermGroup holomorph(const AutGroup& aut) {
  const GroupTable& g = aut.base;
  const auto degree = static_cast<std::uint32_t>(g.order());
  const std::size_t expected = g.order() * aut.automorphisms.size();
  if (expected > kHolomorphMaxOrder)
    throw Error(Errc::kSizeLimit, "holomorph would have " + std::to_string(expected) + " elements");
  std::vector<Permutation> gens;
  for (Elem x : generating_sequence(g)) gens.push_back(left_translation(g, x));
  // Aut(G) is generated by any subset whose closure has the right size; add
  // automorphisms greedily until it does.
  std::vector<Permutation> aut_gens;
  std::size_t aut_reached = 1;
  for (const auto& a : aut.automorphisms) {
    if (aut_reached == aut.automorphisms.size()) break;
    if (a.is_identity()) continue;
    aut_gens.push_back(a);
    const std::size_t reached = PermGroup(degree, aut_gens, expected).order();
    if (reached == aut_reached) {
      aut_gens.pop_back();
    } else {
      aut_reached = reached;
    }
  }
  gens.insert(gens.end(), aut_gens.begin(), aut_gens.end());
  PermGroup hol(degree, std::move(gens), expected);
  if (hol.order() != expected)
    throw Error(Errc::kInvalidGroup, "holomorph order " + std::to_string(hol.order()) + " != |G|·|Aut(G)| = " +
                                         std::to_string(expected));
  return hol;
}

PermGroup holomorph(const GroupTable& g, AutOptions options) { return holomorph(automorphisms(g, options)); }

Permutation r_map(const GroupTable& g, const Permutation& phi) {
  if (phi.degree() != g.order()) throw Error(Errc::kInvalidInput, "φ must act on the group's elements");
  const Permutation phi_inv = phi.inverse();
  std::vector<Point> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const Permutation conj = phi * left_translation(g, x) * phi_inv;
    const Elem h = conj(g.identity());
    if (conj != left_translation(g, h))
      throw Error(Errc::kNotNormalizing, "φτ_gφ⁻¹ is not a left translation for g = " + std::to_string(x));
    images[x] = h;
  }
  return Permutation(std::move(images));
}

PermGroup brute_normalizer(const PermGroup& h) {
  const std::uint32_t n = h.degree();
  if (n > kBruteNormalizerMaxDegree)
    throw Error(Errc::kSizeLimit, "brute-force normaliser limited to degree " +
                                      std::to_string(kBruteNormalizerMaxDegree));
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> found;
  do {
    const Permutation sigma(images);
    const Permutation sigma_inv = sigma.inverse();
    bool normalizes = true;
    for (const auto& s : h.generators()) {
      if (!h.contains(sigma * s * sigma_inv)) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) found.push_back(sigma);
  } while (std::next_permutation(images.begin(), images.end()));

  // Generate the normaliser from a greedy subset of what the sweep found.
  std::vector<Permutation> gens;
  std::size_t reached = 1;
  for (const auto& sigma : found) {
    if (reached == found.size()) break;
    gens.push_back(sigma);
    const std::size_t now = PermGroup(n, gens).order();
    if (now == reached) {
      gens.pop_back();
    } else {
      reached = now;
    }
  }
  PermGroup normalizer(n, std::move(gens));
  if (normalizer.order() != found.size()) throw Error(Errc::kInvalidGroup, "normaliser sweep is not a group");
  return normalizer;
}

CentreBoundReport centre_bound_report(const PermGroup& g) {
  CentreBoundReport r;
  r.centre_order = centre(g).size();
  const Orbits points = orbits(g, 1);
  const Orbits pairs = orbits(g, 2);
  for (const auto& orbit : points.orbits) {
    const auto rep = static_cast<Point>(orbit.front());
    r.orbit_reps.push_back(rep);
    r.k2_values.push_back(k2_at(pairs, rep));
    r.bound *= r.k2_values.back();
  }
  r.holds = r.centre_order <= r.bound;
  return r;
}

}  // namespace sgd
