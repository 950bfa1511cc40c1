#include "sgd/catalog.hpp"

#include <array>
#include <set>

#include "sgd/cayley.hpp"
#include "sgd/error.hpp"
#include "sgd/io.hpp"
#include "sgd/psl.hpp"

namespace sgd {

namespace {

constexpr std::array<std::pair<ConstructionKind, const char*>, 9> kKindNames{{
    {ConstructionKind::kCyclic, "cyclic"},
    {ConstructionKind::kDihedral, "dihedral"},
    {ConstructionKind::kSymmetric, "symmetric"},
    {ConstructionKind::kAlternating, "alternating"},
    {ConstructionKind::kQuaternion, "quaternion"},
    {ConstructionKind::kDirectProduct, "direct_product"},
    {ConstructionKind::kPsl2, "psl2"},
    {ConstructionKind::kWreathC2, "wreath_c2"},
    {ConstructionKind::kFromFile, "file"},
}};

std::size_t factorial(std::uint32_t n) {
  std::size_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation shifted(const Permutation& p, std::uint32_t offset, std::uint32_t degree) {
  std::vector<Point> images(degree);
  for (Point x = 0; x < degree; ++x) images[x] = x;
  for (Point x = 0; x < p.degree(); ++x) images[x + offset] = p(x) + offset;
  return Permutation(std::move(images));
}

PermGroup realize_perm(const Construction& c) {
  switch (c.kind) {
    case ConstructionKind::kCyclic: return cyclic_group(c.n);
    case ConstructionKind::kDihedral: return dihedral_group(c.n);
    case ConstructionKind::kSymmetric: return symmetric_group(c.n);
    case ConstructionKind::kAlternating: return alternating_group(c.n);
    case ConstructionKind::kQuaternion: return quaternion_group();
    case ConstructionKind::kPsl2: return psl(2, c.n).group;
    case ConstructionKind::kWreathC2: return wreath_c2(c.n);
    case ConstructionKind::kDirectProduct: {
      if (c.factors.empty()) throw Error(Errc::kInvalidInput, "direct product needs factors");
      PermGroup g = realize_perm(c.factors.front());
      for (std::size_t i = 1; i < c.factors.size(); ++i) g = direct_product(g, realize_perm(c.factors[i]));
      return g;
    }
    case ConstructionKind::kFromFile: break;
  }
  throw Error(Errc::kInvalidInput, "construction has no permutation realization");
}

}  // namespace

const char* construction_kind_name(ConstructionKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

std::optional<ConstructionKind> parse_construction_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames)
    if (name == n) return kind;
  return std::nullopt;
}

std::optional<std::size_t> expected_order(const Construction& c) {
  switch (c.kind) {
    case ConstructionKind::kCyclic: return std::max<std::size_t>(c.n, 1);
    case ConstructionKind::kDihedral: return 2 * std::size_t{c.n};
    case ConstructionKind::kSymmetric: return factorial(c.n);
    case ConstructionKind::kAlternating: return c.n < 2 ? 1 : factorial(c.n) / 2;
    case ConstructionKind::kQuaternion: return 8;
    case ConstructionKind::kPsl2: return psl_order(2, c.n);
    case ConstructionKind::kWreathC2: return (std::size_t{1} << c.n) * factorial(c.n);
    case ConstructionKind::kDirectProduct: {
      std::size_t order = 1;
      for (const auto& f : c.factors) {
        const auto o = expected_order(f);
        if (!o) return std::nullopt;
        order *= *o;
      }
      return order;
    }
    case ConstructionKind::kFromFile: return std::nullopt;
  }
  return std::nullopt;
}

std::string describe(const Construction& c) {
  const std::string n = std::to_string(c.n);
  switch (c.kind) {
    case ConstructionKind::kCyclic: return "C_" + n + ", regular action of an " + n + "-cycle";
    case ConstructionKind::kDihedral: return "D_" + n + " of order " + std::to_string(2 * c.n) + ", symmetries of the " + n + "-gon";
    case ConstructionKind::kSymmetric: return "S_" + n + " on " + n + " points";
    case ConstructionKind::kAlternating: return "A_" + n + " on " + n + " points";
    case ConstructionKind::kQuaternion: return "Q_8, regular action on ±1, ±i, ±j, ±k";
    case ConstructionKind::kPsl2: return "PSL_2(" + n + ") on the projective line";
    case ConstructionKind::kWreathC2: return "C_2 wr S_" + n + " on " + n + " blocks of size 2";
    case ConstructionKind::kDirectProduct: {
      std::string s = "direct product of [";
      for (std::size_t i = 0; i < c.factors.size(); ++i) s += (i ? "; " : "") + describe(c.factors[i]);
      return s + "] on the disjoint union";
    }
    case ConstructionKind::kFromFile: return "loaded from " + c.path;
  }
  return "?";
}

PermGroup cyclic_group(std::uint32_t n) {
  if (n == 0) throw Error(Errc::kInvalidInput, "C_0 is not a finite group");
  if (n == 1) return PermGroup(1, {});
  Cycle c(n);
  for (Point i = 0; i < n; ++i) c[i] = i;
  return PermGroup(n, {Permutation::cycle(n, c)});
}

PermGroup dihedral_group(std::uint32_t n) {
  if (n < 3) throw Error(Errc::kInvalidInput, "dihedral groups start at the triangle");
  std::vector<Point> rotation(n), reflection(n);
  for (Point i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return PermGroup(n, {Permutation(std::move(rotation)), Permutation(std::move(reflection))});
}

PermGroup symmetric_group(std::uint32_t n) {
  if (n == 0) throw Error(Errc::kInvalidInput, "S_0 is not supported");
  if (n == 1) return PermGroup(1, {});
  if (n == 2) return PermGroup(2, {Permutation::cycle(2, {0, 1})});
  Cycle all(n);
  for (Point i = 0; i < n; ++i) all[i] = i;
  return PermGroup(n, {Permutation::cycle(n, {0, 1}), Permutation::cycle(n, all)});
}

PermGroup alternating_group(std::uint32_t n) {
  if (n == 0) throw Error(Errc::kInvalidInput, "A_0 is not supported");
  if (n < 3) return PermGroup(n, {});
  if (n == 3) return PermGroup(3, {Permutation::cycle(3, {0, 1, 2})});
  return PermGroup(n, alternating_generators(n));
}

PermGroup quaternion_group() {
  // Point 2b + s is (−1)^s·u_b with u = (1, i, j, k).
  constexpr int kUnit[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto left = [&](int b) {
    std::vector<Point> images(8);
    for (int c = 0; c < 4; ++c)
      for (int s = 0; s < 2; ++s) {
        const auto& [d, t] = kUnit[b][c];
        images[2 * c + s] = static_cast<Point>(2 * d + ((s + t) & 1));
      }
    return Permutation(std::move(images));
  };
  return PermGroup(8, {left(1), left(2)});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::uint32_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(shifted(g, 0, degree));
  for (const auto& g : b.generators()) gens.push_back(shifted(g, a.degree(), degree));
  return PermGroup(degree, std::move(gens));
}

PermGroup wreath_c2(std::uint32_t m) {
  if (m == 0) throw Error(Errc::kInvalidInput, "wreath product needs at least one block");
  const std::uint32_t degree = 2 * m;
  std::vector<Permutation> gens{Permutation::cycle(degree, {0, 1})};
  if (m >= 2) {
    Cycle evens, odds;
    for (Point i = 0; i < m; ++i) {
      evens.push_back(2 * i);
      odds.push_back(2 * i + 1);
    }
    const std::vector<Cycle> swap{{0, 2}, {1, 3}};
    gens.push_back(Permutation::from_cycles(degree, swap));
    if (m >= 3) {
      const std::vector<Cycle> rotate{evens, odds};
      gens.push_back(Permutation::from_cycles(degree, rotate));
    }
  }
  return PermGroup(degree, std::move(gens));
}

CatalogEntry realize(const CatalogEntrySpec& spec) {
  CatalogEntry e;
  e.name = spec.name;
  e.construction = spec.construction;
  e.provenance = describe(spec.construction);
  if (spec.construction.kind == ConstructionKind::kFromFile) {
    LoadedGroup loaded = load_group_file(spec.construction.path);
    e.perm = std::move(loaded.perm);
    e.table = std::make_shared<const GroupTable>(std::move(loaded.table));
  } else {
    e.perm = realize_perm(spec.construction);
    e.table = std::make_shared<const GroupTable>(e.perm->table());
  }
  for (const auto& expected : {expected_order(spec.construction), spec.declared_order}) {
    if (expected && *expected != e.table->order())
      throw Error(Errc::kInvalidGroup, spec.name + " has order " + std::to_string(e.table->order()) + ", expected " +
                                           std::to_string(*expected));
  }
  return e;
}

std::vector<CatalogEntry> build_catalog(const std::vector<CatalogEntrySpec>& spec) {
  std::set<std::string> names;
  std::vector<CatalogEntry> out;
  out.reserve(spec.size());
  for (const auto& s : spec) {
    if (!names.insert(s.name).second) throw Error(Errc::kInvalidInput, "duplicate catalog name " + s.name);
    out.push_back(realize(s));
  }
  return out;
}

std::vector<CatalogEntrySpec> default_catalog_spec() {
  using C = Construction;
  std::vector<CatalogEntrySpec> spec;
  for (std::uint32_t n = 1; n <= 12; ++n) spec.push_back({"c" + std::to_string(n), C::cyclic(n), {}});
  for (std::uint32_t n = 3; n <= 12; ++n) spec.push_back({"d" + std::to_string(n), C::dihedral(n), {}});
  for (std::uint32_t n = 2; n <= 6; ++n) spec.push_back({"s" + std::to_string(n), C::symmetric(n), {}});
  for (std::uint32_t n = 3; n <= 6; ++n) spec.push_back({"a" + std::to_string(n), C::alternating(n), {}});
  spec.push_back({"q8", C::quaternion(), {}});
  spec.push_back({"c2xc2", C::product({C::cyclic(2), C::cyclic(2)}), {}});
  spec.push_back({"c2xc4", C::product({C::cyclic(2), C::cyclic(4)}), {}});
  spec.push_back({"c2xc2xc2", C::product({C::cyclic(2), C::cyclic(2), C::cyclic(2)}), {}});
  spec.push_back({"a4xc2", C::product({C::alternating(4), C::cyclic(2)}), {}});
  spec.push_back({"psl2_5", C::psl2(5), {}});
  spec.push_back({"psl2_7", C::psl2(7), {}});
  return spec;
}

}  // namespace sgd
