#pragma once

// Named small groups built from construction recipes.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgd/group.hpp"

namespace sgd {

enum class ConstructionKind {
  kCyclic,
  kDihedral,
  kSymmetric,
  kAlternating,
  kQuaternion,
  kDirectProduct,
  kPsl2,
  kWreathC2,
  kFromFile,
};

const char* construction_kind_name(ConstructionKind k);
std::optional<ConstructionKind> parse_construction_kind(std::string_view name);

struct Construction {
  ConstructionKind kind = ConstructionKind::kCyclic;
  /// Degree parameter: n for C_n, D_n (order 2n), S_n, A_n; q for PSL_2(q);
  /// m for C_2 ≀ S_m.
  std::uint32_t n = 0;
  std::vector<Construction> factors;
  std::string path;

  static Construction cyclic(std::uint32_t n) { return {ConstructionKind::kCyclic, n, {}, {}}; }
  static Construction dihedral(std::uint32_t n) { return {ConstructionKind::kDihedral, n, {}, {}}; }
  static Construction symmetric(std::uint32_t n) { return {ConstructionKind::kSymmetric, n, {}, {}}; }
  static Construction alternating(std::uint32_t n) { return {ConstructionKind::kAlternating, n, {}, {}}; }
  static Construction quaternion() { return {ConstructionKind::kQuaternion, 0, {}, {}}; }
  static Construction product(std::vector<Construction> f) { return {ConstructionKind::kDirectProduct, 0, std::move(f), {}}; }
  static Construction psl2(std::uint32_t q) { return {ConstructionKind::kPsl2, q, {}, {}}; }
  static Construction wreath_c2(std::uint32_t m) { return {ConstructionKind::kWreathC2, m, {}, {}}; }
  static Construction from_file(std::string p) { return {ConstructionKind::kFromFile, 0, {}, std::move(p)}; }
};

/// Known order of the construction; nullopt for from-file recipes.
std::optional<std::size_t> expected_order(const Construction& c);
std::string describe(const Construction& c);

/// Natural permutation actions: C_n regular, D_n on the n-gon, S_n and A_n on
/// n points, Q_8 regular, products on disjoint unions, PSL_2(q) on the
/// projective line, C_2 ≀ S_m on m blocks of two.
PermGroup cyclic_group(std::uint32_t n);
PermGroup dihedral_group(std::uint32_t n);
PermGroup symmetric_group(std::uint32_t n);
PermGroup alternating_group(std::uint32_t n);
PermGroup quaternion_group();
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
PermGroup wreath_c2(std::uint32_t m);

struct CatalogEntrySpec {
  std::string name;
  Construction construction;
  /// Checked against the realized group when present.
  std::optional<std::size_t> declared_order;
};

struct CatalogEntry {
  std::string name;
  Construction construction;
  /// Absent only for table-backed from-file groups.
  std::optional<PermGroup> perm;
  std::shared_ptr<const GroupTable> table;
  std::string provenance;

  std::size_t order() const { return table->order(); }
};

/// Throws kInvalidGroup on an order mismatch, kInvalidInput on a duplicate
/// name, kIo for unreadable from-file entries.
CatalogEntry realize(const CatalogEntrySpec& spec);
std::vector<CatalogEntry> build_catalog(const std::vector<CatalogEntrySpec>& spec);

/// C_1..C_12, D_3..D_12, S_1..S_6, A_3..A_6, Q_8, C_2×C_2, C_2×C_4,
/// C_2×C_2×C_2, A_4×C_2, PSL_2(5), PSL_2(7).
std::vector<CatalogEntrySpec> default_catalog_spec();

}  // namespace sgd
