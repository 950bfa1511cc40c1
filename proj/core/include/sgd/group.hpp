#pragma once

// Finite groups: explicit multiplication tables and permutation groups given
// by generators. A PermGroup enumerates its elements on construction; its
// table() numbers elements in lexicographic order of their image lists, so
// the identity is always element 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sgd/permutation.hpp"

namespace sgd {

using Elem = std::uint32_t;

class GroupTable {
 public:
  /// Validates that `rows` is the Cayley table of a group: a Latin square with
  /// a two-sided identity and, for order ≤ 256, associativity on every
  /// triple (10⁵ seeded random triples above that). Throws kInvalidGroup.
  explicit GroupTable(const std::vector<std::vector<Elem>>& rows);
  /// Same checks on a row-major flat table.
  GroupTable(std::size_t order, std::vector<Elem> flat);

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem identity() const noexcept { return identity_; }
  std::span<const Elem> row(Elem a) const { return {table_.data() + static_cast<std::size_t>(a) * n_, n_}; }
  std::span<const Elem> flat() const noexcept { return table_; }

  Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem power(Elem a, std::uint64_t e) const;
  std::uint32_t element_order(Elem a) const;
  std::vector<std::uint32_t> element_orders() const;
  bool is_abelian() const;
  /// Subgroup generated by `gens`, as a sorted element list.
  std::vector<Elem> subgroup(std::span<const Elem> gens) const;

  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  void validate();

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
};

class PermGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 2'000'000;

  /// Enumerates ⟨generators⟩. An empty generator list gives the trivial
  /// group. Throws kSizeLimit if the closure exceeds `max_order`.
  PermGroup(std::uint32_t degree, std::vector<Permutation> generators,
            std::size_t max_order = kDefaultMaxOrder);

  std::uint32_t degree() const noexcept { return degree_; }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  /// Sorted; the identity is first.
  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation& element(Elem i) const { return elements_[i]; }
  std::optional<Elem> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_.contains(p); }
  /// Indices of the generators within elements().
  std::vector<Elem> generator_indices() const;

  /// Multiplication table in the elements() numbering.
  GroupTable table() const;

 private:
  std::uint32_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermutationHash> index_;
};

}  // namespace sgd
