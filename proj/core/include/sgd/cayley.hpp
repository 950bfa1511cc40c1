#pragma once

// Breadth-first search over Cayley graphs, diameters, and the 3-cycle
// machinery for alternating groups.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgd/group.hpp"
#include "sgd/word.hpp"

namespace sgd {

/// Result of a breadth-first search from the identity over the alphabet
/// {x_j, x_j⁻¹}. Witness words are shortlex-least among geodesics, with
/// letters ordered by generator index, then + before −.
class CayleyBall {
 public:
  static constexpr std::int32_t kUnreached = -1;

  CayleyBall(std::size_t order, Elem identity);

  std::size_t order() const noexcept { return distance_.size(); }
  std::size_t reached() const noexcept { return visit_order_.size(); }
  bool covers_group() const noexcept { return reached() == order(); }
  /// kUnreached for elements outside the generated subgroup.
  std::int32_t distance(Elem g) const { return distance_[g]; }
  std::optional<Word> witness(Elem g) const;
  std::uint32_t radius() const noexcept { return radius_; }
  /// Elements in BFS discovery order (the identity first).
  std::span<const Elem> visit_order() const noexcept { return visit_order_; }

  void discover(Elem g, Elem parent, Letter letter);

 private:
  std::vector<std::int32_t> distance_;
  std::vector<Elem> parent_;
  std::vector<Letter> letter_;
  std::vector<Elem> visit_order_;
  std::uint32_t radius_ = 0;
};

CayleyBall bfs_words(const GroupTable& g, std::span<const Elem> gens);
/// Perm-group variant; `gens` must lie in `g`. Element ids are g's indices.
CayleyBall bfs_words(const PermGroup& g, std::span<const Permutation> gens);

/// Largest geodesic distance. Throws kNotGenerating if `gens` do not
/// generate the whole group.
std::uint32_t cayley_diameter(const GroupTable& g, std::span<const Elem> gens);
std::uint32_t cayley_diameter(const PermGroup& g, std::span<const Permutation> gens);

/// Smallest v with 2^v ≥ d (0 for d ≤ 1).
std::uint32_t ceil_log2(std::uint64_t d);

/// Writes an even permutation as a product (composed left to right, like
/// words) of at most degree() 3-cycles. Throws kOddPermutation.
std::vector<Permutation> three_cycle_decompose(const Permutation& p);

/// All 3-cycles on {0, …, k−1}, in lexicographic order of their cycle
/// notation.
std::vector<Permutation> all_three_cycles(std::uint32_t k);

/// A word over `gens` evaluating to the 3-cycle `target`, built as
/// σ·b·σ⁻¹ where b is the base 3-cycle (0 1 2) (or its inverse) and σ is
/// found by breadth-first search over the conjugation action on 3-cycles.
/// Throws kBaseMissing if (0 1 2) is not among `gens`, kInvalidInput if
/// `target` is not a 3-cycle or lies outside the conjugation orbits reached.
Word express_three_cycle(const Permutation& target, std::span<const Permutation> gens);

/// Standard generators of A_k containing (0 1 2): (0 1 2) together with
/// (0 1 … k−1) for odd k or (1 2 … k−1) for even k.
std::vector<Permutation> alternating_generators(std::uint32_t k);

}  // namespace sgd
