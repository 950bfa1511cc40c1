#pragma once

// Projective special linear groups over small finite fields, acting on
// projective points, and the elementary-transvection word check.

#include <cstdint>
#include <vector>

#include "sgd/group.hpp"

namespace sgd {

/// GF(q) for a prime power q ≤ 256. Elements are 0..q−1, read as base-p
/// digit vectors of polynomials modulo a fixed monic irreducible of degree e.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  /// Throws kInvalidInput for 0.
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t q_, p_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

struct ProjectiveGroup {
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  /// Normalised representatives: first nonzero coordinate is 1.
  std::vector<std::vector<std::uint32_t>> points;
  /// Images of E_ij(λ) = I + λ·e_ij (i ≠ j, λ ≠ 0) in point order.
  std::vector<Permutation> elementary;
  PermGroup group;
};

/// q^{n(n−1)/2}·∏_{i=2..n}(q^i − 1) / gcd(n, q−1).
std::uint64_t psl_order(std::uint32_t n, std::uint32_t q);

inline constexpr std::size_t kPslMaxOrder = 100'000;

/// PSL_n(q) on the points of PG(n−1, q). Throws kSizeLimit above max_order.
ProjectiveGroup psl(std::uint32_t n, std::uint32_t q, std::size_t max_order = kPslMaxOrder);

struct RowReductionReport {
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::size_t order = 0;
  std::size_t alphabet_size = 0;
  /// Longest shortest word over the elementary transvection images.
  std::uint32_t max_length = 0;
  std::uint32_t bound = 0;
  bool holds = false;
};

RowReductionReport psl_row_reduction_check(std::uint32_t n, std::uint32_t q, std::size_t max_order = kPslMaxOrder);

}  // namespace sgd
