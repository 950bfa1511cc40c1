#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sgd {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

/// A bijection on {0, …, degree−1}. Products compose right to left:
/// (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::uint32_t degree);
  /// Throws Errc::kInvalidInput unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::uint32_t degree, std::span<const Cycle> cycles);
  static Permutation cycle(std::uint32_t degree, const Cycle& points);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_even() const;
  std::uint64_t order() const;
  Permutation inverse() const;
  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<Cycle> cycles() const;
  /// Number of points moved.
  std::size_t support_size() const noexcept;
  /// Cycle notation, e.g. "(0 1)(2 3)"; the identity renders as "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sgd
