#include "sgd/permutation.hpp"

#include <numeric>

#include "sgd/error.hpp"

namespace sgd {

Permutation::Permutation(std::uint32_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(Errc::kInvalidInput, "image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::uint32_t degree, std::span<const Cycle> cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Point a = c[i];
      if (a >= degree) throw Error(Errc::kInvalidInput, "cycle point out of range");
      if (used[a]) throw Error(Errc::kInvalidInput, "cycles are not disjoint");
      used[a] = true;
      images[a] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(std::uint32_t degree, const Cycle& points) {
  return from_cycles(degree, std::span<const Cycle>(&points, 1));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    Cycle c;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t Permutation::support_size() const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] != i;
  return n;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error(Errc::kInvalidInput, "degree mismatch in product");
  Permutation r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < q.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sgd
