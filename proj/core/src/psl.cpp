#include "sgd/psl.hpp"

#include <numeric>
#include <unordered_map>

#include "sgd/cayley.hpp"
#include "sgd/error.hpp"

namespace sgd {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Coefficients little-endian, base p.
std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t e) {
  std::vector<std::uint32_t> d(e);
  for (auto& x : d) {
    x = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

// Product of two polynomials of degree < e, reduced by the monic `modulus`
// (the e low coefficients; leading 1 implicit).
std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t e = modulus.size();
  std::vector<std::uint32_t> r(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t deg = 2 * e - 1; deg >= e; --deg) {
    const std::uint32_t c = r[deg];
    if (c == 0) continue;
    r[deg] = 0;
    for (std::size_t i = 0; i < e; ++i) r[deg - e + i] = (r[deg - e + i] + p * p - c * modulus[i] % p) % p;
  }
  r.resize(e);
  return r;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q), p_(0) {
  if (q < 2 || q > 256) throw Error(Errc::kInvalidInput, "field order must lie in 2..256");
  std::uint32_t e = 0;
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0 || !is_prime(p)) continue;
    std::uint32_t m = q;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (m != 1) throw Error(Errc::kInvalidInput, std::to_string(q) + " is not a prime power");
    p_ = p;
    break;
  }

  // Monic irreducible modulus of degree e: the first one without zero divisors.
  std::vector<std::uint32_t> modulus(e, 0);
  auto has_zero_divisor = [&](const std::vector<std::uint32_t>& mod) {
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b)
        if (undigits(poly_mul(digits(a, p_, e), digits(b, p_, e), mod, p_), p_) == 0) return true;
    return false;
  };
  if (e > 1) {
    for (std::uint32_t c = 0; c < q; ++c) {
      modulus = digits(c, p_, e);
      if (!has_zero_divisor(modulus)) break;
    }
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto da = digits(a, p_, e);
    std::vector<std::uint32_t> dn(e);
    for (std::uint32_t i = 0; i < e; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn, p_);
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto db = digits(b, p_, e);
      std::vector<std::uint32_t> ds(e);
      for (std::uint32_t i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = undigits(ds, p_);
      mul_[a * q + b] = e == 1 ? (a * b) % p_ : undigits(poly_mul(da, db, modulus, p_), p_);
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(Errc::kInvalidInput, "zero has no inverse");
  return inv_[a];
}

std::uint64_t psl_order(std::uint32_t n, std::uint32_t q) {
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < n * (n - 1) / 2; ++i) order *= q;
  for (std::uint32_t i = 2; i <= n; ++i) {
    std::uint64_t qi = 1;
    for (std::uint32_t j = 0; j < i; ++j) qi *= q;
    order *= qi - 1;
  }
  return order / std::gcd<std::uint64_t>(n, q - 1);
}

ProjectiveGroup psl(std::uint32_t n, std::uint32_t q, std::size_t max_order) {
  if (n < 2 || n > 4) throw Error(Errc::kInvalidInput, "dimension must lie in 2..4");
  const FiniteField f(q);
  const std::uint64_t expected = psl_order(n, q);
  if (expected > max_order)
    throw Error(Errc::kSizeLimit, "PSL_" + std::to_string(n) + "(" + std::to_string(q) + ") has " +
                                      std::to_string(expected) + " elements, limit " + std::to_string(max_order));

  std::vector<std::vector<std::uint32_t>> points;
  std::unordered_map<std::uint64_t, Point> index;
  auto key = [&](const std::vector<std::uint32_t>& v) {
    std::uint64_t k = 0;
    for (auto c : v) k = k * q + c;
    return k;
  };
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= q;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<std::uint32_t> v(n);
    std::uint64_t c = code;
    for (std::uint32_t i = n; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    std::uint32_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    index.emplace(key(v), static_cast<Point>(points.size()));
    points.push_back(std::move(v));
  }

  auto normalise = [&](std::vector<std::uint32_t> v) {
    std::uint32_t lead = 0;
    while (v[lead] == 0) ++lead;
    const std::uint32_t s = f.inv(v[lead]);
    for (auto& c : v) c = f.mul(c, s);
    return v;
  };

  const auto degree = static_cast<std::uint32_t>(points.size());
  std::vector<Permutation> elementary;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::uint32_t lambda = 1; lambda < q; ++lambda) {
        // (I + λ e_ij)·p adds λ·p_j to coordinate i.
        std::vector<Point> images(degree);
        for (Point x = 0; x < degree; ++x) {
          auto v = points[x];
          v[i] = f.add(v[i], f.mul(lambda, v[j]));
          images[x] = index.at(key(normalise(std::move(v))));
        }
        elementary.emplace_back(std::move(images));
      }
    }
  }
  PermGroup group(degree, elementary, expected);
  if (group.order() != expected)
    throw Error(Errc::kInvalidGroup, "transvections generate " + std::to_string(group.order()) + " elements, expected " +
                                         std::to_string(expected));
  return ProjectiveGroup{n, q, std::move(points), std::move(elementary), std::move(group)};
}

RowReductionReport psl_row_reduction_check(std::uint32_t n, std::uint32_t q, std::size_t max_order) {
  const ProjectiveGroup g = psl(n, q, max_order);
  const CayleyBall ball = bfs_words(g.group, g.elementary);
  RowReductionReport r;
  r.n = n;
  r.q = q;
  r.order = g.group.order();
  r.alphabet_size = g.elementary.size();
  r.max_length = ball.radius();
  r.bound = n * n;
  r.holds = ball.covers_group() && r.max_length <= r.bound;
  return r;
}

}  // namespace sgd
