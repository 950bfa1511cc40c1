#include "sgd/cayley.hpp"

#include <algorithm>
#include <unordered_map>

#include "sgd/error.hpp"

namespace sgd {

CayleyBall::CayleyBall(std::size_t order, Elem identity)
    : distance_(order, kUnreached), parent_(order, identity), letter_(order) {
  distance_[identity] = 0;
  visit_order_.push_back(identity);
}

void CayleyBall::discover(Elem g, Elem parent, Letter letter) {
  distance_[g] = distance_[parent] + 1;
  parent_[g] = parent;
  letter_[g] = letter;
  visit_order_.push_back(g);
  radius_ = std::max(radius_, static_cast<std::uint32_t>(distance_[g]));
}

std::optional<Word> CayleyBall::witness(Elem g) const {
  if (g >= distance_.size() || distance_[g] == kUnreached) return std::nullopt;
  Word w;
  w.letters.resize(static_cast<std::size_t>(distance_[g]));
  for (std::size_t i = w.letters.size(); i-- > 0;) {
    w.letters[i] = letter_[g];
    g = parent_[g];
  }
  return w;
}

namespace {

// Frontier elements are expanded in the order they were discovered, which by
// induction is increasing shortlex order of their witnesses; the first
// discovery of an element is therefore its shortlex-least geodesic.
template <class Step>
CayleyBall run_bfs(std::size_t order, Elem identity, std::uint32_t gen_count, Step step) {
  CayleyBall ball(order, identity);
  for (std::size_t head = 0; head < ball.reached(); ++head) {
    const Elem x = ball.visit_order()[head];
    for (std::uint32_t j = 0; j < gen_count; ++j) {
      for (std::int8_t sign : {std::int8_t{1}, std::int8_t{-1}}) {
        const Letter l{j, sign};
        const Elem y = step(x, l);
        if (ball.distance(y) == CayleyBall::kUnreached) ball.discover(y, x, l);
      }
    }
  }
  return ball;
}

}  // namespace

CayleyBall bfs_words(const GroupTable& g, std::span<const Elem> gens) {
  std::vector<Elem> letters;
  for (Elem x : gens) {
    if (x >= g.order()) throw Error(Errc::kIndexOutOfRange, "generator is not an element");
    letters.push_back(x);
    letters.push_back(g.inv(x));
  }
  return run_bfs(g.order(), g.identity(), static_cast<std::uint32_t>(gens.size()),
                 [&](Elem x, Letter l) { return g.mul(x, letters[letter_rank(l)]); });
}

CayleyBall bfs_words(const PermGroup& g, std::span<const Permutation> gens) {
  std::vector<Permutation> letters;
  for (const auto& x : gens) {
    if (!g.contains(x)) throw Error(Errc::kInvalidInput, "generator is not in the group");
    letters.push_back(x);
    letters.push_back(x.inverse());
  }
  return run_bfs(g.order(), 0, static_cast<std::uint32_t>(gens.size()), [&](Elem x, Letter l) {
    return *g.index_of(g.element(x) * letters[letter_rank(l)]);
  });
}

std::uint32_t cayley_diameter(const GroupTable& g, std::span<const Elem> gens) {
  CayleyBall ball = bfs_words(g, gens);
  if (!ball.covers_group()) throw Error(Errc::kNotGenerating, "generators reach only " +
                                                                  std::to_string(ball.reached()) + " of " +
                                                                  std::to_string(g.order()) + " elements");
  return ball.radius();
}

std::uint32_t cayley_diameter(const PermGroup& g, std::span<const Permutation> gens) {
  CayleyBall ball = bfs_words(g, gens);
  if (!ball.covers_group()) throw Error(Errc::kNotGenerating, "generators reach only " +
                                                                  std::to_string(ball.reached()) + " of " +
                                                                  std::to_string(g.order()) + " elements");
  return ball.radius();
}

std::uint32_t ceil_log2(std::uint64_t d) {
  std::uint32_t v = 0;
  while ((std::uint64_t{1} << v) < d) ++v;
  return v;
}

std::vector<Permutation> three_cycle_decompose(const Permutation& p) {
  if (!p.is_even()) throw Error(Errc::kOddPermutation, p.to_string() + " is odd");
  const std::uint32_t n = p.degree();
  // Peel off 3-cycles s with s∘q fixing one more point; p = s₁⁻¹ s₂⁻¹ … .
  std::vector<Permutation> factors;
  Permutation q = p;
  while (!q.is_identity()) {
    Point a = 0;
    while (q(a) == a) ++a;
    const Point b = q(a);
    Point c = q(b);
    if (c == a) {
      c = 0;
      while (c == a || c == b || q(c) == c) ++c;
    }
    const Permutation s = Permutation::cycle(n, {b, a, c});
    q = s * q;
    factors.push_back(s.inverse());
  }
  return factors;
}

std::vector<Permutation> all_three_cycles(std::uint32_t k) {
  std::vector<Permutation> out;
  for (Point a = 0; a < k; ++a)
    for (Point b = a + 1; b < k; ++b)
      for (Point c = a + 1; c < k; ++c)
        if (c != b) out.push_back(Permutation::cycle(k, {a, b, c}));
  return out;
}

Word express_three_cycle(const Permutation& target, std::span<const Permutation> gens) {
  const std::uint32_t n = target.degree();
  if (target.cycles().size() != 1 || target.support_size() != 3)
    throw Error(Errc::kInvalidInput, target.to_string() + " is not a 3-cycle");
  const Permutation base = Permutation::cycle(n, {0, 1, 2});
  auto base_it = std::find(gens.begin(), gens.end(), base);
  if (base_it == gens.end()) throw Error(Errc::kBaseMissing, "(0 1 2) is not among the generators");
  const auto base_gen = static_cast<std::uint32_t>(base_it - gens.begin());

  struct Visit {
    std::size_t parent;
    Letter letter;
  };
  std::vector<Permutation> states{base, base.inverse()};
  std::vector<Visit> visits{{0, Letter{base_gen, 1}}, {1, Letter{base_gen, -1}}};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{states[0], 0}, {states[1], 1}};
  std::vector<std::pair<Permutation, Permutation>> conj;  // (s, s⁻¹) per letter
  for (std::uint32_t j = 0; j < gens.size(); ++j) {
    conj.emplace_back(gens[j], gens[j].inverse());
    conj.emplace_back(gens[j].inverse(), gens[j]);
  }
  for (std::size_t head = 0; head < states.size() && !seen.contains(target); ++head) {
    for (std::uint32_t r = 0; r < conj.size(); ++r) {
      Permutation next = conj[r].first * states[head] * conj[r].second;
      if (seen.contains(next)) continue;
      seen.emplace(next, states.size());
      states.push_back(std::move(next));
      visits.push_back({head, Letter{r / 2, static_cast<std::int8_t>(r % 2 ? -1 : 1)}});
    }
  }
  auto it = seen.find(target);
  if (it == seen.end())
    throw Error(Errc::kInvalidInput, target.to_string() + " is not conjugate to (0 1 2)^±1 under the generators");

  // Path base → … → target by letters s₁, …, s_m gives s_m…s₁ · b · s₁⁻¹…s_m⁻¹.
  std::vector<Letter> path;
  std::size_t i = it->second;
  while (i > 1) {
    path.push_back(visits[i].letter);
    i = visits[i].parent;
  }
  Word w;
  for (const auto& l : path) w.letters.push_back(l);  // s_m … s₁
  w.letters.push_back(visits[i].letter);
  for (auto r = path.rbegin(); r != path.rend(); ++r) w.letters.push_back(r->inverse());
  return w;
}

std::vector<Permutation> alternating_generators(std::uint32_t k) {
  if (k < 3) throw Error(Errc::kInvalidInput, "A_k with a 3-cycle needs k ≥ 3");
  Cycle long_cycle;
  for (Point x = (k % 2 ? 0 : 1); x < k; ++x) long_cycle.push_back(x);
  return {Permutation::cycle(k, {0, 1, 2}), Permutation::cycle(k, long_cycle)};
}

}  // namespace sgd
