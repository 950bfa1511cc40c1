#pragma once

// Independent reference implementations used to cross-check the library.
// None of these call the code they are compared against.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sgd/formula.hpp"
#include "sgd/group.hpp"

namespace oracle {

using sgd::Elem;
using sgd::Formula;
using sgd::GroupTable;
using sgd::Term;
using sgd::Var;

// Symbol count read off the rendered S-expression: one per '(' plus one per
// leaf atom, minus the variable that follows each quantifier keyword.
inline std::size_t token_count(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')') {
      flush();
      tokens.emplace_back(1, c);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  std::size_t count = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (t == "(") {
      ++count;
      ++i;  // head symbol
      if (tokens[i] == "forall" || tokens[i] == "exists") ++i;
    } else if (t != ")") {
      ++count;
    }
  }
  return count;
}

inline Elem eval_term(const Term& t, const GroupTable& g, const std::map<Var, Elem>& env) {
  switch (t.kind()) {
    case Term::Kind::kOne: return g.identity();
    case Term::Kind::kVar: return env.at(t.var_index());
    case Term::Kind::kMul: return g.mul(eval_term(t.left(), g, env), eval_term(t.right(), g, env));
    case Term::Kind::kInv: return g.inv(eval_term(t.arg(), g, env));
  }
  return g.identity();
}

// Evaluates every child of every connective and every quantifier instance;
// no short-circuit, no memo, no equation solving.
inline bool eval_full(const Formula& f, const GroupTable& g, std::map<Var, Elem>& env) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kEq: return eval_term(f.lhs(), g, env) == eval_term(f.rhs(), g, env);
    case K::kNot: return !eval_full(f.children()[0], g, env);
    case K::kAnd: {
      bool all = true;
      for (const auto& c : f.children()) all = eval_full(c, g, env) && all;
      return all;
    }
    case K::kOr: {
      bool any = false;
      for (const auto& c : f.children()) any = eval_full(c, g, env) || any;
      return any;
    }
    case K::kImplies: {
      const bool p = eval_full(f.children()[0], g, env);
      const bool q = eval_full(f.children()[1], g, env);
      return !p || q;
    }
    case K::kForall:
    case K::kExists: {
      const Var v = f.bound_var();
      const auto saved = env.find(v) == env.end() ? std::optional<Elem>{} : std::optional<Elem>{env[v]};
      std::size_t hits = 0;
      for (Elem x = 0; x < g.order(); ++x) {
        env[v] = x;
        hits += eval_full(f.body(), g, env) ? 1 : 0;
      }
      if (saved) env[v] = *saved; else env.erase(v);
      return f.kind() == K::kForall ? hits == g.order() : hits > 0;
    }
  }
  return false;
}

// B_r = {products of at most r letters from gens ∪ gens⁻¹}, grown by
// brute-force multiplication of whole sets.
inline std::vector<std::set<Elem>> product_balls(const GroupTable& g, const std::vector<Elem>& gens,
                                                 std::size_t radius) {
  std::vector<Elem> alphabet;
  for (Elem x : gens) {
    alphabet.push_back(x);
    alphabet.push_back(g.inv(x));
  }
  std::vector<std::set<Elem>> balls{{g.identity()}};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::set<Elem> next = balls.back();
    for (Elem a : balls.back())
      for (Elem b : alphabet) next.insert(g.mul(a, b));
    balls.push_back(std::move(next));
  }
  return balls;
}

// Plain backtracking over bijections, extending one element at a time and
// rejecting as soon as a defined product is not preserved.
inline bool isomorphic_brute(const GroupTable& a, const GroupTable& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::vector<Elem> order(n);
  for (Elem i = 0; i < n; ++i) order[i] = i;
  auto consistent = [&](Elem x) {
    for (Elem y = 0; y < n; ++y) {
      if (map[y] < 0) continue;
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        const Elem pq = a.mul(p, q);
        if (map[pq] >= 0 && static_cast<Elem>(map[pq]) != b.mul(map[p], map[q])) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    const Elem x = order[i];
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || a.element_order(x) != b.element_order(y)) continue;
      map[x] = static_cast<int>(y);
      used[y] = true;
      if (consistent(x) && self(self, i + 1)) return true;
      map[x] = -1;
      used[y] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

struct RandomFormulas {
  std::mt19937_64 rng;
  Var var_limit = 4;

  explicit RandomFormulas(std::uint64_t seed) : rng(seed) {}

  std::uint32_t pick(std::uint32_t n) { return std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng); }

  Term term(int depth) {
    const std::uint32_t c = depth <= 0 ? pick(2) : pick(4);
    switch (c) {
      case 0: return Term::var(pick(var_limit));
      case 1: return pick(4) == 0 ? Term::one() : Term::var(pick(var_limit));
      case 2: return Term::mul(term(depth - 1), term(depth - 1));
      default: return Term::inv(term(depth - 1));
    }
  }

  Formula formula(int depth, int quantifiers) {
    const std::uint32_t c = depth <= 0 ? 0 : pick(quantifiers > 0 ? 7 : 5);
    switch (c) {
      case 0: return Formula::eq(term(2), term(2));
      case 1: return Formula::negation(formula(depth - 1, quantifiers));
      case 2: return Formula::conj({formula(depth - 1, quantifiers), formula(depth - 1, quantifiers)});
      case 3: return Formula::disj({formula(depth - 1, quantifiers), formula(depth - 1, quantifiers)});
      case 4: return Formula::implies(formula(depth - 1, quantifiers), formula(depth - 1, quantifiers));
      case 5: return Formula::forall(pick(var_limit), formula(depth - 1, quantifiers - 1));
      default: return Formula::exists(pick(var_limit), formula(depth - 1, quantifiers - 1));
    }
  }
};

inline std::size_t quantifier_depth(const Formula& f) {
  if (f.kind() == Formula::Kind::kEq) return 0;
  if (f.is_quantifier()) return 1 + quantifier_depth(f.body());
  std::size_t d = 0;
  for (const auto& c : f.children()) d = std::max(d, quantifier_depth(c));
  return d;
}

}  // namespace oracle
