#pragma once

// First-order language of groups: terms over (·, ⁻¹, 1) and formulas over
// (=, ¬, ∧, ∨, →, ∀, ∃). Nodes are immutable and shared, so copying a Term or
// Formula is cheap and values can be read from any thread.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgd {

using Var = std::uint32_t;

class Term {
 public:
  enum class Kind : std::uint8_t { kOne, kVar, kMul, kInv };

  /// The identity constant.
  Term();

  static Term one();
  static Term var(Var index);
  static Term mul(Term left, Term right);
  static Term inv(Term arg);

  Kind kind() const noexcept;
  /// Variable index; only meaningful for kVar.
  Var var_index() const noexcept;
  /// Left factor of kMul, or the argument of kInv.
  const Term& left() const;
  const Term& right() const;
  const Term& arg() const { return left(); }

  std::size_t node_count() const noexcept;
  std::size_t depth() const noexcept;
  void collect_vars(std::set<Var>& out) const;
  std::set<Var> vars() const;
  /// Number of occurrences of `v`.
  std::size_t occurrences(Var v) const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { kEq, kNot, kAnd, kOr, kImplies, kForall, kExists };

  static Formula eq(Term lhs, Term rhs);
  /// Sugar for ¬(lhs = rhs).
  static Formula neq(Term lhs, Term rhs);
  static Formula negation(Formula f);
  /// n-ary conjunction; nested conjunctions are flattened. Throws on an
  /// empty list.
  static Formula conj(std::vector<Formula> items);
  static Formula disj(std::vector<Formula> items);
  static Formula implies(Formula premise, Formula conclusion);
  static Formula forall(Var v, Formula body);
  static Formula exists(Var v, Formula body);

  Kind kind() const noexcept;
  bool is_quantifier() const noexcept {
    return kind() == Kind::kForall || kind() == Kind::kExists;
  }

  // kEq
  const Term& lhs() const;
  const Term& rhs() const;
  // kNot, kAnd, kOr, kImplies (premise, conclusion)
  std::span<const Formula> children() const;
  // kForall, kExists
  Var bound_var() const;
  const Formula& body() const;

  std::set<Var> free_vars() const;
  bool is_sentence() const { return free_vars().empty(); }
  /// Every variable index occurring anywhere, bound or free.
  std::set<Var> all_vars() const;

  /// Stable identity of the underlying node, used as a memo key.
  const void* node_id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Length of a formula under the unit-cost convention: every AST node
/// (quantifier, connective, =, ·, ⁻¹, e, variable occurrence) is one symbol.
struct LengthReport {
  std::size_t symbol_count = 0;
  std::size_t quantifier_count = 0;
  /// Distinct variable indices, bound or free.
  std::size_t variable_count = 0;
  /// Longest root-to-leaf path counted in nodes.
  std::size_t depth = 0;
};

LengthReport length(const Formula& f);

std::string render(const Term& t);
std::string render(const Formula& f);

/// Parses one formula. Text may contain ';' line comments. Throws ParseError.
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

/// Capture-avoiding substitution of `t` for free occurrences of `v`.
Term substitute(const Term& term, Var v, const Term& t);
Formula substitute(const Formula& f, Var v, const Term& t);

}  // namespace sgd
