#pragma once

// Brute-force first-order model checking over finite groups.

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sgd/formula.hpp"
#include "sgd/group.hpp"

namespace sgd {

struct Environment {
  std::map<Var, Elem> bindings;
};

struct CheckOutcome {
  bool value = false;
  std::uint64_t nodes_visited = 0;
  std::chrono::nanoseconds elapsed{0};
};

enum class MemoMode { kAuto, kOn, kOff };

struct CheckOptions {
  static constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

  /// Formula-node evaluations allowed before kBudgetExceeded.
  std::uint64_t budget = kDefaultBudget;
  /// kAuto memoises when the formula has more than four quantifiers.
  MemoMode memo = MemoMode::kAuto;
  /// Solve ∃x/∀x over an equation in which x occurs once instead of
  /// enumerating x. Never changes the value.
  bool solve_equations = true;
  /// Worker threads for the outermost quantifier of a sentence.
  unsigned jobs = 1;
};

/// Reusable evaluator for one formula over one group. Memo tables persist
/// across calls, so repeated queries with different environments share work.
/// Not thread-safe; use one per thread.
class Evaluator {
 public:
  Evaluator(const Formula& f, const GroupTable& g, const CheckOptions& options = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  /// Throws kUnboundVariable if a free variable is missing from `env`,
  /// kBudgetExceeded when the node budget runs out.
  bool evaluate(const Environment& env);
  std::uint64_t nodes_visited() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Tarskian satisfaction of `f` in `g` under `env`; quantifiers range over
/// elements in ascending index order.
CheckOutcome eval(const Formula& f, const GroupTable& g, const Environment& env,
                  const CheckOptions& options = {});

/// eval with the empty environment. Throws kNotClosed for open formulas.
CheckOutcome check_sentence(const Formula& s, const GroupTable& g, const CheckOptions& options = {});

struct NamedGroup {
  std::string name;
  const GroupTable* table = nullptr;
};

struct UniquenessEntry {
  std::string name;
  std::size_t order = 0;
  bool value = false;
  bool isomorphic_to_target = false;
  std::uint64_t nodes_visited = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct UniquenessReport {
  std::vector<UniquenessEntry> entries;
  /// Entries where value != isomorphic_to_target.
  std::vector<std::string> violators;
  bool target_in_catalog = false;
  bool unique() const { return violators.empty() && target_in_catalog; }
};

/// Checks `s` on every catalog member and expects it true exactly on the
/// members isomorphic to `target`.
UniquenessReport describes_uniquely(const Formula& s, const GroupTable& target,
                                    const std::vector<NamedGroup>& catalog, const CheckOptions& options = {});

}  // namespace sgd
