#pragma once

// Synthesis of the generation formulas δ_{v,k} and of describing sentences ψ
// built from a presentation, a concrete target group and a diameter exponent.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgd/formula.hpp"
#include "sgd/group.hpp"
#include "sgd/word.hpp"

namespace sgd {

/// Published length constants (unit-cost symbol counts):
///   |δ_{v,k}| ≤ A·k + B·v + C   and   |ψ| ≤ D·(v + ℓ) + E.
/// The δ bound is attained exactly: |δ_{v,k}| = 10k + 17v + 1.
struct SynthConstants {
  static constexpr std::size_t A = 10;
  static constexpr std::size_t B = 17;
  static constexpr std::size_t C = 1;
  static constexpr std::size_t D = 17;
  static constexpr std::size_t E = 12;

  static constexpr std::size_t delta_bound(std::size_t v, std::size_t k) { return A * k + B * v + C; }
  static constexpr std::size_t psi_bound(std::size_t v, std::size_t presentation_length) {
    return D * (v + presentation_length) + E;
  }
};

/// Variable layout shared by δ and ψ: x_j (j = 1..k) is v(j−1), the target
/// element g is v(k), and recursion level i uses u_i, v_i, w_i =
/// v(k+3i−2), v(k+3i−1), v(k+3i).
struct DeltaVars {
  std::uint32_t k;
  Var x(std::uint32_t j) const { return j - 1; }
  Var target() const { return k; }
  Var u(std::uint32_t level) const { return k + 3 * level - 2; }
  Var v(std::uint32_t level) const { return k + 3 * level - 1; }
  Var w(std::uint32_t level) const { return k + 3 * level; }
};

/// δ_{v,k}(g; x_1..x_k): g is a product of at most 2^v letters x_j^{±1}.
/// Level 0 is ⋁_j (g = x_j ∨ g = x_j⁻¹ ∨ g = 1); level i is
/// ∃u∃v [g = u·v ∧ ∀w ((w = u ∨ w = v) → δ_{i−1}(w))], so each level holds
/// one copy of the previous one. Requires k ≥ 1.
Formula delta_formula(std::uint32_t v, std::uint32_t k);

/// Left-associated product of the letters; the empty word is e.
Term word_to_term(const Word& w);

enum class Variant {
  /// Guard x_1 ≠ 1; the target must be simple.
  kSimple,
  /// Guard "at least three elements"; every nontrivial normal subgroup of the
  /// target must have index ≤ 2.
  kAtLeast3,
  /// Guard x_1 ≠ 1; x_1 must lie in every nontrivial normal subgroup of the
  /// target, so that no proper quotient keeps x_1 nontrivial.
  kMonolithic,
};

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

struct DescriptionJob {
  Presentation presentation;
  std::shared_ptr<const GroupTable> target;
  /// Images of x_1..x_k in the target.
  std::vector<Elem> assignment;
  /// Asserted diameter bound 2^v.
  std::uint32_t v = 0;
  Variant variant = Variant::kSimple;
  /// When false the structural guard precondition (simplicity, monolith or
  /// quotient-size check) is skipped; the presentation checks still apply.
  bool enforce_guard = true;
};

struct PresentationReport {
  bool relators_ok = false;
  std::vector<std::size_t> failing_relators;
  bool generates = false;
  std::size_t subgroup_order = 0;
  /// Radius of the Cayley ball of the generated subgroup.
  std::uint32_t diameter = 0;
  bool v_ok = false;

  bool ok() const { return relators_ok && generates && v_ok; }
};

/// Never throws for a well-formed job; failures are report content.
PresentationReport verify_presentation(const DescriptionJob& job);

/// ∃x_1…∃x_k [guard ∧ ⋀ r_i = 1 ∧ ∀g δ_{v,k}(g; x̄)]. Empty relators are
/// omitted. Throws kPresentationFails, kDiameterExceeded, kNotSimple or
/// kGuardInsufficient when a precondition fails.
Formula describing_sentence(const DescriptionJob& job);

/// ∃a∃b (a ≠ 1 ∧ b ≠ 1 ∧ a ≠ b) over the given variables.
Formula at_least_three_elements(Var a, Var b);

}  // namespace sgd
