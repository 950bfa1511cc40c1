#include "sgd/synth.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgd/cayley.hpp"
#include "sgd/error.hpp"
#include "sgd/structure.hpp"

namespace sgd {

namespace {

Formula delta_level(const DeltaVars& vars, std::uint32_t level, Var g) {
  const Term target = Term::var(g);
  if (level == 0) {
    std::vector<Formula> cases;
    for (std::uint32_t j = 1; j <= vars.k; ++j) {
      const Term x = Term::var(vars.x(j));
      cases.push_back(Formula::eq(target, x));
      cases.push_back(Formula::eq(target, Term::inv(x)));
      cases.push_back(Formula::eq(target, Term::one()));
    }
    return Formula::disj(std::move(cases));
  }
  const Var u = vars.u(level), v = vars.v(level), w = vars.w(level);
  Formula shared = Formula::forall(
      w, Formula::implies(Formula::disj({Formula::eq(Term::var(w), Term::var(u)),
                                         Formula::eq(Term::var(w), Term::var(v))}),
                          delta_level(vars, level - 1, w)));
  return Formula::exists(
      u, Formula::exists(v, Formula::conj({Formula::eq(target, Term::mul(Term::var(u), Term::var(v))),
                                           std::move(shared)})));
}

}  // namespace

Formula delta_formula(std::uint32_t v, std::uint32_t k) {
  if (k == 0) throw Error(Errc::kInvalidInput, "δ needs at least one generator");
  const DeltaVars vars{k};
  Formula f = delta_level(vars, v, vars.target());
  if (length(f).symbol_count > SynthConstants::delta_bound(v, k))
    throw std::logic_error("δ exceeds its published length bound");
  return f;
}

Term word_to_term(const Word& w) {
  if (w.empty()) return Term::one();
  auto letter = [](const Letter& l) {
    Term x = Term::var(l.gen);
    return l.sign > 0 ? x : Term::inv(x);
  };
  Term t = letter(w.letters.front());
  for (std::size_t i = 1; i < w.letters.size(); ++i) t = Term::mul(t, letter(w.letters[i]));
  return t;
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::kSimple: return "simple";
    case Variant::kAtLeast3: return "at_least_3";
    case Variant::kMonolithic: return "monolithic";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "simple") return Variant::kSimple;
  if (name == "at_least_3") return Variant::kAtLeast3;
  if (name == "monolithic") return Variant::kMonolithic;
  return std::nullopt;
}

Formula at_least_three_elements(Var a, Var b) {
  return Formula::exists(
      a, Formula::exists(b, Formula::conj({Formula::neq(Term::var(a), Term::one()),
                                           Formula::neq(Term::var(b), Term::one()),
                                           Formula::neq(Term::var(a), Term::var(b))})));
}

PresentationReport verify_presentation(const DescriptionJob& job) {
  PresentationReport r;
  const GroupTable& g = *job.target;
  job.presentation.validate();
  if (job.assignment.size() != job.presentation.generator_count)
    throw Error(Errc::kInvalidInput, "assignment length must equal the generator count");
  for (Elem x : job.assignment)
    if (x >= g.order()) throw Error(Errc::kIndexOutOfRange, "assignment names a non-element");

  for (std::size_t i = 0; i < job.presentation.relators.size(); ++i)
    if (eval_word(job.presentation.relators[i], job.assignment, g) != g.identity()) r.failing_relators.push_back(i);
  r.relators_ok = r.failing_relators.empty();

  const CayleyBall ball = bfs_words(g, job.assignment);
  r.subgroup_order = ball.reached();
  r.generates = ball.covers_group();
  r.diameter = ball.radius();
  r.v_ok = job.v < 63 && r.diameter <= (std::uint64_t{1} << job.v);
  return r;
}

namespace {

void check_guard(const DescriptionJob& job) {
  const GroupTable& g = *job.target;
  switch (job.variant) {
    case Variant::kSimple:
      if (g.order() < 2 || !is_simple(g)) throw Error(Errc::kNotSimple, "target group is not simple");
      if (job.assignment.front() == g.identity())
        throw Error(Errc::kGuardInsufficient, "x_1 maps to the identity, so the guard x_1 ≠ 1 fails");
      return;
    case Variant::kMonolithic: {
      const Elem x1 = job.assignment.front();
      if (x1 == g.identity())
        throw Error(Errc::kGuardInsufficient, "x_1 maps to the identity, so the guard x_1 ≠ 1 fails");
      for (const auto& cls : conjugacy_classes(g)) {
        if (cls.front() == g.identity()) continue;
        const auto closure = normal_closure(g, cls.front());
        if (!std::binary_search(closure.begin(), closure.end(), x1))
          throw Error(Errc::kGuardInsufficient,
                      "x_1 lies outside a nontrivial normal subgroup of order " + std::to_string(closure.size()));
      }
      return;
    }
    case Variant::kAtLeast3: {
      if (g.order() < 3) throw Error(Errc::kGuardInsufficient, "target has fewer than three elements");
      for (const auto& cls : conjugacy_classes(g)) {
        if (cls.front() == g.identity()) continue;
        const auto closure = normal_closure(g, cls.front());
        if (closure.size() * 2 < g.order())
          throw Error(Errc::kGuardInsufficient, "target has a proper quotient of order " +
                                                    std::to_string(g.order() / closure.size()) + " ≥ 3");
      }
      return;
    }
  }
}

}  // namespace

Formula describing_sentence(const DescriptionJob& job) {
  const std::uint32_t k = job.presentation.generator_count;
  if (k == 0) throw Error(Errc::kInvalidInput, "presentation needs at least one generator");
  const PresentationReport report = verify_presentation(job);
  if (!report.relators_ok)
    throw Error(Errc::kPresentationFails, std::to_string(report.failing_relators.size()) +
                                              " relator(s) do not vanish under the assignment");
  if (!report.generates)
    throw Error(Errc::kPresentationFails, "assignment generates a subgroup of order " +
                                              std::to_string(report.subgroup_order) + ", not the target");
  if (!report.v_ok)
    throw Error(Errc::kDiameterExceeded, "diameter " + std::to_string(report.diameter) + " exceeds 2^" +
                                             std::to_string(job.v));
  if (job.enforce_guard) check_guard(job);

  const DeltaVars vars{k};
  std::vector<Formula> parts;
  if (job.variant == Variant::kAtLeast3) {
    const Var a = vars.w(job.v) + 1;
    parts.push_back(at_least_three_elements(a, a + 1));
  } else {
    parts.push_back(Formula::neq(Term::var(vars.x(1)), Term::one()));
  }
  for (const auto& r : job.presentation.relators)
    if (!r.empty()) parts.push_back(Formula::eq(word_to_term(r), Term::one()));
  parts.push_back(Formula::forall(vars.target(), delta_formula(job.v, k)));

  Formula psi = Formula::conj(std::move(parts));
  for (std::uint32_t j = k; j >= 1; --j) psi = Formula::exists(vars.x(j), std::move(psi));

  if (length(psi).symbol_count > SynthConstants::psi_bound(job.v, job.presentation.length()))
    throw std::logic_error("ψ exceeds its published length bound");
  return psi;
}

}  // namespace sgd
