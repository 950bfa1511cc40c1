#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sgd/catalog.hpp"
#include "sgd/error.hpp"
#include "sgd/model_check.hpp"
#include "sgd/structure.hpp"
#include "sgd/synth.hpp"

using namespace sgd;

namespace {

const std::vector<CatalogEntry>& small_catalog() {
  static const auto catalog = [] {
    std::vector<CatalogEntrySpec> spec;
    for (const auto& s : default_catalog_spec())
      if (auto n = expected_order(s.construction); n && *n <= 24) spec.push_back(s);
    return build_catalog(spec);
  }();
  return catalog;
}

}  // namespace

TEST_CASE("trivial sentences") {
  const Formula identity_axiom = parse_formula("(forall v0 (= (* v0 e) v0))");
  const Formula involution = parse_formula("(exists v0 (and (not (= v0 e)) (= (* v0 v0) e)))");
  for (const auto& e : small_catalog()) CHECK(check_sentence(identity_axiom, *e.table).value);
  CHECK_FALSE(check_sentence(involution, cyclic_group(3).table()).value);
  CHECK(check_sentence(involution, cyclic_group(4).table()).value);
}

TEST_CASE("errors") {
  const GroupTable c3 = cyclic_group(3).table();
  const Formula open = parse_formula("(= v0 v1)");
  try {
    eval(open, c3, Environment{{{0, 1}}});
    FAIL("expected UnboundVariable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kUnboundVariable);
  }
  try {
    check_sentence(open, c3);
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNotClosed);
  }
  CheckOptions tight;
  tight.budget = 10;
  try {
    check_sentence(parse_formula("(forall v0 (forall v1 (= (* v0 v1) (* v1 v0))))"), symmetric_group(4).table(), tight);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kBudgetExceeded);
  }
  CHECK(eval(open, c3, Environment{{{0, 2}, {1, 2}}}).value);
}

TEST_CASE("agreement with a no-short-circuit reference evaluator") {
  oracle::RandomFormulas gen(99);
  gen.var_limit = 3;
  std::size_t checked = 0;
  for (const auto& e : small_catalog()) {
    const GroupTable& g = *e.table;
    for (int i = 0; i < 40; ++i) {
      const Formula f = gen.formula(5, 3);
      Environment env;
      std::map<Var, Elem> ref_env;
      for (Var v : f.free_vars()) {
        const Elem x = gen.pick(static_cast<std::uint32_t>(g.order()));
        env.bindings[v] = x;
        ref_env[v] = x;
      }
      const bool expected = oracle::eval_full(f, g, ref_env);
      for (MemoMode memo : {MemoMode::kOff, MemoMode::kOn}) {
        for (bool solve : {false, true}) {
          CheckOptions opt;
          opt.memo = memo;
          opt.solve_equations = solve;
          const CheckOutcome out = eval(f, g, env, opt);
          CHECK_MESSAGE(out.value == expected, render(f), " on ", e.name);
          CHECK(out.nodes_visited >= 1);
          const double ceiling = std::pow(static_cast<double>(g.order() + 1), oracle::quantifier_depth(f)) *
                                 static_cast<double>(length(f).symbol_count);
          CHECK(static_cast<double>(out.nodes_visited) <= ceiling);
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("delta agrees with breadth-first distances on A4") {
  const PermGroup a4 = alternating_group(4);
  const GroupTable g = a4.table();
  const std::vector<Elem> gens = a4.generator_indices();
  const auto balls = oracle::product_balls(g, gens, 8);
  for (std::uint32_t v = 0; v <= 3; ++v) {
    Evaluator ev(delta_formula(v, 2), g);
    for (Elem x = 0; x < g.order(); ++x) {
      Environment env{{{0, gens[0]}, {1, gens[1]}, {2, x}}};
      CHECK(ev.evaluate(env) == balls[std::size_t{1} << v].contains(x));
    }
  }
}

TEST_CASE("isomorphic groups agree on sentences") {
  const std::vector<Formula> sentences{
      parse_formula("(forall v0 (forall v1 (= (* v0 v1) (* v1 v0))))"),
      parse_formula("(exists v0 (and (not (= v0 e)) (= (* v0 v0) e)))"),
      parse_formula("(forall v0 (exists v1 (= (* v1 v1) v0)))"),
      parse_formula("(exists v0 (forall v1 (= (* v0 v1) (* v1 v0))))"),
  };
  const auto& cat = small_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j)
      if (cat[i].order() == cat[j].order() && is_isomorphic(*cat[i].table, *cat[j].table))
        for (const auto& s : sentences)
          CHECK(check_sentence(s, *cat[i].table).value == check_sentence(s, *cat[j].table).value);
}

TEST_CASE("uniqueness reports") {
  std::vector<NamedGroup> named;
  for (const auto& e : small_catalog())
    if (e.order() <= 8) named.push_back({e.name, e.table.get()});
  const GroupTable c2 = cyclic_group(2).table();

  const UniquenessReport taut = describes_uniquely(parse_formula("(forall v0 (= v0 v0))"), c2, named);
  CHECK(taut.target_in_catalog);
  CHECK_FALSE(taut.unique());
  std::size_t copies = 0;
  for (const auto& n : named) copies += is_isomorphic(*n.table, c2) ? 1 : 0;
  CHECK(copies == 2);
  CHECK(taut.violators.size() == named.size() - copies);

  DescriptionJob job;
  job.presentation = Presentation{1, {parse_word("x0^2")}};
  job.target = std::make_shared<const GroupTable>(c2);
  job.assignment = {1};
  job.v = 0;
  const UniquenessReport psi = describes_uniquely(describing_sentence(job), c2, named);
  CHECK(psi.unique());
  CHECK(psi.violators.empty());
}

TEST_CASE("parallel outermost quantifier gives the same value") {
  const GroupTable s4 = symmetric_group(4).table();
  const Formula f = parse_formula("(exists v0 (forall v1 (= (* v0 v1) (* v1 v0))))");
  const Formula h = parse_formula("(forall v0 (exists v1 (= (* v1 v1) v0)))");
  CheckOptions par;
  par.jobs = 4;
  CHECK(check_sentence(f, s4, par).value == check_sentence(f, s4).value);
  CHECK(check_sentence(h, s4, par).value == check_sentence(h, s4).value);
}
