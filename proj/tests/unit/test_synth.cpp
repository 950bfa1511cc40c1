#include "doctest.h"
#include "sgd/catalog.hpp"
#include "sgd/error.hpp"
#include "sgd/model_check.hpp"
#include "sgd/synth.hpp"

using namespace sgd;

namespace {

DescriptionJob job_for(const PermGroup& g, std::uint32_t k, std::vector<const char*> relators,
                       std::vector<Permutation> images, std::uint32_t v, Variant variant = Variant::kSimple) {
  DescriptionJob job;
  job.presentation.generator_count = k;
  for (const char* r : relators) job.presentation.relators.push_back(parse_word(r));
  job.target = std::make_shared<const GroupTable>(g.table());
  for (const auto& p : images) job.assignment.push_back(*g.index_of(p));
  job.v = v;
  job.variant = variant;
  return job;
}

Errc error_of(const DescriptionJob& job) {
  try {
    describing_sentence(job);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::kIo;
}

}  // namespace

TEST_CASE("delta length is exactly linear") {
  for (std::uint32_t k = 1; k <= 8; ++k)
    for (std::uint32_t v = 0; v <= 12; ++v)
      CHECK(length(delta_formula(v, k)).symbol_count == 10 * k + 17 * v + 1);
  CHECK(length(delta_formula(5, 3)).symbol_count == 116);
  CHECK_THROWS_AS(delta_formula(2, 0), Error);
}

TEST_CASE("delta variable layout") {
  const DeltaVars vars{3};
  CHECK(vars.x(1) == 0);
  CHECK(vars.target() == 3);
  CHECK(vars.u(1) == 4);
  CHECK(vars.w(2) == 9);
  CHECK(length(delta_formula(4, 3)).quantifier_count == 12);
}

TEST_CASE("word_to_term associates left") {
  CHECK(render(word_to_term(parse_word("x0 x1^-1 x0"))) == "(* (* v0 (inv v1)) v0)");
  CHECK(render(word_to_term(Word{})) == "e");
}

TEST_CASE("psi for C2 and C3") {
  const PermGroup c2 = cyclic_group(2), c3 = cyclic_group(3);
  const auto job2 = job_for(c2, 1, {"x0^2"}, {Permutation::cycle(2, {0, 1})}, 0);
  const Formula psi2 = describing_sentence(job2);
  CHECK(psi2.is_sentence());
  CHECK(length(psi2).symbol_count <= SynthConstants::psi_bound(0, 3));
  CHECK(check_sentence(psi2, c2.table()).value);
  CHECK_FALSE(check_sentence(psi2, c3.table()).value);
  CHECK_FALSE(check_sentence(psi2, cyclic_group(4).table()).value);
  CHECK_FALSE(check_sentence(psi2, cyclic_group(1).table()).value);
}

TEST_CASE("presentation report") {
  const PermGroup s3 = symmetric_group(3);
  const auto good = job_for(s3, 2, {"x0^2", "x1^3", "(x0 x1)^2"},
                            {Permutation::cycle(3, {1, 2}), Permutation::cycle(3, {0, 1, 2})}, 1, Variant::kAtLeast3);
  const PresentationReport r = verify_presentation(good);
  CHECK(r.ok());
  CHECK(r.diameter == 2);
  CHECK(r.subgroup_order == 6);

  auto bad = good;
  bad.presentation.relators[2] = parse_word("(x0 x1)^3");
  const PresentationReport rb = verify_presentation(bad);
  CHECK_FALSE(rb.relators_ok);
  CHECK(rb.failing_relators == std::vector<std::size_t>{2});
  CHECK(error_of(bad) == Errc::kPresentationFails);

  auto narrow = good;
  narrow.assignment[1] = narrow.assignment[0];
  narrow.presentation.relators = {parse_word("x0^2")};
  CHECK_FALSE(verify_presentation(narrow).generates);
  CHECK(error_of(narrow) == Errc::kPresentationFails);

  auto short_v = good;
  short_v.v = 0;
  CHECK_FALSE(verify_presentation(short_v).v_ok);
  CHECK(error_of(short_v) == Errc::kDiameterExceeded);
}

TEST_CASE("guard preconditions") {
  const PermGroup a4 = alternating_group(4);
  const std::vector<Permutation> imgs{Permutation::from_cycles(4, std::vector<Cycle>{{0, 1}, {2, 3}}),
                                      Permutation::cycle(4, {1, 2, 3})};
  const std::vector<const char*> rels{"x0^2", "x1^3", "(x0 x1)^3"};
  CHECK(error_of(job_for(a4, 2, rels, imgs, 2, Variant::kSimple)) == Errc::kNotSimple);
  CHECK(error_of(job_for(a4, 2, rels, imgs, 2, Variant::kAtLeast3)) == Errc::kGuardInsufficient);
  const Formula mono = describing_sentence(job_for(a4, 2, rels, imgs, 2, Variant::kMonolithic));
  CHECK(check_sentence(mono, a4.table()).value);
  CHECK_FALSE(check_sentence(mono, cyclic_group(3).table()).value);

  auto unguarded = job_for(a4, 2, rels, imgs, 2, Variant::kAtLeast3);
  unguarded.enforce_guard = false;
  const Formula leaky = describing_sentence(unguarded);
  CHECK(check_sentence(leaky, a4.table()).value);
  CHECK(check_sentence(leaky, cyclic_group(3).table()).value);

  const PermGroup c3 = cyclic_group(3);
  auto trivial_x1 = job_for(c3, 2, {"x0", "x1^3"}, {Permutation(3), Permutation::cycle(3, {0, 1, 2})}, 0);
  CHECK(error_of(trivial_x1) == Errc::kGuardInsufficient);
}

TEST_CASE("at least three elements") {
  const Formula f = at_least_three_elements(0, 1);
  CHECK_FALSE(check_sentence(f, cyclic_group(2).table()).value);
  CHECK(check_sentence(f, cyclic_group(3).table()).value);
  CHECK(parse_variant("monolithic") == Variant::kMonolithic);
  CHECK_FALSE(parse_variant("other"));
  CHECK(std::string(variant_name(Variant::kAtLeast3)) == "at_least_3");
}
