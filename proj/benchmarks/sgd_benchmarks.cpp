#include <benchmark/benchmark.h>

#include <filesystem>

#include "sgd/aut.hpp"
#include "sgd/catalog.hpp"
#include "sgd/cayley.hpp"
#include "sgd/io.hpp"
#include "sgd/model_check.hpp"
#include "sgd/psl.hpp"
#include "sgd/synth.hpp"

using namespace sgd;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = SGD_FIXTURE_DIR;

void BM_SynthDelta(benchmark::State& state) {
  const auto v = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_formula(v, 3));
}
BENCHMARK(BM_SynthDelta)->Arg(4)->Arg(12)->Arg(24);

// ψ of a job checked on a catalog group.
void BM_CheckPsi(benchmark::State& state, const char* job, const char* group, MemoMode memo) {
  const LoadedJob j = load_job_file(kFixtures / "jobs" / job);
  const Formula psi = describing_sentence(j.job);
  const LoadedGroup g = load_group_file(kFixtures / "groups" / group);
  CheckOptions opt;
  opt.memo = memo;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const CheckOutcome out = check_sentence(psi, g.table, opt);
    nodes = out.nodes_visited;
    benchmark::DoNotOptimize(out.value);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK_CAPTURE(BM_CheckPsi, s3_on_s3, "s3.json", "s3.json", MemoMode::kAuto);
BENCHMARK_CAPTURE(BM_CheckPsi, a4_on_a4xc2, "a4.json", "a4xc2.json", MemoMode::kAuto);
BENCHMARK_CAPTURE(BM_CheckPsi, a5_on_a5, "a5.json", "a5.json", MemoMode::kAuto);
BENCHMARK_CAPTURE(BM_CheckPsi, a5_on_s5, "a5.json", "s5.json", MemoMode::kAuto)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckPsi, a4_on_a4xc2_no_memo, "a4.json", "a4xc2.json", MemoMode::kOff)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckPsi, psl2_7_on_psl2_7, "psl2_7.json", "psl2_7.json", MemoMode::kAuto)
    ->Unit(benchmark::kMillisecond);

void BM_CayleyDiameter(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const auto gens = alternating_generators(k);
  const PermGroup g(k, gens);
  for (auto _ : state) benchmark::DoNotOptimize(cayley_diameter(g, gens));
  state.counters["order"] = static_cast<double>(g.order());
}
BENCHMARK(BM_CayleyDiameter)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state, Construction c, std::size_t limit) {
  const GroupTable t = *realize({"g", c, {}}).table;
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(t, AutOptions{limit}).out_order);
}
BENCHMARK_CAPTURE(BM_Automorphisms, q8, Construction::quaternion(), 64);
BENCHMARK_CAPTURE(BM_Automorphisms, s4, Construction::symmetric(4), 64);
BENCHMARK_CAPTURE(BM_Automorphisms, psl2_7, Construction::psl2(7), 720)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Automorphisms, s6, Construction::symmetric(6), 720)->Unit(benchmark::kMillisecond);

void BM_BruteNormalizer(benchmark::State& state) {
  const RegularRep rep = regular_representation(quaternion_group().table());
  for (auto _ : state) benchmark::DoNotOptimize(brute_normalizer(rep.image).order());
}
BENCHMARK(BM_BruteNormalizer)->Unit(benchmark::kMillisecond);

void BM_RowReduction(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psl_row_reduction_check(2, q).max_length);
}
BENCHMARK(BM_RowReduction)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
