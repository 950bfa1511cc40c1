#pragma once

// Length ledger for families of describing sentences.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sgd/model_check.hpp"
#include "sgd/synth.hpp"

namespace sgd {

struct NamedJob {
  std::string name;
  DescriptionJob job;
};

struct BenchRecord {
  std::string name;
  std::size_t order = 0;
  std::size_t presentation_length = 0;
  std::uint32_t diameter = 0;
  std::uint32_t v = 0;
  /// v equals ⌈log₂ diameter⌉.
  bool v_tight = false;
  std::size_t symbol_count = 0;
  std::size_t bound = 0;
  /// "ok" or the error name that stopped the job.
  std::string status;
  std::string message;
  bool check_value = false;
  std::uint64_t check_nodes = 0;
  std::chrono::nanoseconds check_time{0};
  /// Absent when the uniqueness sweep was skipped.
  std::optional<bool> unique;
  std::vector<std::string> violators;
  std::optional<Formula> sentence;

  bool ok() const { return status == "ok"; }
};

struct FitSummary {
  std::size_t fitted = 0;
  /// symbol_count / (v + ℓ) over successful records.
  double min_ratio = 0, max_ratio = 0;
  /// Least-squares line symbol_count ≈ slope·(v + ℓ) + intercept.
  double slope = 0, intercept = 0;
  /// Largest symbol_count / bound; ≥ 0.5 means the bound is within factor 2.
  double best_tightness = 0;
  std::string tightest_job;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  FitSummary fit;
};

struct BenchOptions {
  CheckOptions check;
  bool check_target = true;
  bool uniqueness = true;
  /// The sweep covers catalog members of order ≤ factor·|target|, plus the
  /// target itself when no member is isomorphic to it.
  std::size_t uniqueness_factor = 2;
};

/// Failures are recorded per job; the run continues.
BenchReport bench_family(const std::vector<NamedJob>& jobs, const std::vector<NamedGroup>& catalog,
                         const BenchOptions& options = {});

FitSummary fit_summary(const std::vector<BenchRecord>& records);

/// Fixed columns: name,order,presentation_length,diameter,v,v_tight,
/// symbol_count,bound,status,check_value,check_nodes,unique,violators.
std::string bench_csv(const BenchReport& report);
/// {"schema":1,"constants":{...},"records":[...],"fit":{...}}; no timings.
std::string bench_json(const BenchReport& report);
/// name,check_ms
std::string bench_timings_csv(const BenchReport& report);

/// bench.csv, bench.json, timings.csv and sentences/<name>.sexp under `dir`.
void write_bench(const BenchReport& report, const std::filesystem::path& dir);

}  // namespace sgd
