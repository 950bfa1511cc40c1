#include "sgd/bench.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "sgd/cayley.hpp"
#include "sgd/error.hpp"
#include "sgd/io.hpp"
#include "sgd/structure.hpp"

namespace sgd {

using nlohmann::json;

BenchReport bench_family(const std::vector<NamedJob>& jobs, const std::vector<NamedGroup>& catalog,
                         const BenchOptions& options) {
  BenchReport report;
  for (const auto& [name, job] : jobs) {
    BenchRecord r;
    r.name = name;
    r.v = job.v;
    try {
      r.order = job.target->order();
      r.presentation_length = job.presentation.length();
      r.bound = SynthConstants::psi_bound(job.v, r.presentation_length);
      const PresentationReport pres = verify_presentation(job);
      r.diameter = pres.diameter;
      r.v_tight = job.v == ceil_log2(pres.diameter);
      Formula psi = describing_sentence(job);
      r.symbol_count = length(psi).symbol_count;
      if (options.check_target) {
        const CheckOutcome out = check_sentence(psi, *job.target, options.check);
        r.check_value = out.value;
        r.check_nodes = out.nodes_visited;
        r.check_time = out.elapsed;
      }
      if (options.uniqueness) {
        std::vector<NamedGroup> scope;
        bool present = false;
        for (const auto& g : catalog) {
          if (g.table->order() > options.uniqueness_factor * r.order) continue;
          scope.push_back(g);
          present = present || (g.table->order() == r.order && is_isomorphic(*g.table, *job.target));
        }
        if (!present) scope.push_back({name + ":target", job.target.get()});
        const UniquenessReport u = describes_uniquely(psi, *job.target, scope, options.check);
        r.unique = u.unique();
        r.violators = u.violators;
      }
      r.sentence = std::move(psi);
      r.status = "ok";
    } catch (const Error& e) {
      r.status = errc_name(e.code());
      r.message = e.what();
    }
    report.records.push_back(std::move(r));
  }
  report.fit = fit_summary(report.records);
  return report;
}

FitSummary fit_summary(const std::vector<BenchRecord>& records) {
  FitSummary f;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : records) {
    if (!r.ok()) continue;
    const double x = static_cast<double>(r.v + r.presentation_length);
    const double y = static_cast<double>(r.symbol_count);
    const double ratio = y / x;
    f.min_ratio = f.fitted ? std::min(f.min_ratio, ratio) : ratio;
    f.max_ratio = f.fitted ? std::max(f.max_ratio, ratio) : ratio;
    const double tight = y / static_cast<double>(r.bound);
    if (tight > f.best_tightness) {
      f.best_tightness = tight;
      f.tightest_job = r.name;
    }
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++f.fitted;
  }
  if (f.fitted >= 2) {
    const double n = static_cast<double>(f.fitted);
    const double denom = n * sxx - sx * sx;
    if (denom != 0) {
      f.slope = (n * sxy - sx * sy) / denom;
      f.intercept = (sy - f.slope * sx) / n;
    }
  } else if (f.fitted == 1) {
    f.slope = sy / sx;
  }
  return f;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? std::string(1, sep) : "") + items[i];
  return out;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

std::string bench_csv(const BenchReport& report) {
  std::string out =
      "name,order,presentation_length,diameter,v,v_tight,symbol_count,bound,status,check_value,check_nodes,unique,"
      "violators\n";
  for (const auto& r : report.records) {
    const std::vector<std::string> row{
        csv_field(r.name),
        std::to_string(r.order),
        std::to_string(r.presentation_length),
        std::to_string(r.diameter),
        std::to_string(r.v),
        r.v_tight ? "true" : "false",
        std::to_string(r.symbol_count),
        std::to_string(r.bound),
        r.status,
        r.check_value ? "true" : "false",
        std::to_string(r.check_nodes),
        r.unique ? (*r.unique ? "true" : "false") : "",
        csv_field(join(r.violators, ';')),
    };
    out += join(row, ',') + "\n";
  }
  return out;
}

std::string bench_json(const BenchReport& report) {
  json j;
  j["schema"] = 1;
  j["constants"] = {{"A", SynthConstants::A}, {"B", SynthConstants::B}, {"C", SynthConstants::C},
                    {"D", SynthConstants::D}, {"E", SynthConstants::E}};
  j["records"] = json::array();
  for (const auto& r : report.records) {
    json e{{"name", r.name},
           {"order", r.order},
           {"presentation_length", r.presentation_length},
           {"diameter", r.diameter},
           {"v", r.v},
           {"v_tight", r.v_tight},
           {"symbol_count", r.symbol_count},
           {"bound", r.bound},
           {"status", r.status},
           {"check_value", r.check_value},
           {"check_nodes", r.check_nodes},
           {"violators", r.violators}};
    e["unique"] = r.unique ? json(*r.unique) : json(nullptr);
    if (!r.message.empty()) e["message"] = r.message;
    j["records"].push_back(std::move(e));
  }
  const FitSummary& f = report.fit;
  j["fit"] = {{"fitted", f.fitted},
              {"min_ratio", fixed(f.min_ratio)},
              {"max_ratio", fixed(f.max_ratio)},
              {"slope", fixed(f.slope)},
              {"intercept", fixed(f.intercept)},
              {"best_tightness", fixed(f.best_tightness)},
              {"tightest_job", f.tightest_job}};
  return j.dump(2) + "\n";
}

std::string bench_timings_csv(const BenchReport& report) {
  std::string out = "name,check_ms\n";
  for (const auto& r : report.records)
    out += csv_field(r.name) + "," + fixed(static_cast<double>(r.check_time.count()) / 1e6) + "\n";
  return out;
}

void write_bench(const BenchReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "sentences");
  write_file_atomic(dir / "bench.csv", bench_csv(report));
  write_file_atomic(dir / "bench.json", bench_json(report));
  write_file_atomic(dir / "timings.csv", bench_timings_csv(report));
  for (const auto& r : report.records) {
    if (!r.sentence) continue;
    write_file_atomic(dir / "sentences" / (r.name + ".sexp"),
                      sentence_file_text(*r.sentence, {r.name + ": describing sentence, v = " + std::to_string(r.v) +
                                                       ", presentation length " +
                                                       std::to_string(r.presentation_length)}));
  }
}

}  // namespace sgd
