#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgd/aut.hpp"
#include "sgd/bench.hpp"
#include "sgd/catalog.hpp"
#include "sgd/cayley.hpp"
#include "sgd/error.hpp"
#include "sgd/io.hpp"
#include "sgd/model_check.hpp"
#include "sgd/psl.hpp"
#include "sgd/structure.hpp"
#include "sgd/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sgd;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::uint64_t budget = CheckOptions::kDefaultBudget;
  std::string budget_text;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string config;
};

Globals g_opts;

CheckOptions check_options() {
  CheckOptions o;
  o.budget = g_opts.budget;
  o.jobs = g_opts.jobs;
  return o;
}

// Accepts plain integers and scientific notation such as 1e11.
std::uint64_t parse_budget(const std::string& text, const char* source) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value >= 1) || value > 9.2e18 || value != std::floor(value))
    throw Error(Errc::kInvalidInput, std::string(source) + " must be a positive integer, got '" + text + "'");
  return static_cast<std::uint64_t>(value);
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit_csv(const json& rows) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
  std::cout << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::string cell = row.contains(keys[i]) ? scalar_text(row[keys[i]]) : "";
      if (cell.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        cell = quoted + "\"";
      }
      std::cout << (i ? "," : "") << cell;
    }
    std::cout << "\n";
  }
}

// Reports are JSON objects; a "records" array becomes the CSV body.
void emit(const json& report) {
  if (g_opts.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (g_opts.format == "csv") {
    if (report.contains("records") && report["records"].is_array()) {
      emit_csv(report["records"]);
    } else {
      json flat = json::object();
      for (const auto& [k, v] : report.items())
        if (!v.is_structured()) flat[k] = v;
      emit_csv(json::array({flat}));
    }
  } else {
    for (const auto& [k, v] : report.items()) {
      if (v.is_array() && !v.empty() && v.front().is_object()) {
        std::cout << k << ":\n";
        for (const auto& row : v) {
          std::cout << " ";
          for (const auto& [rk, rv] : row.items()) std::cout << " " << rk << "=" << scalar_text(rv);
          std::cout << "\n";
        }
      } else {
        std::cout << k << ": " << scalar_text(v) << "\n";
      }
    }
  }
}

json length_json(const LengthReport& r) {
  return {{"symbol_count", r.symbol_count},
          {"quantifier_count", r.quantifier_count},
          {"variable_count", r.variable_count},
          {"depth", r.depth}};
}

json presentation_report_json(const PresentationReport& r) {
  return {{"relators_ok", r.relators_ok}, {"failing_relators", r.failing_relators},
          {"generates", r.generates},     {"subgroup_order", r.subgroup_order},
          {"diameter", r.diameter},       {"v_ok", r.v_ok}};
}

double millis(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

std::vector<CatalogEntry> catalog_from(const std::string& spec_path, const std::string& dir) {
  if (!dir.empty()) return load_catalog_dir(dir);
  if (!spec_path.empty()) return build_catalog(parse_catalog_spec(read_text_file(spec_path)));
  return build_catalog(default_catalog_spec());
}

std::vector<NamedGroup> named(const std::vector<CatalogEntry>& entries) {
  std::vector<NamedGroup> out;
  for (const auto& e : entries) out.push_back({e.name, e.table.get()});
  return out;
}

void apply_config(CLI::App& app) {
  if (!g_opts.budget_text.empty()) g_opts.budget = parse_budget(g_opts.budget_text, "--budget");
  if (!g_opts.config.empty()) {
    const json c = json::parse(read_text_file(g_opts.config));
    if (c.contains("budget") && app.count("--budget") == 0) g_opts.budget = parse_budget(scalar_text(c["budget"]), "budget");
    if (c.contains("jobs") && app.count("--jobs") == 0) g_opts.jobs = c["jobs"].get<unsigned>();
    if (c.contains("seed") && app.count("--seed") == 0) g_opts.seed = c["seed"].get<std::uint64_t>();
    if (c.contains("format") && app.count("--format") == 0) g_opts.format = c["format"].get<std::string>();
  }
  if (const char* env = std::getenv("SGD_BUDGET")) {
    g_opts.budget = parse_budget(env, "SGD_BUDGET");
  }
  if (g_opts.format != "json" && g_opts.format != "csv" && g_opts.format != "text")
    throw Error(Errc::kInvalidInput, "--format must be json, csv or text");
  if (g_opts.jobs == 0) g_opts.jobs = 1;
}

bool is_verification_failure(Errc c) {
  switch (c) {
    case Errc::kPresentationFails:
    case Errc::kNotSimple:
    case Errc::kGuardInsufficient:
    case Errc::kDiameterExceeded:
    case Errc::kNotGenerating:
    case Errc::kBudgetExceeded:
    case Errc::kNotNormalizing:
    case Errc::kOddPermutation:
    case Errc::kBaseMissing:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sgd: short first-order descriptions of finite groups"};
  app.require_subcommand(1);
  app.add_option("--budget", g_opts.budget_text, "model-checking node budget (SGD_BUDGET overrides)");
  app.add_option("--jobs", g_opts.jobs, "worker threads");
  app.add_option("--seed", g_opts.seed, "seed for randomised checks");
  app.add_option("--format", g_opts.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--config", g_opts.config, "JSON file with budget, jobs, seed, format")->check(CLI::ExistingFile);

  int status = kOk;
  std::vector<std::pair<CLI::App*, std::function<void()>>> handlers;
  auto on = [&](CLI::App* sub, std::function<void()> f) { handlers.emplace_back(sub, std::move(f)); };

  // synth-delta
  std::uint32_t delta_v = 0, delta_k = 1;
  std::string delta_out;
  auto* synth_delta = app.add_subcommand("synth-delta", "emit the generation formula δ_{v,k}");
  synth_delta->add_option("--v", delta_v, "diameter exponent")->required();
  synth_delta->add_option("--k", delta_k, "generator count")->required()->check(CLI::PositiveNumber);
  synth_delta->add_option("-o,--output", delta_out, "sentence file");
  on(synth_delta, [&] {
    const Formula d = delta_formula(delta_v, delta_k);
    json r = length_json(length(d));
    r["v"] = delta_v;
    r["k"] = delta_k;
    r["bound"] = SynthConstants::delta_bound(delta_v, delta_k);
    if (delta_out.empty()) {
      r["formula"] = render(d);
    } else {
      write_file_atomic(delta_out, sentence_file_text(d, {"generation formula v = " + std::to_string(delta_v) +
                                                          ", k = " + std::to_string(delta_k) +
                                                          "; free: v" + std::to_string(delta_k) + " (target), v0..v" +
                                                          std::to_string(delta_k - 1) + " (generators)"}));
      r["file"] = delta_out;
    }
    emit(r);
  });

  // synth-describe
  std::string describe_job, describe_out, describe_report;
  auto* synth_describe = app.add_subcommand("synth-describe", "build the describing sentence of a job");
  synth_describe->add_option("job", describe_job, "job JSON")->required()->check(CLI::ExistingFile);
  synth_describe->add_option("-o,--output", describe_out, "sentence file");
  synth_describe->add_option("--report", describe_report, "write the verification report here as well");
  on(synth_describe, [&] {
    const LoadedJob loaded = load_job_file(describe_job);
    const DescriptionJob& job = loaded.job;
    const PresentationReport pres = verify_presentation(job);
    const Formula psi = describing_sentence(job);
    const LengthReport len = length(psi);
    const std::size_t bound = SynthConstants::psi_bound(job.v, job.presentation.length());
    json r{{"schema", 1},
           {"name", loaded.name},
           {"order", job.target->order()},
           {"variant", variant_name(job.variant)},
           {"v", job.v},
           {"presentation_length", job.presentation.length()},
           {"verification", presentation_report_json(pres)},
           {"length", length_json(len)},
           {"bound", bound},
           {"bound_holds", len.symbol_count <= bound},
           {"constants", {{"D", SynthConstants::D}, {"E", SynthConstants::E}}}};
    if (!describe_out.empty()) {
      write_file_atomic(describe_out,
                        sentence_file_text(psi, {loaded.name + ": describing sentence, variant " +
                                                 variant_name(job.variant) + ", v = " + std::to_string(job.v)}));
      r["file"] = describe_out;
    } else {
      r["sentence"] = render(psi);
    }
    if (!describe_report.empty()) write_file_atomic(describe_report, r.dump(2) + "\n");
    emit(r);
  });

  // verify-pres
  std::string verify_job;
  auto* verify = app.add_subcommand("verify-pres", "check relators, generation and the diameter bound");
  verify->add_option("job", verify_job, "job JSON")->required()->check(CLI::ExistingFile);
  on(verify, [&] {
    const LoadedJob loaded = load_job_file(verify_job);
    const PresentationReport pres = verify_presentation(loaded.job);
    json r = presentation_report_json(pres);
    r["name"] = loaded.name;
    r["v"] = loaded.job.v;
    r["ok"] = pres.ok();
    emit(r);
    if (!pres.ok()) status = kFailed;
  });

  // check
  std::string check_sentence_path, check_group_path;
  auto* check = app.add_subcommand("check", "model-check a sentence on one group");
  check->add_option("sentence", check_sentence_path)->required()->check(CLI::ExistingFile);
  check->add_option("group", check_group_path)->required()->check(CLI::ExistingFile);
  on(check, [&] {
    const Formula s = load_sentence_file(check_sentence_path);
    const LoadedGroup g = load_group_file(check_group_path);
    const CheckOutcome out = check_sentence(s, g.table, check_options());
    emit({{"group", g.name},
          {"order", g.table.order()},
          {"value", out.value},
          {"nodes_visited", out.nodes_visited},
          {"elapsed_ms", millis(out.elapsed)}});
  });

  // sweep
  std::string sweep_sentence, sweep_dir, sweep_target;
  std::size_t sweep_max_order = 0;
  auto* sweep = app.add_subcommand("sweep", "check a sentence on every group of a catalog directory");
  sweep->add_option("sentence", sweep_sentence)->required()->check(CLI::ExistingFile);
  sweep->add_option("catalog", sweep_dir)->required()->check(CLI::ExistingDirectory);
  sweep->add_option("--target", sweep_target, "group file of the intended model")->check(CLI::ExistingFile);
  sweep->add_option("--max-order", sweep_max_order, "skip catalog members above this order");
  on(sweep, [&] {
    const Formula s = load_sentence_file(sweep_sentence);
    std::vector<CatalogEntry> entries = load_catalog_dir(sweep_dir);
    if (sweep_max_order)
      std::erase_if(entries, [&](const CatalogEntry& e) { return e.order() > sweep_max_order; });
    const CheckOptions opts = check_options();
    std::optional<GroupTable> target;
    std::string target_name;
    if (!sweep_target.empty()) {
      LoadedGroup t = load_group_file(sweep_target);
      target_name = t.name;
      target = std::move(t.table);
    } else {
      // Without an explicit target, the first model found plays that role.
      for (const auto& e : entries) {
        if (check_sentence(s, *e.table, opts).value) {
          target = *e.table;
          target_name = e.name;
          break;
        }
      }
    }
    json r{{"catalog_size", entries.size()}};
    if (!target) {
      r["target"] = nullptr;
      r["unique"] = false;
      r["violators"] = json::array();
      r["message"] = "no catalog member satisfies the sentence";
      emit(r);
      status = kFailed;
      return;
    }
    const UniquenessReport u = describes_uniquely(s, *target, named(entries), opts);
    r["target"] = target_name;
    r["unique"] = u.unique();
    r["target_in_catalog"] = u.target_in_catalog;
    r["violators"] = u.violators;
    r["records"] = json::array();
    for (const auto& e : u.entries)
      r["records"].push_back({{"name", e.name},
                              {"order", e.order},
                              {"value", e.value},
                              {"isomorphic_to_target", e.isomorphic_to_target},
                              {"nodes_visited", e.nodes_visited},
                              {"elapsed_ms", millis(e.elapsed)}});
    emit(r);
    if (!u.unique()) status = kFailed;
  });

  // diameter
  std::string diameter_group;
  std::vector<std::string> diameter_gens;
  auto* diameter = app.add_subcommand("diameter", "Cayley diameter of a permutation group");
  diameter->add_option("group", diameter_group)->required()->check(CLI::ExistingFile);
  diameter->add_option("--gen", diameter_gens, "generator in cycle notation (default: the file's generators)");
  on(diameter, [&] {
    const LoadedGroup g = load_group_file(diameter_group);
    if (!g.perm) throw Error(Errc::kInvalidInput, "diameter needs a permutation group");
    std::vector<Permutation> gens;
    for (const auto& text : diameter_gens) gens.push_back(parse_cycles(text, g.perm->degree()));
    if (gens.empty()) gens.assign(g.perm->generators().begin(), g.perm->generators().end());
    json names = json::array();
    for (const auto& p : gens) names.push_back(p.to_string());
    const std::uint32_t d = cayley_diameter(*g.perm, gens);
    emit({{"group", g.name},
          {"order", g.perm->order()},
          {"generators", names},
          {"diameter", d},
          {"v", ceil_log2(d)}});
  });

  // three-cycles
  std::uint32_t tc_k = 5;
  std::size_t tc_samples = 0;
  auto* three = app.add_subcommand("three-cycles", "express every 3-cycle of A_k over generators containing (0 1 2)");
  three->add_option("--k", tc_k, "degree")->required()->check(CLI::Range(3u, 12u));
  three->add_option("--samples", tc_samples, "random even permutations to decompose (uses --seed)");
  on(three, [&] {
    const auto gens = alternating_generators(tc_k);
    std::size_t max_word = 0;
    bool all_ok = true;
    for (const auto& t : all_three_cycles(tc_k)) {
      const Word w = express_three_cycle(t, gens);
      max_word = std::max(max_word, w.size());
      all_ok = all_ok && eval_word(w, gens, tc_k) == t;
    }
    const PermGroup ak(tc_k, gens);
    const std::uint32_t d = cayley_diameter(ak, gens);
    const std::size_t k3 = std::size_t{tc_k} * tc_k * tc_k;

    std::mt19937_64 rng(g_opts.seed);
    std::size_t max_factors = 0;
    for (std::size_t i = 0; i < tc_samples; ++i) {
      std::vector<Point> images(tc_k);
      for (Point x = 0; x < tc_k; ++x) images[x] = x;
      std::shuffle(images.begin(), images.end(), rng);
      Permutation p(std::move(images));
      if (!p.is_even()) p = Permutation::cycle(tc_k, {0, 1}) * p;
      const auto parts = three_cycle_decompose(p);
      Permutation product(tc_k);
      for (const auto& c : parts) product = product * c;
      all_ok = all_ok && product == p && parts.size() <= tc_k;
      max_factors = std::max(max_factors, parts.size());
    }
    json names = json::array();
    for (const auto& p : gens) names.push_back(p.to_string());
    emit({{"k", tc_k},
          {"generators", names},
          {"max_word_length", max_word},
          {"word_bound", k3},
          {"diameter", d},
          {"diameter_bound", k3 * tc_k},
          {"samples", tc_samples},
          {"max_decomposition_length", max_factors},
          {"seed", g_opts.seed},
          {"holds", all_ok && max_word <= k3 && d <= k3 * tc_k}});
  });

  // aut / out
  std::string aut_group;
  bool aut_extended = false;
  auto* aut = app.add_subcommand("aut", "automorphism group by generator-image search");
  aut->add_option("group", aut_group)->required()->check(CLI::ExistingFile);
  aut->add_flag("--extended", aut_extended, "raise the size limit to 720");
  std::string out_group;
  bool out_extended = false;
  auto* out = app.add_subcommand("out", "order of the outer automorphism group");
  out->add_option("group", out_group)->required()->check(CLI::ExistingFile);
  out->add_flag("--extended", out_extended, "raise the size limit to 720");
  auto aut_report = [](const std::string& path, bool extended, bool full) {
    const LoadedGroup g = load_group_file(path);
    AutOptions o;
    if (extended) o.max_order = AutOptions::kExtendedMaxOrder;
    const AutGroup a = automorphisms(g.table, o);
    json r{{"group", g.name}, {"order", g.table.order()}, {"out_order", a.out_order}};
    if (full) {
      r["aut_order"] = a.automorphisms.size();
      r["inner_order"] = a.inner.size();
    }
    emit(r);
  };
  on(aut, [&] { aut_report(aut_group, aut_extended, true); });
  on(out, [&] { aut_report(out_group, out_extended, false); });

  // normalizer
  std::string norm_group;
  bool norm_brute = false;
  auto* normalizer = app.add_subcommand("normalizer", "normaliser of the regular image (holomorph)");
  normalizer->add_option("group", norm_group)->required()->check(CLI::ExistingFile);
  normalizer->add_flag("--brute", norm_brute, "cross-check by sweeping S_n (|G| ≤ 8)");
  on(normalizer, [&] {
    const LoadedGroup g = load_group_file(norm_group);
    const AutGroup a = automorphisms(g.table);
    const PermGroup hol = holomorph(a);
    json r{{"group", g.name},
           {"order", g.table.order()},
           {"holomorph_order", hol.order()},
           {"quotient_order", hol.order() / g.table.order()},
           {"out_order", a.out_order}};
    if (norm_brute) {
      const RegularRep rep = regular_representation(g.table);
      const PermGroup brute = brute_normalizer(rep.image);
      bool equal = brute.order() == hol.order();
      for (const auto& p : hol.elements()) equal = equal && brute.contains(p);
      r["brute_order"] = brute.order();
      r["agrees"] = equal;
      if (!equal) status = kFailed;
    }
    emit(r);
  });

  // centre-bound
  std::string cb_group;
  auto* centre_bound = app.add_subcommand("centre-bound", "centre order against the product of k2 values");
  centre_bound->add_option("group", cb_group)->required()->check(CLI::ExistingFile);
  on(centre_bound, [&] {
    const LoadedGroup g = load_group_file(cb_group);
    if (!g.perm) throw Error(Errc::kInvalidInput, "centre-bound needs a permutation group");
    const CentreBoundReport c = centre_bound_report(*g.perm);
    emit({{"group", g.name},
          {"degree", g.perm->degree()},
          {"centre_order", c.centre_order},
          {"orbit_reps", c.orbit_reps},
          {"k2_values", c.k2_values},
          {"bound", c.bound},
          {"holds", c.holds}});
    if (!c.holds) status = kFailed;
  });

  // row-reduction
  std::uint32_t rr_n = 2, rr_q = 5;
  auto* row = app.add_subcommand("row-reduction", "longest elementary-transvection word in PSL_n(q)");
  row->add_option("--n", rr_n)->required()->check(CLI::Range(2u, 4u));
  row->add_option("--q", rr_q)->required();
  on(row, [&] {
    const RowReductionReport r = psl_row_reduction_check(rr_n, rr_q);
    emit({{"n", r.n},
          {"q", r.q},
          {"order", r.order},
          {"alphabet_size", r.alphabet_size},
          {"max_length", r.max_length},
          {"bound", r.bound},
          {"holds", r.holds}});
    if (!r.holds) status = kFailed;
  });

  // catalog
  std::string cat_spec, cat_dir;
  auto* catalog = app.add_subcommand("catalog", "build, list or export the group catalog");
  catalog->require_subcommand(1);
  catalog->add_option("--spec", cat_spec, "catalog spec JSON (default: built-in)")->check(CLI::ExistingFile);
  auto* cat_list = catalog->add_subcommand("list", "names and orders");
  on(cat_list, [&] {
    json r{{"records", json::array()}};
    for (const auto& e : catalog_from(cat_spec, {}))
      r["records"].push_back({{"name", e.name}, {"order", e.order()}, {"provenance", e.provenance}});
    emit(r);
  });
  auto* cat_export = catalog->add_subcommand("export", "one group file per entry");
  cat_export->add_option("dir", cat_dir)->required();
  on(cat_export, [&] {
    const auto entries = catalog_from(cat_spec, {});
    export_catalog(entries, cat_dir);
    emit({{"directory", cat_dir}, {"entries", entries.size()}});
  });
  auto* cat_spec_cmd = catalog->add_subcommand("spec", "print the catalog spec");
  on(cat_spec_cmd, [&] {
    std::cout << (cat_spec.empty() ? catalog_spec_to_json(default_catalog_spec()) : read_text_file(cat_spec));
  });

  // bench
  std::vector<std::string> bench_jobs;
  std::string bench_catalog, bench_out;
  bool bench_no_unique = false;
  std::size_t bench_factor = 2;
  auto* bench = app.add_subcommand("bench", "length ledger over a family of jobs");
  bench->add_option("jobs", bench_jobs, "job files")->check(CLI::ExistingFile);
  bench->add_option("--catalog", bench_catalog, "catalog directory (default: built-in)")->check(CLI::ExistingDirectory);
  bench->add_option("-o,--output", bench_out, "output directory");
  bench->add_option("--factor", bench_factor, "uniqueness sweep covers orders ≤ factor·|target|");
  bench->add_flag("--no-unique", bench_no_unique, "skip uniqueness sweeps");
  on(bench, [&] {
    std::vector<NamedJob> jobs;
    std::vector<BenchRecord> load_failures;
    for (const auto& path : bench_jobs) {
      try {
        LoadedJob l = load_job_file(path);
        jobs.push_back({l.name, std::move(l.job)});
      } catch (const Error& e) {
        BenchRecord r;
        r.name = fs::path(path).stem().string();
        r.status = errc_name(e.code());
        r.message = e.what();
        load_failures.push_back(std::move(r));
      }
    }
    const auto entries = bench_no_unique ? std::vector<CatalogEntry>{} : catalog_from({}, bench_catalog);
    BenchOptions o;
    o.check = check_options();
    o.uniqueness = !bench_no_unique;
    o.uniqueness_factor = bench_factor;
    BenchReport report = bench_family(jobs, named(entries), o);
    for (auto& r : load_failures) report.records.push_back(std::move(r));
    if (!bench_out.empty()) write_bench(report, bench_out);
    json r = json::parse(bench_json(report));
    if (!bench_out.empty()) r["directory"] = bench_out;
    emit(r);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    apply_config(app);
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) handler();
  } catch (const Error& e) {
    std::cerr << "sgd: " << e.what() << "\n";
    return is_verification_failure(e.code()) ? kFailed : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "sgd: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
