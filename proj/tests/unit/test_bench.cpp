#include <filesystem>

#include "doctest.h"
#include "sgd/bench.hpp"
#include "sgd/catalog.hpp"
#include "sgd/io.hpp"

using namespace sgd;
namespace fs = std::filesystem;

namespace {

NamedJob fixture_job(const std::string& name) {
  return {name, load_job_file(fs::path(SGD_FIXTURE_DIR) / "jobs" / (name + ".json")).job};
}

}  // namespace

TEST_CASE("bench over small jobs") {
  const auto catalog = load_catalog_dir(fs::path(SGD_FIXTURE_DIR) / "groups");
  std::vector<NamedGroup> named;
  for (const auto& e : catalog) named.push_back({e.name, e.table.get()});

  const BenchReport empty = bench_family({}, named);
  CHECK(empty.records.empty());
  CHECK(empty.fit.fitted == 0);

  const BenchReport r = bench_family({fixture_job("c2"), fixture_job("s3"), fixture_job("a5_wrong_v")}, named);
  REQUIRE(r.records.size() == 3);
  for (std::size_t i = 0; i < 2; ++i) {
    const BenchRecord& rec = r.records[i];
    CHECK(rec.ok());
    CHECK(rec.check_value);
    CHECK(rec.unique == true);
    CHECK(rec.v_tight);
    CHECK(rec.symbol_count <= rec.bound);
    CHECK(rec.sentence.has_value());
  }
  CHECK(r.records[2].status == "DiameterExceeded");
  CHECK_FALSE(r.records[2].sentence.has_value());
  CHECK(r.fit.fitted == 2);

  const std::string csv = bench_csv(r);
  CHECK(csv.rfind("name,order,presentation_length,diameter,v,v_tight,symbol_count,bound,status", 0) == 0);
  CHECK(bench_json(r).find("\"schema\": 1") != std::string::npos);

  const fs::path dir = fs::temp_directory_path() / "sgd_unit_bench";
  fs::remove_all(dir);
  write_bench(r, dir);
  const std::string first = read_text_file(dir / "bench.csv") + read_text_file(dir / "bench.json");
  write_bench(bench_family({fixture_job("c2"), fixture_job("s3"), fixture_job("a5_wrong_v")}, named), dir);
  CHECK(read_text_file(dir / "bench.csv") + read_text_file(dir / "bench.json") == first);
  CHECK(load_sentence_file(dir / "sentences" / "c2.sexp") == *r.records[0].sentence);
}
