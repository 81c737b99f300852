#include "pathideal/errors.hpp"
#include "pathideal/sweep.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace pathideal;
namespace fs = std::filesystem;

namespace {

SweepConfig single(std::uint32_t n, std::uint32_t t, std::uint32_t s) {
  SweepConfig cfg;
  cfg.n_min = cfg.n_max = n;
  cfg.t_min = cfg.t_max = t;
  cfg.s_min = cfg.s_max = s;
  cfg.include_below_threshold = false;
  return cfg;
}

const CellRecord& only(const VerificationReport& r, std::string_view quantity) {
  const auto hits = r.find(quantity);
  REQUIRE(hits.size() >= 1);
  return *hits.front();
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("pathideal-sweep-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("cell enumeration") {
  SweepConfig cfg;
  const auto cells = sweep_cells(cfg);
  CHECK(cells.size() == 63);
  std::size_t below = 0;
  for (const auto& c : cells) {
    if (c.n < c.t) {
      ++below;
      CHECK(c.s == 1);
    }
    if (c.s >= 3) CHECK(c.n <= 7);
  }
  CHECK(below == 6);

  auto empty = single(3, 5, 1);
  empty.n_min = 1;
  CHECK(sweep_cells(empty).empty());
  const auto r = run_sweep(empty);
  CHECK(r.records.empty());
  CHECK(r.summary == ReportSummary{});
  CHECK(r.ok());

  SweepConfig bad;
  bad.t_min = 5;
  bad.t_max = 4;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = SweepConfig{};
  bad.characteristic = 4;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("single non-linear cell") {
  const auto r = run_sweep(single(7, 3, 2));
  CHECK(r.ok());
  CHECK(r.summary.cells == 1);
  const auto& reg = only(r, "reg");
  CHECK(reg.formula == "7");
  CHECK(reg.oracle == "7");
  CHECK(reg.status == Status::pass);
  CHECK(only(r, "linear_resolution").oracle == "0");
  CHECK(only(r, "quasi_linear").oracle == "0");
  CHECK(only(r, "quasi_witness").status == Status::pass);
  CHECK(only(r, "generators").oracle == "15");
  CHECK(r.find("tail_j").size() == 4);
  for (const auto& rec : r.records) {
    CAPTURE(rec.quantity);
    CHECK(rec.status == Status::pass);
    CHECK(rec.reproduce.empty());
  }
}

TEST_CASE("single linear cell") {
  const auto r = run_sweep(single(5, 3, 2));
  CHECK(r.ok());
  CHECK(only(r, "reg").oracle == "5");
  CHECK(only(r, "pd").oracle == "3");
  CHECK(only(r, "betti_1").formula == "6");
  CHECK(only(r, "betti_1").oracle == "6");
  CHECK(only(r, "linear_quotients").status == Status::pass);
}

TEST_CASE("below-threshold cells are the zero ideal") {
  auto cfg = single(2, 3, 1);
  cfg.include_below_threshold = true;
  cfg.n_min = 1;
  const auto r = run_sweep(cfg);
  CHECK(r.summary.cells == 2);
  for (const auto* rec : r.find("reg")) {
    CHECK(rec->formula == "0");
    CHECK(rec->oracle == "0");
  }
  CHECK(r.ok());
}

TEST_CASE("cap overruns become skipped cells") {
  auto cfg = single(9, 2, 2);
  cfg.lattice_cap = 50;
  const auto r = run_sweep(cfg);
  CHECK(r.ok());
  CHECK(r.summary.skipped == 1);
  const auto& reg = only(r, "reg");
  CHECK(reg.status == Status::skipped);
  CHECK_FALSE(reg.oracle.has_value());
  CHECK(reg.reproduce.find("pathideal verify --n-min 9 --n-max 9 --t-min 2 --t-max 2") == 0);
  CHECK(report_to_csv(r).find("9,2,2,reg,5,,skipped,") != std::string::npos);
}

TEST_CASE("report serialisation") {
  auto cfg = single(6, 3, 2);
  const auto r = run_sweep(cfg);

  SUBCASE("JSON round trip") {
    const auto back = report_from_json(report_to_json(r));
    CHECK(back == r);
    CHECK(report_to_json(back) == report_to_json(r));
  }

  SUBCASE("CSV layout") {
    const auto csv = report_to_csv(r);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,t,s,quantity,formula,oracle,status,ms");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      CHECK(std::count(line.begin(), line.end(), ',') == 7);
    }
    CHECK(rows == r.records.size());
    CHECK(csv.find("6,3,2,reg,5,5,pass,") != std::string::npos);
  }

  SUBCASE("emit to files") {
    const auto dir = scratch_dir("emit");
    fs::create_directories(dir);
    emit_table(r, TableFormat::csv, dir / "r.csv");
    emit_table(r, TableFormat::json, dir / "r.json");
    CHECK(slurp(dir / "r.csv") == report_to_csv(r));
    CHECK(report_from_json(slurp(dir / "r.json")) == r);
    CHECK_THROWS_AS(emit_table(r, TableFormat::csv, dir / "missing" / "r.csv"), Error);
    fs::remove_all(dir);
  }
}

TEST_CASE("status names") {
  for (auto s : {Status::pass, Status::fail, Status::skipped, Status::discrepancy})
    CHECK(status_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(status_from_string("maybe"), Error);
}

TEST_CASE("sweeps are deterministic across runs and job counts") {
  SweepConfig cfg;
  cfg.t_max = 3;
  cfg.n_max = 7;
  cfg.s_max = 2;
  const auto a = report_to_json(run_sweep(cfg), false);
  const auto b = report_to_json(run_sweep(cfg), false);
  cfg.jobs = 3;
  const auto c = report_to_json(run_sweep(cfg), false);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.find("\"ms\"") == std::string::npos);
}

TEST_CASE("sweeps reuse the Betti cache") {
  const auto dir = scratch_dir("cache");
  auto cfg = single(7, 3, 2);
  cfg.cache_dir = dir;
  const auto first = run_sweep(cfg);
  std::size_t entries = 0;
  for (const auto& e : fs::directory_iterator(dir)) entries += e.path().extension() == ".json";
  CHECK(entries > 0);

  const auto second = run_sweep(cfg);
  CHECK(report_to_json(first, false) == report_to_json(second, false));

  BettiCache cache(dir);
  bool skipped = false;
  run_cell({7, 3, 2}, cfg, cache, skipped);
  CHECK(cache.misses() == 0);
  CHECK(cache.hits() > 0);

  cfg.characteristic = 3;
  BettiCache cache3(dir);
  run_cell({7, 3, 2}, cfg, cache3, skipped);
  CHECK(cache3.misses() > 0);
  fs::remove_all(dir);
}
