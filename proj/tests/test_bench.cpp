#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "core/bench.hpp"
#include "core/csv.hpp"
#include "core/error.hpp"
#include "core/peak_memory.hpp"
#include "core/scaling.hpp"

using namespace ddm;

namespace {

BenchRecord rec(std::string algo, std::uint64_t n, std::size_t p, double wct,
                std::size_t rep = 0) {
  BenchRecord r;
  r.algorithm = std::move(algo);
  r.n = n;
  r.alpha = 1;
  r.workers = p;
  r.rep = rep;
  r.seed = 1;
  r.wct_seconds = wct;
  r.k = 10;
  return r;
}

const ScalingRow* find_row(const ScalingSummary& s, std::uint64_t n, std::size_t p) {
  for (const auto& row : s.rows) {
    if (row.n == n && row.workers == p) return &row;
  }
  return nullptr;
}

SuiteConfig small_suite() {
  SuiteConfig c;
  c.algorithms = {Algorithm::BruteForce, Algorithm::Grid, Algorithm::IntervalTree,
                  Algorithm::SortBased, Algorithm::ParallelSortBased};
  c.sizes = {2000};
  c.alphas = {1.0};
  c.workers = {1, 3};
  c.reps = 2;
  c.grid_cells = 16;
  return c;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("suite runs") {
  SUBCASE("one rep, one algorithm, one N gives one record") {
    SuiteConfig c;
    c.algorithms = {Algorithm::SortBased};
    c.sizes = {1000};
    c.alphas = {1.0};
    c.reps = 1;
    const SuiteResult r = run_suite(c);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].wct_seconds > 0);
    CHECK(r.records[0].rep == 0);
    REQUIRE(r.aggregates.size() == 1);
    CHECK(r.aggregates[0].reps == 1);
    CHECK(r.aggregates[0].wct_stddev == 0);
  }
  SUBCASE("every algorithm agrees on K, sbm and grid only at P = 1") {
    const SuiteResult r = run_suite(small_suite());
    // bf, itm, sbm-par at P in {1, 3}; grid and sbm at P = 1.
    CHECK(r.records.size() == (3 * 2 + 2) * 2);
    for (const auto& x : r.records) {
      CHECK(x.k == r.records[0].k);
      if (x.algorithm == "sbm" || x.algorithm == "grid") CHECK(x.workers == 1);
    }
    CHECK(r.skipped.empty());
  }
  SUBCASE("identical config gives identical K columns") {
    SuiteConfig c = small_suite();
    c.alphas = {0.01, 100.0};
    c.fresh_seeds = true;
    const SuiteResult a = run_suite(c);
    const SuiteResult b = run_suite(c);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].k == b.records[i].k);
      CHECK(a.records[i].seed == b.records[i].seed);
    }
    // Fresh seeds: rep r runs on seed + r.
    for (const auto& x : a.records) CHECK(x.seed == c.seed + x.rep);
  }
  SUBCASE("budget overruns are skipped with a reason") {
    SuiteConfig c;
    c.algorithms = {Algorithm::BruteForce};
    c.sizes = {20000, 40000};
    c.alphas = {1.0};
    c.reps = 2;
    c.warmup = false;
    c.time_budget_secs = 1e-6;
    std::vector<std::string> log;
    const SuiteResult r = run_suite(c, [&](const std::string& m) { log.push_back(m); });
    CHECK(r.records.empty());
    REQUIRE(r.skipped.size() == 2);
    CHECK(r.skipped[0].find("time budget") != std::string::npos);
    CHECK(r.skipped[1].find("N=20000") != std::string::npos);
    CHECK(log == r.skipped);
  }
  SUBCASE("bad configs") {
    SuiteConfig c = small_suite();
    c.reps = 0;
    CHECK_THROWS_AS(run_suite(c), Error);
    c = small_suite();
    c.workers = {0};
    CHECK_THROWS_AS(run_suite(c), Error);
    c = small_suite();
    c.sizes.clear();
    CHECK_THROWS_AS(run_suite(c), Error);
  }
}

TEST_CASE("aggregation") {
  std::vector<BenchRecord> rs{rec("sbm", 10, 1, 1.0, 0), rec("sbm", 10, 1, 2.0, 1),
                              rec("sbm", 10, 1, 4.0, 2), rec("bf", 10, 1, 3.0, 0)};
  const auto agg = aggregate(rs);
  REQUIRE(agg.size() == 2);
  const auto& sbm = agg[0].algorithm == "sbm" ? agg[0] : agg[1];
  CHECK(sbm.reps == 3);
  CHECK(sbm.wct_mean == doctest::Approx(7.0 / 3));
  // sample standard deviation
  const double m = 7.0 / 3;
  const double var = ((1 - m) * (1 - m) + (2 - m) * (2 - m) + (4 - m) * (4 - m)) / 2;
  CHECK(sbm.wct_stddev == doctest::Approx(std::sqrt(var)));
  CHECK(sbm.k_mean == 10);
}

TEST_CASE("worker sweep") {
  const auto sweep = default_worker_sweep();
  REQUIRE_FALSE(sweep.empty());
  CHECK(sweep.front() == 1);
  for (std::size_t i = 1; i < sweep.size(); ++i) CHECK(sweep[i] == 2 * sweep[i - 1]);
  CHECK(sweep.back() <= 2 * physical_cores());
  CHECK(physical_cores() >= 1);
}

TEST_CASE("scaling") {
  SUBCASE("speedup and strong efficiency") {
    const std::vector<BenchRecord> rs{rec("sbm-par", 100, 1, 10), rec("sbm-par", 100, 4, 4)};
    const auto s = compute_scaling(rs);
    const ScalingRow* r4 = find_row(s, 100, 4);
    REQUIRE(r4 != nullptr);
    CHECK(*r4->speedup == doctest::Approx(2.5));
    CHECK(*r4->strong_efficiency == doctest::Approx(0.625));
  }
  SUBCASE("equal times give unit speedup") {
    std::vector<BenchRecord> rs;
    for (std::size_t p : {1u, 2u, 4u, 8u}) rs.push_back(rec("itm", 100, p, 3.5));
    const auto s = compute_scaling(rs);
    for (std::size_t p : {1u, 2u, 4u, 8u}) CHECK(*find_row(s, 100, p)->speedup == 1.0);
  }
  SUBCASE("weak efficiency") {
    const std::vector<BenchRecord> rs{rec("sbm-par", 100, 1, 8), rec("sbm-par", 400, 4, 10)};
    const auto s = compute_scaling(rs);
    const ScalingRow* r = find_row(s, 400, 4);
    REQUIRE(r != nullptr);
    CHECK(*r->weak_efficiency == doctest::Approx(0.8));
    // T(400, 1) is missing: no strong scaling for this cell.
    CHECK_FALSE(r->speedup.has_value());
    CHECK_FALSE(s.warnings.empty());
  }
  SUBCASE("means over reps") {
    const std::vector<BenchRecord> rs{rec("bf", 50, 1, 9, 0), rec("bf", 50, 1, 11, 1),
                                      rec("bf", 50, 2, 5, 0), rec("bf", 50, 2, 5, 1)};
    CHECK(*find_row(compute_scaling(rs), 50, 2)->speedup == doctest::Approx(2.0));
  }
  SUBCASE("algorithms do not share baselines") {
    const std::vector<BenchRecord> rs{rec("bf", 50, 1, 9), rec("itm", 50, 2, 3)};
    const auto s = compute_scaling(rs);
    CHECK_FALSE(find_row(s, 50, 2)->speedup.has_value());
    CHECK(s.warnings.size() >= 1);
  }
}

TEST_CASE("csv") {
  SUBCASE("records round trip") {
    const SuiteResult r = run_suite(small_suite());
    std::stringstream buf;
    write_records_csv(buf, r.records, false);
    const std::string header = buf.str().substr(0, buf.str().find('\n'));
    CHECK(header == "algorithm,N,alpha,P,rep,seed,mode,wct_seconds,K");
    const auto back = read_records_csv(buf);
    REQUIRE(back.size() == r.records.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      CHECK(back[i].algorithm == r.records[i].algorithm);
      CHECK(back[i].wct_seconds == r.records[i].wct_seconds);
      CHECK(back[i].k == r.records[i].k);
      CHECK(back[i].workers == r.records[i].workers);
      CHECK(back[i].mode == r.records[i].mode);
    }
    // Aggregates recomputed from the CSV equal the emitted ones exactly.
    const auto again = aggregate(back);
    REQUIRE(again.size() == r.aggregates.size());
    std::stringstream a, b;
    write_aggregates_csv(a, r.aggregates);
    write_aggregates_csv(b, again);
    CHECK(a.str() == b.str());
  }
  SUBCASE("memory column") {
    std::vector<BenchRecord> rs{rec("sbm", 10, 1, 0.5)};
    rs[0].peak_rss_bytes = 123456;
    std::stringstream buf;
    write_records_csv(buf, rs, true);
    CHECK(buf.str().find("K,peak_rss_bytes\n") != std::string::npos);
    const auto back = read_records_csv(buf);
    REQUIRE(back.size() == 1);
    CHECK(back[0].peak_rss_bytes == std::optional<std::uint64_t>(123456));
  }
  SUBCASE("malformed rows") {
    std::istringstream bad("algorithm,N,alpha,P,rep,seed,mode,wct_seconds,K\nsbm,10,1,x,0,1,count,1,2\n");
    CHECK_THROWS_AS(read_records_csv(bad), Error);
    std::istringstream wrong_header("a,b\n");
    CHECK_THROWS_AS(read_records_csv(wrong_header), Error);
  }
  SUBCASE("decimal formatting is shortest round trip") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(100) == "100");
    CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
  }
  SUBCASE("scaling csv leaves uncomputable cells empty") {
    const std::vector<BenchRecord> rs{rec("sbm-par", 400, 4, 10)};
    std::stringstream buf;
    write_scaling_csv(buf, compute_scaling(rs));
    CHECK(buf.str() ==
          "algorithm,N,alpha,P,wct_mean,speedup,strong_efficiency,weak_efficiency\n"
          "sbm-par,400,1,4,10,,,\n");
  }
}

}  // TEST_SUITE

TEST_SUITE("memory") {

TEST_CASE("peak memory") {
  if (!peak_rss_supported()) {
    MESSAGE("peak RSS unsupported here; column is omitted");
    SuiteConfig c;
    c.algorithms = {Algorithm::SortBased};
    c.sizes = {1000};
    c.alphas = {1.0};
    c.reps = 1;
    c.measure_memory = true;
    CHECK_FALSE(run_suite(c).records[0].peak_rss_bytes.has_value());
    return;
  }
  const auto peak = [](Algorithm algo, std::uint64_t n) {
    SuiteConfig c;
    c.algorithms = {algo};
    c.sizes = {n};
    c.alphas = {1.0};
    c.reps = 1;
    c.warmup = false;
    c.measure_memory = true;
    const SuiteResult r = run_suite(c);
    REQUIRE(r.records.size() == 1);
    REQUIRE(r.records[0].peak_rss_bytes.has_value());
    return *r.records[0].peak_rss_bytes;
  };
  SUBCASE("sort-based needs more than brute force") {
    CHECK(peak(Algorithm::SortBased, 200000) > peak(Algorithm::BruteForce, 200000));
  }
  SUBCASE("sort-based memory grows with N") {
    const auto a = peak(Algorithm::SortBased, 100000);
    const auto b = peak(Algorithm::SortBased, 1000000);
    const auto c = peak(Algorithm::SortBased, 10000000);
    CHECK(a < b);
    CHECK(b < c);
  }
}

}  // TEST_SUITE
