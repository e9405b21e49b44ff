#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/matcher.hpp"

namespace ddm {

// One timed matcher run.
struct BenchRecord {
  std::string algorithm;
  std::uint64_t n = 0;
  double alpha = 0.0;
  std::size_t workers = 1;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  ReportMode mode = ReportMode::Count;
  double wct_seconds = 0.0;
  std::uint64_t k = 0;
  std::optional<std::uint64_t> peak_rss_bytes;
};

// Mean and sample standard deviation of the reps of one
// (algorithm, N, alpha, P, mode) combination.
struct BenchAggregate {
  std::string algorithm;
  std::uint64_t n = 0;
  double alpha = 0.0;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  ReportMode mode = ReportMode::Count;
  std::size_t reps = 0;
  double wct_mean = 0.0;
  double wct_stddev = 0.0;
  double k_mean = 0.0;
};

struct SuiteConfig {
  std::vector<Algorithm> algorithms{Algorithm::ParallelSortBased};
  std::vector<std::uint64_t> sizes{1000000};
  std::vector<double> alphas{0.01, 1.0, 100.0};
  // Applied to bf, itm and sbm-par; sbm and grid always run once with P = 1.
  std::vector<std::size_t> workers{1};
  std::size_t reps = 30;
  std::uint64_t seed = 1;
  ReportMode mode = ReportMode::Count;
  std::size_t dims = 1;
  double length = 1e6;
  std::size_t grid_cells = 1000;
  double time_budget_secs = 300.0;
  bool fresh_seeds = false;  // rep r uses workload seed + r
  bool warmup = true;
  bool measure_memory = false;
};

struct SuiteResult {
  std::vector<BenchRecord> records;
  std::vector<BenchAggregate> aggregates;
  std::vector<std::string> skipped;  // one reason per skipped combination
};

using BenchLog = std::function<void(const std::string&)>;

// Runs every (N, alpha, algorithm, P) combination. The workload is generated
// once per (N, alpha, seed) outside the timer; the timer covers the matcher
// call only. A run that exceeds the time budget skips the rest of its
// combination, and later combinations of the same algorithm and P at larger
// N. Throws kContract when two algorithms disagree on K for one workload.
SuiteResult run_suite(const SuiteConfig& config, const BenchLog& log = {});

std::vector<BenchAggregate> aggregate(const std::vector<BenchRecord>& records);

// {1, 2, 4, ...} up to twice the physical core count.
std::vector<std::size_t> default_worker_sweep();
std::size_t physical_cores();

}  // namespace ddm
