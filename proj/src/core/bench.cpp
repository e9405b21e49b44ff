#include "core/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <tuple>

#include "core/error.hpp"
#include "core/peak_memory.hpp"
#include "core/worker_pool.hpp"
#include "core/workload.hpp"

namespace ddm {

namespace {

bool uses_workers(Algorithm algo) {
  return algo == Algorithm::BruteForce || algo == Algorithm::IntervalTree ||
         algo == Algorithm::ParallelSortBased;
}

std::string describe(Algorithm algo, std::uint64_t n, double alpha, std::size_t p) {
  std::ostringstream os;
  os << algorithm_name(algo) << " N=" << n << " alpha=" << alpha << " P=" << p;
  return os.str();
}

struct Combination {
  Algorithm algo;
  std::size_t workers;
  bool over_budget = false;
  std::uint64_t over_budget_n = 0;
};

}  // namespace

std::size_t physical_cores() {
  std::ifstream cpuinfo("/proc/cpuinfo");
  std::set<std::pair<std::string, std::string>> cores;
  std::string line, physical = "0";
  while (std::getline(cpuinfo, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = line.substr(0, line.find_last_not_of(" \t", colon - 1) + 1);
    const std::string value = colon + 2 <= line.size() ? line.substr(colon + 2) : "";
    if (key == "physical id") physical = value;
    if (key == "core id") cores.emplace(physical, value);
  }
  if (!cores.empty()) return cores.size();
  return hardware_threads();
}

std::vector<std::size_t> default_worker_sweep() {
  std::vector<std::size_t> sweep;
  const std::size_t limit = 2 * physical_cores();
  for (std::size_t p = 1; p <= limit; p *= 2) sweep.push_back(p);
  if (sweep.back() != limit) sweep.push_back(limit);
  return sweep;
}

std::vector<BenchAggregate> aggregate(const std::vector<BenchRecord>& records) {
  using Key = std::tuple<std::string, std::uint64_t, double, std::size_t, int>;
  std::map<Key, std::size_t> slot;
  std::vector<BenchAggregate> out;
  std::vector<std::vector<const BenchRecord*>> members;
  for (const auto& r : records) {
    const Key key{r.algorithm, r.n, r.alpha, r.workers, static_cast<int>(r.mode)};
    auto [it, inserted] = slot.try_emplace(key, out.size());
    if (inserted) {
      BenchAggregate a;
      a.algorithm = r.algorithm;
      a.n = r.n;
      a.alpha = r.alpha;
      a.workers = r.workers;
      a.seed = r.seed;
      a.mode = r.mode;
      out.push_back(a);
      members.emplace_back();
    }
    members[it->second].push_back(&r);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& rs = members[i];
    BenchAggregate& a = out[i];
    a.reps = rs.size();
    a.seed = rs.front()->seed;
    double sum = 0.0, ksum = 0.0;
    for (const auto* r : rs) {
      sum += r->wct_seconds;
      ksum += static_cast<double>(r->k);
      a.seed = std::min(a.seed, r->seed);
    }
    a.wct_mean = sum / static_cast<double>(rs.size());
    a.k_mean = ksum / static_cast<double>(rs.size());
    double sq = 0.0;
    for (const auto* r : rs) sq += (r->wct_seconds - a.wct_mean) * (r->wct_seconds - a.wct_mean);
    a.wct_stddev = rs.size() > 1 ? std::sqrt(sq / static_cast<double>(rs.size() - 1)) : 0.0;
  }
  return out;
}

SuiteResult run_suite(const SuiteConfig& config, const BenchLog& log) {
  if (config.algorithms.empty() || config.sizes.empty() || config.alphas.empty() ||
      config.workers.empty()) {
    fail(ErrorCode::kInvalidArgument, "suite needs algorithms, N, alpha and P values");
  }
  if (config.reps == 0) fail(ErrorCode::kInvalidArgument, "reps must be >= 1");
  for (std::size_t p : config.workers) {
    if (p == 0) fail(ErrorCode::kInvalidArgument, "worker count must be >= 1");
  }
  const auto say = [&](const std::string& msg) {
    if (log) log(msg);
  };

  std::vector<Combination> combos;
  for (Algorithm algo : config.algorithms) {
    if (uses_workers(algo)) {
      for (std::size_t p : config.workers) combos.push_back({algo, p});
    } else {
      combos.push_back({algo, 1});
    }
  }
  std::map<std::size_t, std::unique_ptr<WorkerPool>> pools;
  for (const auto& c : combos) {
    if (c.workers > 1 && !pools.contains(c.workers)) {
      pools[c.workers] = std::make_unique<WorkerPool>(std::min(c.workers, hardware_threads()));
    }
  }
  const bool with_memory = config.measure_memory && peak_rss_supported();
  if (config.measure_memory && !with_memory) {
    say("peak RSS measurement unavailable on this platform; column omitted");
  }

  SuiteResult result;
  std::vector<std::uint64_t> sizes = config.sizes;
  std::sort(sizes.begin(), sizes.end());

  for (std::uint64_t n : sizes) {
    for (double alpha : config.alphas) {
      for (auto& combo : combos) combo.over_budget = false;
      const std::size_t workloads = config.fresh_seeds ? config.reps : 1;
      // K per workload seed, shared by every algorithm and P.
      std::map<std::uint64_t, std::uint64_t> expected_k;
      for (std::size_t w = 0; w < workloads; ++w) {
        WorkloadConfig wc;
        wc.total = n;
        wc.alpha = alpha;
        wc.length = config.length;
        wc.seed = config.seed + w;
        wc.dims = config.dims;
        const Workload workload = generate_workload(wc);
        GridOptions grid;
        grid.cell_count = config.grid_cells;
        grid.space_low = 0.0;
        grid.space_high = config.length;

        for (auto& combo : combos) {
          const std::string what = describe(combo.algo, n, alpha, combo.workers);
          if (combo.over_budget) continue;
          if (combo.over_budget_n != 0 && n > combo.over_budget_n) {
            if (w == 0) {
              result.skipped.push_back(what + ": skipped, exceeded time budget at N=" +
                                       std::to_string(combo.over_budget_n));
              say(result.skipped.back());
            }
            continue;
          }
          MatchOptions opts;
          opts.mode = config.mode;
          opts.workers = combo.workers;
          opts.pool = combo.workers > 1 ? pools[combo.workers].get() : nullptr;

          const auto run_once = [&](BenchRecord* rec) {
            const Deadline deadline(config.time_budget_secs);
            opts.deadline = &deadline;
            PairReport report;
            const auto body = [&] {
              const auto t0 = std::chrono::steady_clock::now();
              report = match_dd(workload.subscriptions, workload.updates, combo.algo,
                                opts, grid);
              const auto t1 = std::chrono::steady_clock::now();
              if (rec != nullptr) {
                rec->wct_seconds = std::chrono::duration<double>(t1 - t0).count();
              }
            };
            if (rec != nullptr && with_memory) {
              rec->peak_rss_bytes = measure_peak_memory(body);
            } else {
              body();
            }
            if (deadline.expired()) fail(ErrorCode::kBudgetExceeded, "time budget exceeded");
            return report.count;
          };

          try {
            if (config.warmup && w == 0) run_once(nullptr);
            const std::size_t first = config.fresh_seeds ? w : 0;
            const std::size_t last = config.fresh_seeds ? w + 1 : config.reps;
            for (std::size_t rep = first; rep < last; ++rep) {
              BenchRecord rec;
              rec.algorithm = std::string(algorithm_name(combo.algo));
              rec.n = n;
              rec.alpha = alpha;
              rec.workers = combo.workers;
              rec.rep = rep;
              rec.seed = wc.seed;
              rec.mode = config.mode;
              rec.k = run_once(&rec);
              auto [it, fresh] = expected_k.try_emplace(wc.seed, rec.k);
              if (!fresh && it->second != rec.k) {
                fail(ErrorCode::kContract,
                     what + ": K=" + std::to_string(rec.k) + " disagrees with K=" +
                         std::to_string(it->second) + " from an earlier run");
              }
              result.records.push_back(rec);
            }
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kBudgetExceeded) throw;
            combo.over_budget = true;
            combo.over_budget_n = n;
            result.skipped.push_back(what + ": skipped, a run exceeded the " +
                                     std::to_string(config.time_budget_secs) +
                                     " s time budget");
            say(result.skipped.back());
          }
        }
      }
    }
  }
  result.aggregates = aggregate(result.records);
  return result;
}

}  // namespace ddm
