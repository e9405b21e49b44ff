#include "ddm/ddm.h"

#include <chrono>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <string>

#include "core/bench.hpp"
#include "core/csv.hpp"
#include "core/error.hpp"
#include "core/extent_io.hpp"
#include "core/matcher.hpp"
#include "core/peak_memory.hpp"
#include "core/scaling.hpp"
#include "core/workload.hpp"

struct ddm_extents {
  ddm::ExtentSet rep;
};

struct ddm_report {
  ddm::PairReport rep;
  double wct_seconds = 0.0;
};

struct ddm_bench_config {
  ddm::SuiteConfig rep;
  bool algorithms_set = false;
  bool sizes_set = false;
  bool alphas_set = false;
  bool workers_set = false;
};

namespace {

thread_local std::string last_error;

ddm_status set_error(ddm_status status, const std::string& message) {
  last_error = message;
  return status;
}

ddm_status to_status(ddm::ErrorCode code) {
  switch (code) {
    case ddm::ErrorCode::kInvalidArgument: return DDM_ERR_INVALID_ARGUMENT;
    case ddm::ErrorCode::kParse: return DDM_ERR_PARSE;
    case ddm::ErrorCode::kIo: return DDM_ERR_IO;
    case ddm::ErrorCode::kBudgetExceeded: return DDM_ERR_BUDGET_EXCEEDED;
    case ddm::ErrorCode::kContract: return DDM_ERR_CONTRACT;
  }
  return DDM_ERR_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
ddm_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return DDM_OK;
  } catch (const ddm::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(DDM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(DDM_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(DDM_ERR_INTERNAL, "unknown error");
  }
}

ddm_status null_argument(const char* name) {
  return set_error(DDM_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

ddm::Algorithm to_algorithm(ddm_algorithm algo) {
  switch (algo) {
    case DDM_ALGO_BRUTE_FORCE: return ddm::Algorithm::BruteForce;
    case DDM_ALGO_GRID: return ddm::Algorithm::Grid;
    case DDM_ALGO_INTERVAL_TREE: return ddm::Algorithm::IntervalTree;
    case DDM_ALGO_SBM: return ddm::Algorithm::SortBased;
    case DDM_ALGO_SBM_PARALLEL: return ddm::Algorithm::ParallelSortBased;
  }
  ddm::fail(ddm::ErrorCode::kInvalidArgument, "unknown algorithm value");
}

ddm_algorithm from_algorithm(ddm::Algorithm algo) {
  switch (algo) {
    case ddm::Algorithm::BruteForce: return DDM_ALGO_BRUTE_FORCE;
    case ddm::Algorithm::Grid: return DDM_ALGO_GRID;
    case ddm::Algorithm::IntervalTree: return DDM_ALGO_INTERVAL_TREE;
    case ddm::Algorithm::SortBased: return DDM_ALGO_SBM;
    case ddm::Algorithm::ParallelSortBased: return DDM_ALGO_SBM_PARALLEL;
  }
  return DDM_ALGO_SBM_PARALLEL;
}

ddm::ReportMode to_mode(ddm_mode mode) {
  if (mode == DDM_MODE_LIST) return ddm::ReportMode::List;
  if (mode == DDM_MODE_COUNT) return ddm::ReportMode::Count;
  ddm::fail(ddm::ErrorCode::kInvalidArgument, "unknown report mode");
}

ddm::WorkloadConfig to_workload(const ddm_workload_config& c) {
  ddm::WorkloadConfig w;
  w.total = c.total;
  w.alpha = c.alpha;
  w.length = c.length;
  w.seed = c.seed;
  w.dims = c.dims;
  return w;
}

ddm::BenchLog make_log(ddm_log_fn log, void* user) {
  if (log == nullptr) return {};
  return [log, user](const std::string& msg) { log(msg.c_str(), user); };
}

}  // namespace

extern "C" {

const char* ddm_version(void) { return "0.1.0"; }

const char* ddm_last_error(void) { return last_error.c_str(); }

ddm_status ddm_algorithm_from_name(const char* name, ddm_algorithm* out) {
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = from_algorithm(ddm::algorithm_from_name(name)); });
}

const char* ddm_algorithm_name(ddm_algorithm algo) {
  try {
    return ddm::algorithm_name(to_algorithm(algo)).data();
  } catch (...) {
    return "?";
  }
}

// ---- extents ---------------------------------------------------------------

ddm_status ddm_extents_create(ddm_kind kind, size_t dims, ddm_extents** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    if (kind != DDM_SUBSCRIPTION && kind != DDM_UPDATE) {
      ddm::fail(ddm::ErrorCode::kInvalidArgument, "unknown extent kind");
    }
    const auto k = kind == DDM_SUBSCRIPTION ? ddm::Kind::Subscription : ddm::Kind::Update;
    *out = new ddm_extents{ddm::ExtentSet(k, dims)};
  });
}

void ddm_extents_destroy(ddm_extents* set) { delete set; }

ddm_status ddm_extents_append(ddm_extents* set, const double* bounds, uint32_t* out_id) {
  if (set == nullptr) return null_argument("set");
  if (bounds == nullptr) return null_argument("bounds");
  return guarded([&] {
    std::vector<ddm::Interval> b(set->rep.dims());
    for (std::size_t k = 0; k < b.size(); ++k) b[k] = {bounds[2 * k], bounds[2 * k + 1]};
    const ddm::ExtentId id = set->rep.push_back(b);
    if (out_id != nullptr) *out_id = id;
  });
}

size_t ddm_extents_size(const ddm_extents* set) { return set ? set->rep.size() : 0; }

size_t ddm_extents_dims(const ddm_extents* set) { return set ? set->rep.dims() : 0; }

ddm_kind ddm_extents_kind(const ddm_extents* set) {
  return set && set->rep.kind() == ddm::Kind::Update ? DDM_UPDATE : DDM_SUBSCRIPTION;
}

ddm_status ddm_extents_get(const ddm_extents* set, uint32_t id, double* bounds_out) {
  if (set == nullptr) return null_argument("set");
  if (bounds_out == nullptr) return null_argument("bounds_out");
  return guarded([&] {
    const ddm::Extent e = set->rep.extent(id);
    for (std::size_t k = 0; k < e.dims(); ++k) {
      bounds_out[2 * k] = e.bounds[k].low;
      bounds_out[2 * k + 1] = e.bounds[k].high;
    }
  });
}

// ---- workloads and files ---------------------------------------------------

void ddm_workload_config_init(ddm_workload_config* cfg) {
  if (cfg == nullptr) return;
  cfg->total = 0;
  cfg->alpha = 1.0;
  cfg->length = 1e6;
  cfg->seed = 1;
  cfg->dims = 1;
}

ddm_status ddm_workload_generate(const ddm_workload_config* cfg,
                                 ddm_extents** subscriptions, ddm_extents** updates) {
  if (cfg == nullptr) return null_argument("cfg");
  if (subscriptions == nullptr || updates == nullptr) return null_argument("output");
  *subscriptions = nullptr;
  *updates = nullptr;
  return guarded([&] {
    ddm::Workload w = ddm::generate_workload(to_workload(*cfg));
    auto s = std::make_unique<ddm_extents>(ddm_extents{std::move(w.subscriptions)});
    auto u = std::make_unique<ddm_extents>(ddm_extents{std::move(w.updates)});
    *subscriptions = s.release();
    *updates = u.release();
  });
}

ddm_status ddm_extents_save(const char* path, const ddm_extents* subscriptions,
                            const ddm_extents* updates, const ddm_workload_config* config) {
  if (path == nullptr) return null_argument("path");
  if (subscriptions == nullptr || updates == nullptr) return null_argument("extents");
  return guarded([&] {
    std::optional<ddm::WorkloadConfig> meta;
    if (config != nullptr) meta = to_workload(*config);
    ddm::save_extents(path, subscriptions->rep, updates->rep, meta);
  });
}

ddm_status ddm_extents_load(const char* path, ddm_extents** subscriptions,
                            ddm_extents** updates) {
  if (path == nullptr) return null_argument("path");
  if (subscriptions == nullptr || updates == nullptr) return null_argument("output");
  *subscriptions = nullptr;
  *updates = nullptr;
  return guarded([&] {
    ddm::Workload w = ddm::load_extents(path);
    auto s = std::make_unique<ddm_extents>(ddm_extents{std::move(w.subscriptions)});
    auto u = std::make_unique<ddm_extents>(ddm_extents{std::move(w.updates)});
    *subscriptions = s.release();
    *updates = u.release();
  });
}

// ---- matching --------------------------------------------------------------

void ddm_match_options_init(ddm_match_options* opts) {
  if (opts == nullptr) return;
  opts->algorithm = DDM_ALGO_SBM_PARALLEL;
  opts->mode = DDM_MODE_COUNT;
  opts->workers = 1;
  opts->grid_cells = 1000;
  opts->space_low = 0.0;
  opts->space_high = 1e6;
  opts->time_budget_secs = 0.0;
}

ddm_status ddm_match(const ddm_extents* subscriptions, const ddm_extents* updates,
                     const ddm_match_options* opts, ddm_report** out) {
  if (subscriptions == nullptr || updates == nullptr) return null_argument("extents");
  if (opts == nullptr) return null_argument("opts");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    if (opts->workers == 0) {
      ddm::fail(ddm::ErrorCode::kInvalidArgument, "worker count must be >= 1");
    }
    const ddm::Deadline deadline(opts->time_budget_secs);
    ddm::MatchOptions mo;
    mo.mode = to_mode(opts->mode);
    mo.workers = opts->workers;
    mo.deadline = &deadline;
    ddm::GridOptions grid;
    grid.cell_count = opts->grid_cells;
    grid.space_low = opts->space_low;
    grid.space_high = opts->space_high;
    const ddm::Algorithm algo = to_algorithm(opts->algorithm);

    auto report = std::make_unique<ddm_report>();
    const auto t0 = std::chrono::steady_clock::now();
    report->rep = ddm::match_dd(subscriptions->rep, updates->rep, algo, mo, grid);
    const auto t1 = std::chrono::steady_clock::now();
    report->wct_seconds = std::chrono::duration<double>(t1 - t0).count();
    if (deadline.expired()) {
      ddm::fail(ddm::ErrorCode::kBudgetExceeded, "time budget exceeded");
    }
    *out = report.release();
  });
}

uint64_t ddm_report_count(const ddm_report* report) {
  return report ? report->rep.count : 0;
}

ddm_mode ddm_report_mode(const ddm_report* report) {
  return report && report->rep.mode == ddm::ReportMode::List ? DDM_MODE_LIST
                                                              : DDM_MODE_COUNT;
}

double ddm_report_wct_seconds(const ddm_report* report) {
  return report ? report->wct_seconds : 0.0;
}

size_t ddm_report_pair_count(const ddm_report* report) {
  return report ? report->rep.pairs.size() : 0;
}

ddm_status ddm_report_pair(const ddm_report* report, size_t index, uint32_t* subscription,
                           uint32_t* update) {
  if (report == nullptr) return null_argument("report");
  if (index >= report->rep.pairs.size()) {
    return set_error(DDM_ERR_INVALID_ARGUMENT, "pair index out of range");
  }
  const auto& [s, u] = report->rep.pairs[index];
  if (subscription != nullptr) *subscription = s;
  if (update != nullptr) *update = u;
  return DDM_OK;
}

void ddm_report_destroy(ddm_report* report) { delete report; }

// ---- benchmarking ----------------------------------------------------------

ddm_status ddm_bench_config_create(ddm_bench_config** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto cfg = std::make_unique<ddm_bench_config>();
    cfg->rep.workers = ddm::default_worker_sweep();
    *out = cfg.release();
  });
}

void ddm_bench_config_destroy(ddm_bench_config* cfg) { delete cfg; }

ddm_status ddm_bench_config_add_algorithm(ddm_bench_config* cfg, ddm_algorithm algo) {
  if (cfg == nullptr) return null_argument("cfg");
  return guarded([&] {
    const auto a = to_algorithm(algo);
    if (!cfg->algorithms_set) cfg->rep.algorithms.clear();
    cfg->algorithms_set = true;
    cfg->rep.algorithms.push_back(a);
  });
}

ddm_status ddm_bench_config_add_size(ddm_bench_config* cfg, uint64_t n) {
  if (cfg == nullptr) return null_argument("cfg");
  if (n == 0 || n % 2 != 0) {
    return set_error(DDM_ERR_INVALID_ARGUMENT, "N must be a positive even number");
  }
  if (!cfg->sizes_set) cfg->rep.sizes.clear();
  cfg->sizes_set = true;
  cfg->rep.sizes.push_back(n);
  return DDM_OK;
}

ddm_status ddm_bench_config_add_alpha(ddm_bench_config* cfg, double alpha) {
  if (cfg == nullptr) return null_argument("cfg");
  if (!(alpha > 0)) return set_error(DDM_ERR_INVALID_ARGUMENT, "alpha must be positive");
  if (!cfg->alphas_set) cfg->rep.alphas.clear();
  cfg->alphas_set = true;
  cfg->rep.alphas.push_back(alpha);
  return DDM_OK;
}

ddm_status ddm_bench_config_add_workers(ddm_bench_config* cfg, uint32_t workers) {
  if (cfg == nullptr) return null_argument("cfg");
  if (workers == 0) return set_error(DDM_ERR_INVALID_ARGUMENT, "worker count must be >= 1");
  if (!cfg->workers_set) cfg->rep.workers.clear();
  cfg->workers_set = true;
  cfg->rep.workers.push_back(workers);
  return DDM_OK;
}

void ddm_bench_config_set_reps(ddm_bench_config* cfg, uint32_t reps) {
  if (cfg) cfg->rep.reps = reps;
}
void ddm_bench_config_set_seed(ddm_bench_config* cfg, uint64_t seed) {
  if (cfg) cfg->rep.seed = seed;
}
void ddm_bench_config_set_mode(ddm_bench_config* cfg, ddm_mode mode) {
  if (cfg) cfg->rep.mode = mode == DDM_MODE_LIST ? ddm::ReportMode::List : ddm::ReportMode::Count;
}
void ddm_bench_config_set_dims(ddm_bench_config* cfg, uint32_t dims) {
  if (cfg) cfg->rep.dims = dims;
}
void ddm_bench_config_set_length(ddm_bench_config* cfg, double length) {
  if (cfg) cfg->rep.length = length;
}
void ddm_bench_config_set_grid_cells(ddm_bench_config* cfg, uint32_t cells) {
  if (cfg) cfg->rep.grid_cells = cells;
}
void ddm_bench_config_set_time_budget(ddm_bench_config* cfg, double seconds) {
  if (cfg) cfg->rep.time_budget_secs = seconds;
}
void ddm_bench_config_set_fresh_seeds(ddm_bench_config* cfg, int enabled) {
  if (cfg) cfg->rep.fresh_seeds = enabled != 0;
}
void ddm_bench_config_set_measure_memory(ddm_bench_config* cfg, int enabled) {
  if (cfg) cfg->rep.measure_memory = enabled != 0;
}

ddm_status ddm_bench_run(const ddm_bench_config* cfg, const char* records_csv,
                         const char* aggregates_csv, ddm_log_fn log, void* user,
                         size_t* skipped_out) {
  if (cfg == nullptr) return null_argument("cfg");
  if (records_csv == nullptr) return null_argument("records_csv");
  return guarded([&] {
    std::ofstream out(records_csv);
    if (!out) ddm::fail(ddm::ErrorCode::kIo, std::string("cannot open '") + records_csv + "'");
    const ddm::SuiteResult result = ddm::run_suite(cfg->rep, make_log(log, user));
    const bool with_memory = cfg->rep.measure_memory && ddm::peak_rss_supported();
    ddm::write_records_csv(out, result.records, with_memory);
    if (!out) ddm::fail(ddm::ErrorCode::kIo, "write to records CSV failed");
    if (aggregates_csv != nullptr) {
      std::ofstream agg(aggregates_csv);
      if (!agg) {
        ddm::fail(ddm::ErrorCode::kIo, std::string("cannot open '") + aggregates_csv + "'");
      }
      ddm::write_aggregates_csv(agg, result.aggregates);
    }
    if (skipped_out != nullptr) *skipped_out = result.skipped.size();
  });
}

ddm_status ddm_scaling_from_csv(const char* records_csv, const char* summary_csv,
                                ddm_log_fn log, void* user) {
  if (records_csv == nullptr) return null_argument("records_csv");
  if (summary_csv == nullptr) return null_argument("summary_csv");
  return guarded([&] {
    std::ifstream in(records_csv);
    if (!in) ddm::fail(ddm::ErrorCode::kIo, std::string("cannot open '") + records_csv + "'");
    const auto records = ddm::read_records_csv(in);
    const ddm::ScalingSummary summary = ddm::compute_scaling(records);
    if (log != nullptr) {
      for (const auto& w : summary.warnings) log(w.c_str(), user);
    }
    std::ofstream out(summary_csv);
    if (!out) ddm::fail(ddm::ErrorCode::kIo, std::string("cannot open '") + summary_csv + "'");
    ddm::write_scaling_csv(out, summary);
  });
}

int ddm_peak_memory_supported(void) { return ddm::peak_rss_supported() ? 1 : 0; }

size_t ddm_physical_cores(void) { return ddm::physical_cores(); }

}  // extern "C"
