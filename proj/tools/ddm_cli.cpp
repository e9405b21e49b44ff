// ddm command-line tool: workload generation, single matcher runs, benchmark
// suites and scaling post-processing. Talks to the library through the C API
// only.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ddm/ddm.h"

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kRuntimeError = 2, kBudgetExceeded = 3 };

struct ExtentsDeleter {
  void operator()(ddm_extents* p) const { ddm_extents_destroy(p); }
};
struct ReportDeleter {
  void operator()(ddm_report* p) const { ddm_report_destroy(p); }
};
struct BenchConfigDeleter {
  void operator()(ddm_bench_config* p) const { ddm_bench_config_destroy(p); }
};
using ExtentsPtr = std::unique_ptr<ddm_extents, ExtentsDeleter>;
using ReportPtr = std::unique_ptr<ddm_report, ReportDeleter>;
using BenchConfigPtr = std::unique_ptr<ddm_bench_config, BenchConfigDeleter>;

int report_failure(ddm_status status) {
  std::cerr << "error: " << ddm_last_error() << '\n';
  switch (status) {
    case DDM_ERR_INVALID_ARGUMENT: return kConfigError;
    case DDM_ERR_BUDGET_EXCEEDED: return kBudgetExceeded;
    default: return kRuntimeError;
  }
}

void log_to_stderr(const char* message, void*) { std::cerr << message << '\n'; }

struct WorkloadArgs {
  std::uint64_t n = 0;
  double alpha = 1.0;
  double length = 1e6;
  std::uint64_t seed = 1;
  std::uint32_t dims = 1;

  void add_to(CLI::App& app, bool required) {
    auto* opt = app.add_option("--n", n, "Total extent count N (even)");
    if (required) opt->required();
    app.add_option("--alpha", alpha, "Overlapping degree")->capture_default_str();
    app.add_option("--length", length, "Routing space length L")->capture_default_str();
    app.add_option("--seed", seed, "Workload RNG seed")->capture_default_str();
    app.add_option("--dims", dims, "Dimensionality")->capture_default_str();
  }

  ddm_workload_config config() const {
    ddm_workload_config cfg;
    ddm_workload_config_init(&cfg);
    cfg.total = n;
    cfg.alpha = alpha;
    cfg.length = length;
    cfg.seed = seed;
    cfg.dims = dims;
    return cfg;
  }
};

ddm_status parse_mode(const std::string& name, ddm_mode& mode) {
  if (name == "count") {
    mode = DDM_MODE_COUNT;
  } else if (name == "list") {
    mode = DDM_MODE_LIST;
  } else {
    return DDM_ERR_INVALID_ARGUMENT;
  }
  return DDM_OK;
}

int run_gen(const WorkloadArgs& args, const std::string& out) {
  const ddm_workload_config cfg = args.config();
  ddm_extents* s = nullptr;
  ddm_extents* u = nullptr;
  if (auto st = ddm_workload_generate(&cfg, &s, &u); st != DDM_OK) return report_failure(st);
  ExtentsPtr subs(s), upds(u);
  if (auto st = ddm_extents_save(out.c_str(), subs.get(), upds.get(), &cfg); st != DDM_OK) {
    return report_failure(st);
  }
  std::cout << "wrote " << ddm_extents_size(subs.get()) << " subscriptions and "
            << ddm_extents_size(upds.get()) << " updates to " << out << '\n';
  return kOk;
}

struct MatchArgs {
  WorkloadArgs workload;
  std::string input;
  std::string algo = "sbm-par";
  std::uint32_t threads = 1;
  std::string mode = "count";
  std::uint32_t grid_cells = 1000;
  double time_budget = 300.0;
  std::string out;
};

int run_match(const MatchArgs& args) {
  ddm_match_options opts;
  ddm_match_options_init(&opts);
  if (auto st = ddm_algorithm_from_name(args.algo.c_str(), &opts.algorithm); st != DDM_OK) {
    return report_failure(st);
  }
  if (parse_mode(args.mode, opts.mode) != DDM_OK) {
    std::cerr << "error: unknown mode '" << args.mode << "'\n";
    return kConfigError;
  }
  opts.workers = args.threads;
  opts.grid_cells = args.grid_cells;
  opts.space_low = 0.0;
  opts.space_high = args.workload.length;
  opts.time_budget_secs = args.time_budget;

  ddm_extents* s = nullptr;
  ddm_extents* u = nullptr;
  ddm_status st;
  if (!args.input.empty()) {
    st = ddm_extents_load(args.input.c_str(), &s, &u);
  } else if (args.workload.n != 0) {
    const ddm_workload_config cfg = args.workload.config();
    st = ddm_workload_generate(&cfg, &s, &u);
  } else {
    std::cerr << "error: match needs --in <file> or --n <count>\n";
    return kConfigError;
  }
  if (st != DDM_OK) return report_failure(st);
  ExtentsPtr subs(s), upds(u);

  ddm_report* r = nullptr;
  if (st = ddm_match(subs.get(), upds.get(), &opts, &r); st != DDM_OK) {
    return report_failure(st);
  }
  ReportPtr report(r);
  std::printf("algorithm=%s P=%u mode=%s K=%llu wct_seconds=%.9g\n",
              ddm_algorithm_name(opts.algorithm), opts.workers, args.mode.c_str(),
              static_cast<unsigned long long>(ddm_report_count(report.get())),
              ddm_report_wct_seconds(report.get()));

  if (opts.mode == DDM_MODE_LIST && !args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "error: cannot open '" << args.out << "'\n";
      return kRuntimeError;
    }
    out << "# subscription update\n";
    const std::size_t pairs = ddm_report_pair_count(report.get());
    for (std::size_t i = 0; i < pairs; ++i) {
      std::uint32_t sid = 0, uid = 0;
      ddm_report_pair(report.get(), i, &sid, &uid);
      out << sid << ' ' << uid << '\n';
    }
  }
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> algos{"sbm-par"};
  std::vector<std::uint64_t> sizes{1000000};
  std::vector<double> alphas{0.01, 1.0, 100.0};
  std::vector<std::uint32_t> threads;
  std::uint32_t reps = 30;
  std::uint64_t seed = 1;
  std::string mode = "count";
  std::uint32_t grid_cells = 1000;
  std::uint32_t dims = 1;
  double length = 1e6;
  double time_budget = 300.0;
  bool fresh_seeds = false;
  bool memory = false;
  std::string out;
  std::string aggregates;
};

int run_bench(const BenchArgs& args) {
  ddm_bench_config* raw = nullptr;
  if (auto st = ddm_bench_config_create(&raw); st != DDM_OK) return report_failure(st);
  BenchConfigPtr cfg(raw);

  for (const auto& name : args.algos) {
    ddm_algorithm algo;
    if (auto st = ddm_algorithm_from_name(name.c_str(), &algo); st != DDM_OK) {
      return report_failure(st);
    }
    ddm_bench_config_add_algorithm(cfg.get(), algo);
  }
  for (auto n : args.sizes) {
    if (auto st = ddm_bench_config_add_size(cfg.get(), n); st != DDM_OK) return report_failure(st);
  }
  for (auto a : args.alphas) {
    if (auto st = ddm_bench_config_add_alpha(cfg.get(), a); st != DDM_OK) return report_failure(st);
  }
  for (auto p : args.threads) {
    if (auto st = ddm_bench_config_add_workers(cfg.get(), p); st != DDM_OK) {
      return report_failure(st);
    }
  }
  ddm_mode mode;
  if (parse_mode(args.mode, mode) != DDM_OK) {
    std::cerr << "error: unknown mode '" << args.mode << "'\n";
    return kConfigError;
  }
  if (args.reps == 0) {
    std::cerr << "error: --reps must be >= 1\n";
    return kConfigError;
  }
  ddm_bench_config_set_mode(cfg.get(), mode);
  ddm_bench_config_set_reps(cfg.get(), args.reps);
  ddm_bench_config_set_seed(cfg.get(), args.seed);
  ddm_bench_config_set_grid_cells(cfg.get(), args.grid_cells);
  ddm_bench_config_set_dims(cfg.get(), args.dims);
  ddm_bench_config_set_length(cfg.get(), args.length);
  ddm_bench_config_set_time_budget(cfg.get(), args.time_budget);
  ddm_bench_config_set_fresh_seeds(cfg.get(), args.fresh_seeds ? 1 : 0);
  ddm_bench_config_set_measure_memory(cfg.get(), args.memory ? 1 : 0);

  std::string aggregates = args.aggregates;
  if (aggregates.empty()) {
    std::filesystem::path p(args.out);
    p.replace_extension(".agg.csv");
    aggregates = p.string();
  }
  std::size_t skipped = 0;
  if (auto st = ddm_bench_run(cfg.get(), args.out.c_str(), aggregates.c_str(),
                              &log_to_stderr, nullptr, &skipped);
      st != DDM_OK) {
    return report_failure(st);
  }
  std::cerr << "records: " << args.out << "\naggregates: " << aggregates << '\n';
  if (skipped != 0) std::cerr << skipped << " combination(s) skipped over budget\n";
  return kOk;
}

int run_scaling(const std::string& in, const std::string& out) {
  if (auto st = ddm_scaling_from_csv(in.c_str(), out.c_str(), &log_to_stderr, nullptr);
      st != DDM_OK) {
    return report_failure(st);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data distribution management matching library and benchmark harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ddm_version()));

  auto* gen = app.add_subcommand("gen", "Generate a workload and write it to a file");
  WorkloadArgs gen_args;
  std::string gen_out;
  gen_args.add_to(*gen, true);
  gen->add_option("--out", gen_out, "Extent file to write")->required();

  auto* match = app.add_subcommand("match", "Run one matcher and print K and WCT");
  MatchArgs match_args;
  match_args.workload.add_to(*match, false);
  match->add_option("--in", match_args.input, "Extent file (instead of --n)");
  match->add_option("--algo", match_args.algo, "bf, grid, itm, sbm or sbm-par")
      ->capture_default_str();
  match->add_option("--threads", match_args.threads, "Worker count P")->capture_default_str();
  match->add_option("--mode", match_args.mode, "count or list")->capture_default_str();
  match->add_option("--grid-cells", match_args.grid_cells, "Grid cell count G")
      ->capture_default_str();
  match->add_option("--time-budget-secs", match_args.time_budget, "Abort after this long")
      ->capture_default_str();
  match->add_option("--out", match_args.out, "Pair list output (list mode)");

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
  BenchArgs bench_args;
  bench->add_option("--algo", bench_args.algos, "Algorithms")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--n", bench_args.sizes, "Extent counts N")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--alpha", bench_args.alphas, "Overlapping degrees")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--threads", bench_args.threads,
                    "Worker counts (default 1, 2, 4, ... up to 2x physical cores)")
      ->delimiter(',');
  bench->add_option("--reps", bench_args.reps, "Timed runs per combination")
      ->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "Workload seed")->capture_default_str();
  bench->add_option("--mode", bench_args.mode, "count or list")->capture_default_str();
  bench->add_option("--grid-cells", bench_args.grid_cells, "Grid cell count G")
      ->capture_default_str();
  bench->add_option("--dims", bench_args.dims, "Dimensionality")->capture_default_str();
  bench->add_option("--length", bench_args.length, "Routing space length L")
      ->capture_default_str();
  bench->add_option("--time-budget-secs", bench_args.time_budget, "Per-run time budget")
      ->capture_default_str();
  bench->add_flag("--fresh-seeds", bench_args.fresh_seeds,
                  "Use a fresh workload seed for every rep");
  bench->add_flag("--memory", bench_args.memory, "Record peak RSS per run when supported");
  bench->add_option("--out", bench_args.out, "Raw records CSV")->required();
  bench->add_option("--aggregates", bench_args.aggregates,
                    "Aggregates CSV (default <out>.agg.csv)");

  auto* scaling = app.add_subcommand("scaling", "Compute speedup and efficiencies from CSV");
  std::string scaling_in, scaling_out;
  scaling->add_option("--in", scaling_in, "Records CSV from bench")->required();
  scaling->add_option("--out", scaling_out, "Scaling summary CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  if (gen->parsed()) return run_gen(gen_args, gen_out);
  if (match->parsed()) return run_match(match_args);
  if (bench->parsed()) return run_bench(bench_args);
  return run_scaling(scaling_in, scaling_out);
}
