/*
 * ddm - shared-memory extent matching for data distribution management.
 *
 * C interface to the matching library. All objects are opaque handles
 * created and destroyed through this API. Functions returning ddm_status
 * report failures through the status code; ddm_last_error() then returns a
 * thread-local, human-readable message describing the most recent failure
 * on the calling thread.
 */
#ifndef DDM_DDM_H_
#define DDM_DDM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DDM_BUILDING_LIBRARY)
#    define DDM_API __declspec(dllexport)
#  else
#    define DDM_API __declspec(dllimport)
#  endif
#else
#  define DDM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ddm_status {
  DDM_OK = 0,
  DDM_ERR_INVALID_ARGUMENT = 1,
  DDM_ERR_PARSE = 2,
  DDM_ERR_IO = 3,
  DDM_ERR_BUDGET_EXCEEDED = 4,
  DDM_ERR_CONTRACT = 5,
  DDM_ERR_INTERNAL = 6
} ddm_status;

typedef enum ddm_kind { DDM_SUBSCRIPTION = 0, DDM_UPDATE = 1 } ddm_kind;

typedef enum ddm_algorithm {
  DDM_ALGO_BRUTE_FORCE = 0,   /* "bf" */
  DDM_ALGO_GRID = 1,          /* "grid" */
  DDM_ALGO_INTERVAL_TREE = 2, /* "itm" */
  DDM_ALGO_SBM = 3,           /* "sbm" */
  DDM_ALGO_SBM_PARALLEL = 4   /* "sbm-par" */
} ddm_algorithm;

typedef enum ddm_mode { DDM_MODE_COUNT = 0, DDM_MODE_LIST = 1 } ddm_mode;

typedef struct ddm_extents ddm_extents;
typedef struct ddm_report ddm_report;
typedef struct ddm_bench_config ddm_bench_config;

typedef void (*ddm_log_fn)(const char* message, void* user);

DDM_API const char* ddm_version(void);
DDM_API const char* ddm_last_error(void);

DDM_API ddm_status ddm_algorithm_from_name(const char* name, ddm_algorithm* out);
DDM_API const char* ddm_algorithm_name(ddm_algorithm algo);

/* ---- extents ---------------------------------------------------------- */

/* An empty set of `dims`-dimensional extents of one kind. Ids are assigned
 * densely from 0 in append order. */
DDM_API ddm_status ddm_extents_create(ddm_kind kind, size_t dims, ddm_extents** out);
DDM_API void ddm_extents_destroy(ddm_extents* set);

/* `bounds` holds low_0, high_0, low_1, high_1, ... (2 * dims values). */
DDM_API ddm_status ddm_extents_append(ddm_extents* set, const double* bounds,
                                      uint32_t* out_id);
DDM_API size_t ddm_extents_size(const ddm_extents* set);
DDM_API size_t ddm_extents_dims(const ddm_extents* set);
DDM_API ddm_kind ddm_extents_kind(const ddm_extents* set);
DDM_API ddm_status ddm_extents_get(const ddm_extents* set, uint32_t id,
                                   double* bounds_out);

/* ---- workloads and files ---------------------------------------------- */

typedef struct ddm_workload_config {
  uint64_t total;   /* N, even; n = m = N / 2 */
  double alpha;     /* overlapping degree; extent length l = alpha * L / N */
  double length;    /* routing space L */
  uint64_t seed;
  uint32_t dims;
} ddm_workload_config;

/* alpha = 1, L = 1e6, seed = 1, dims = 1, total = 0. */
DDM_API void ddm_workload_config_init(ddm_workload_config* cfg);

DDM_API ddm_status ddm_workload_generate(const ddm_workload_config* cfg,
                                         ddm_extents** subscriptions,
                                         ddm_extents** updates);

/* Writes the extent text file plus a "<path>.meta.json" sidecar. `config`
 * may be NULL when the extents were not generated. */
DDM_API ddm_status ddm_extents_save(const char* path, const ddm_extents* subscriptions,
                                    const ddm_extents* updates,
                                    const ddm_workload_config* config);
DDM_API ddm_status ddm_extents_load(const char* path, ddm_extents** subscriptions,
                                    ddm_extents** updates);

/* ---- matching --------------------------------------------------------- */

typedef struct ddm_match_options {
  ddm_algorithm algorithm;
  ddm_mode mode;
  uint32_t workers;          /* P, >= 1 */
  uint32_t grid_cells;       /* grid only, >= 1 */
  double space_low;          /* grid routing space on dimension 0 */
  double space_high;
  double time_budget_secs;   /* <= 0 disables the budget */
} ddm_match_options;

/* sbm-par, count mode, 1 worker, 1000 cells over [0, 1e6), no budget. */
DDM_API void ddm_match_options_init(ddm_match_options* opts);

/* Runs one matcher. On success *out holds the report, including the wall
 * clock time of the matching call. DDM_ERR_BUDGET_EXCEEDED when the time
 * budget expired. */
DDM_API ddm_status ddm_match(const ddm_extents* subscriptions, const ddm_extents* updates,
                             const ddm_match_options* opts, ddm_report** out);

DDM_API uint64_t ddm_report_count(const ddm_report* report);
DDM_API ddm_mode ddm_report_mode(const ddm_report* report);
DDM_API double ddm_report_wct_seconds(const ddm_report* report);
/* Number of stored pairs (0 in count mode). */
DDM_API size_t ddm_report_pair_count(const ddm_report* report);
DDM_API ddm_status ddm_report_pair(const ddm_report* report, size_t index,
                                   uint32_t* subscription, uint32_t* update);
DDM_API void ddm_report_destroy(ddm_report* report);

/* ---- benchmarking ----------------------------------------------------- */

DDM_API ddm_status ddm_bench_config_create(ddm_bench_config** out);
DDM_API void ddm_bench_config_destroy(ddm_bench_config* cfg);

/* The list setters replace the defaults on first use and append after. */
DDM_API ddm_status ddm_bench_config_add_algorithm(ddm_bench_config* cfg, ddm_algorithm algo);
DDM_API ddm_status ddm_bench_config_add_size(ddm_bench_config* cfg, uint64_t n);
DDM_API ddm_status ddm_bench_config_add_alpha(ddm_bench_config* cfg, double alpha);
DDM_API ddm_status ddm_bench_config_add_workers(ddm_bench_config* cfg, uint32_t workers);
DDM_API void ddm_bench_config_set_reps(ddm_bench_config* cfg, uint32_t reps);
DDM_API void ddm_bench_config_set_seed(ddm_bench_config* cfg, uint64_t seed);
DDM_API void ddm_bench_config_set_mode(ddm_bench_config* cfg, ddm_mode mode);
DDM_API void ddm_bench_config_set_dims(ddm_bench_config* cfg, uint32_t dims);
DDM_API void ddm_bench_config_set_length(ddm_bench_config* cfg, double length);
DDM_API void ddm_bench_config_set_grid_cells(ddm_bench_config* cfg, uint32_t cells);
DDM_API void ddm_bench_config_set_time_budget(ddm_bench_config* cfg, double seconds);
DDM_API void ddm_bench_config_set_fresh_seeds(ddm_bench_config* cfg, int enabled);
DDM_API void ddm_bench_config_set_measure_memory(ddm_bench_config* cfg, int enabled);

/* Runs the suite and writes raw records to `records_csv` and per-combination
 * mean/stddev to `aggregates_csv` (may be NULL). `log` receives progress and
 * skip notices and may be NULL. `skipped_out`, when non-NULL, receives the
 * number of combinations skipped for exceeding the time budget. */
DDM_API ddm_status ddm_bench_run(const ddm_bench_config* cfg, const char* records_csv,
                                 const char* aggregates_csv, ddm_log_fn log, void* user,
                                 size_t* skipped_out);

/* Reads a records CSV and writes speedup / strong / weak efficiency per
 * (algorithm, N, alpha, P). Missing baselines are reported through `log`. */
DDM_API ddm_status ddm_scaling_from_csv(const char* records_csv, const char* summary_csv,
                                        ddm_log_fn log, void* user);

/* 1 when per-run peak resident set size can be measured here. */
DDM_API int ddm_peak_memory_supported(void);

/* Physical core count, falling back to the logical count. */
DDM_API size_t ddm_physical_cores(void);

#ifdef __cplusplus
}
#endif

#endif /* DDM_DDM_H_ */
