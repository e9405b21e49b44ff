#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "core/active_set.hpp"
#include "core/endpoint.hpp"
#include "core/match_options.hpp"

namespace ddm {

// P+1 boundaries into the sorted endpoint list. The first (length mod P)
// segments hold one extra record; trailing segments may be empty.
struct SegmentPlan {
  std::vector<std::size_t> boundaries;

  std::size_t segments() const noexcept { return boundaries.size() - 1; }
  std::span<const EndpointRecord> segment(std::span<const EndpointRecord> records,
                                          std::size_t p) const {
    return records.subspan(boundaries[p], boundaries[p + 1] - boundaries[p]);
  }
};

SegmentPlan plan_segments(std::size_t record_count, std::size_t parts);

// How one segment changes SubSet / UpdSet. After a scan, `*_add` holds the
// extents whose lower endpoint is in the segment and upper is not; `*_del`
// holds those whose upper endpoint is in the segment and lower is not.
struct DeltaSets {
  ActiveSet sub_add;
  ActiveSet sub_del;
  ActiveSet upd_add;
  ActiveSet upd_del;

  friend bool operator==(const DeltaSets&, const DeltaSets&) = default;
};

DeltaSets local_delta_scan(std::span<const EndpointRecord> segment);

// SubSet[0] = UpdSet[0] = {} and SubSet[p] = (SubSet[p-1] + add[p-1]) - del[p-1],
// likewise for updates. Throws kContract when an add set meets its del set,
// when an added extent is already active, or a deleted one is not active.
// `touched`, when given, receives the number of delta elements applied.
std::vector<SweepState> combine_deltas(std::span<const DeltaSets> deltas,
                                       std::size_t* touched = nullptr);

// Sweep of one segment starting from `init`; emits into a private report.
PairReport final_scan(std::span<const EndpointRecord> segment, SweepState init,
                      const ExtentSet& subscriptions, const ExtentSet& updates,
                      ReportMode mode);

struct ParallelSbmStats {
  std::vector<std::size_t> records_per_segment;
  std::size_t combine_touched = 0;
};

// Parallel sort-based matching with P = opts.workers segments: parallel sort,
// concurrent delta scans, coordinator combine, concurrent final scans, and a
// merge of partial reports in segment order. Throws on P = 0.
PairReport match_sbm_parallel(const ExtentSet& subscriptions,
                              const ExtentSet& updates, const MatchOptions& opts,
                              ParallelSbmStats* stats = nullptr);

// A set transformation X -> (X + add) - del with add and del disjoint.
// Composition is associative with the empty delta as identity, so the
// boundary states are an exclusive scan of segment deltas under `compose`.
struct SetDelta {
  ActiveSet add;
  ActiveSet del;

  friend bool operator==(const SetDelta&, const SetDelta&) = default;
};

// Applies `first`, then `second`.
SetDelta compose(const SetDelta& first, const SetDelta& second);
ActiveSet apply(const SetDelta& delta, const ActiveSet& state);

}  // namespace ddm
