#include "core/parallel_sbm.hpp"

#include <algorithm>
#include <memory>

#include "core/error.hpp"
#include "core/sort_based.hpp"
#include "core/worker_pool.hpp"

namespace ddm {

SegmentPlan plan_segments(std::size_t record_count, std::size_t parts) {
  if (parts == 0) fail(ErrorCode::kInvalidArgument, "worker count must be >= 1");
  SegmentPlan plan;
  plan.boundaries.reserve(parts + 1);
  for (std::size_t p = 0; p < parts; ++p) {
    plan.boundaries.push_back(block_range(record_count, parts, p).begin);
  }
  plan.boundaries.push_back(record_count);
  return plan;
}

DeltaSets local_delta_scan(std::span<const EndpointRecord> segment) {
  DeltaSets d;
  for (const EndpointRecord& t : segment) {
    const bool is_sub = t.owner_kind == Kind::Subscription;
    ActiveSet& add = is_sub ? d.sub_add : d.upd_add;
    ActiveSet& del = is_sub ? d.sub_del : d.upd_del;
    if (t.is_lower) {
      add.insert(t.owner_id);
    } else if (!add.erase(t.owner_id)) {
      del.insert(t.owner_id);
    }
  }
  return d;
}

namespace {

void advance(ActiveSet& state, const ActiveSet& add, const ActiveSet& del,
             std::size_t& touched) {
  for (ExtentId id : add) {
    if (del.contains(id)) fail(ErrorCode::kContract, "delta add/del sets overlap");
    if (!state.insert(id)) fail(ErrorCode::kContract, "delta adds an active extent");
  }
  for (ExtentId id : del) {
    if (!state.erase(id)) fail(ErrorCode::kContract, "delta removes an inactive extent");
  }
  touched += add.size() + del.size();
}

}  // namespace

std::vector<SweepState> combine_deltas(std::span<const DeltaSets> deltas,
                                       std::size_t* touched) {
  std::vector<SweepState> states(std::max<std::size_t>(1, deltas.size()));
  std::size_t applied = 0;
  for (std::size_t p = 1; p < deltas.size(); ++p) {
    states[p] = states[p - 1];
    advance(states[p].subscriptions, deltas[p - 1].sub_add, deltas[p - 1].sub_del, applied);
    advance(states[p].updates, deltas[p - 1].upd_add, deltas[p - 1].upd_del, applied);
  }
  if (touched != nullptr) *touched = applied;
  return states;
}

PairReport final_scan(std::span<const EndpointRecord> segment, SweepState init,
                      const ExtentSet& subscriptions, const ExtentSet& updates,
                      ReportMode mode) {
  PairEmitter out(mode, subscriptions, updates);
  sweep_endpoints(segment, init, out);
  return out.take();
}

PairReport match_sbm_parallel(const ExtentSet& subscriptions,
                              const ExtentSet& updates, const MatchOptions& opts,
                              ParallelSbmStats* stats) {
  const std::size_t parts = opts.workers;
  if (parts == 0) fail(ErrorCode::kInvalidArgument, "worker count must be >= 1");
  check_instance(subscriptions, updates);

  std::unique_ptr<WorkerPool> owned;
  WorkerPool* pool = opts.pool;
  if (pool == nullptr && parts > 1) {
    owned = std::make_unique<WorkerPool>(std::min(parts, hardware_threads()));
    pool = owned.get();
  }

  const EndpointList records =
      build_endpoint_list(subscriptions, updates, 0, pool, parts);
  check_deadline(opts);
  const SegmentPlan plan = plan_segments(records.size(), parts);
  const std::span<const EndpointRecord> all(records);

  std::vector<DeltaSets> deltas(parts);
  fork_join(pool, parts, [&](std::size_t p) {
    deltas[p] = local_delta_scan(plan.segment(all, p));
  });

  std::size_t touched = 0;
  std::vector<SweepState> states = combine_deltas(deltas, &touched);
  check_deadline(opts);

  std::vector<PairReport> partial(parts);
  std::vector<std::size_t> processed(parts, 0);
  fork_join(pool, parts, [&](std::size_t p) {
    const auto segment = plan.segment(all, p);
    partial[p] = final_scan(segment, std::move(states[p]), subscriptions, updates,
                            opts.mode);
    processed[p] = segment.size();
  });

  if (stats != nullptr) {
    stats->records_per_segment = std::move(processed);
    stats->combine_touched = touched;
  }
  return merge_reports(opts.mode, std::move(partial));
}

SetDelta compose(const SetDelta& first, const SetDelta& second) {
  SetDelta out;
  for (ExtentId id : second.add) {
    if (!second.del.contains(id)) out.add.insert(id);
  }
  for (ExtentId id : first.add) {
    if (!first.del.contains(id) && !second.del.contains(id)) out.add.insert(id);
  }
  for (ExtentId id : second.del) out.del.insert(id);
  for (ExtentId id : first.del) {
    if (!second.add.contains(id)) out.del.insert(id);
  }
  return out;
}

ActiveSet apply(const SetDelta& delta, const ActiveSet& state) {
  ActiveSet out = state;
  for (ExtentId id : delta.add) out.insert(id);
  for (ExtentId id : delta.del) out.erase(id);
  return out;
}

}  // namespace ddm
