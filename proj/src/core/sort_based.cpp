#include "core/sort_based.hpp"

#include "core/error.hpp"

namespace ddm {

std::size_t sweep_endpoints(std::span<const EndpointRecord> records,
                            SweepState& state, PairEmitter& out) {
  for (const EndpointRecord& t : records) {
    if (t.owner_kind == Kind::Subscription) {
      if (t.is_lower) {
        state.subscriptions.insert(t.owner_id);
      } else {
        state.subscriptions.erase(t.owner_id);
        out.emit_subscription(t.owner_id, state.updates);
      }
    } else {
      if (t.is_lower) {
        state.updates.insert(t.owner_id);
      } else {
        state.updates.erase(t.owner_id);
        out.emit_update(t.owner_id, state.subscriptions);
      }
    }
  }
  return records.size();
}

PairReport match_sbm_seq(const ExtentSet& subscriptions, const ExtentSet& updates,
                         const MatchOptions& opts) {
  const EndpointList records = build_endpoint_list(subscriptions, updates, 0);
  check_deadline(opts);
  SweepState state;
  PairEmitter out(opts.mode, subscriptions, updates);
  sweep_endpoints(records, state, out);
  if (!state.subscriptions.empty() || !state.updates.empty()) {
    fail(ErrorCode::kContract, "sweep finished with active extents");
  }
  return out.take();
}

}  // namespace ddm
