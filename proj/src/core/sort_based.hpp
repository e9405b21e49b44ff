#pragma once

#include <span>

#include "core/active_set.hpp"
#include "core/endpoint.hpp"
#include "core/match_options.hpp"

namespace ddm {

// Processes `records` in order starting from `state`: a lower bound activates
// its extent; an upper bound deactivates it and emits it against every active
// extent of the other kind. Returns the number of records processed.
std::size_t sweep_endpoints(std::span<const EndpointRecord> records,
                            SweepState& state, PairEmitter& out);

// Sequential sort-based matching on dimension 0 (other dimensions filtered
// through the emitter). Each pair is emitted exactly once, at the earlier of
// its two upper endpoints in sweep order.
PairReport match_sbm_seq(const ExtentSet& subscriptions, const ExtentSet& updates,
                         const MatchOptions& opts);

}  // namespace ddm
