#pragma once

#include "core/match_options.hpp"

namespace ddm {

// Tests all n x m subscription/update pairs with intersect_dd. Rows
// (subscriptions) are split across `opts.workers` tasks with private buffers
// merged in row order, so the pair order is (s, u) lexicographic.
PairReport match_brute_force(const ExtentSet& subscriptions,
                             const ExtentSet& updates, const MatchOptions& opts);

}  // namespace ddm
