#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "core/grid.hpp"
#include "core/match_options.hpp"

namespace ddm {

enum class Algorithm { BruteForce, Grid, IntervalTree, SortBased, ParallelSortBased };

// CLI names: bf, grid, itm, sbm, sbm-par.
std::string_view algorithm_name(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);
Algorithm algorithm_from_name(std::string_view name);  // throws on unknown

// d-dimensional matching: the chosen 1-D matcher runs on dimension 0 and
// every candidate is filtered on dimensions 1..d-1.
PairReport match_dd(const ExtentSet& subscriptions, const ExtentSet& updates,
                    Algorithm algo, const MatchOptions& opts,
                    const GridOptions& grid = {});

PairReport match_dd(const ExtentSet& subscriptions, const ExtentSet& updates,
                    std::string_view algo, const MatchOptions& opts,
                    const GridOptions& grid = {});

}  // namespace ddm
