#include "core/matcher.hpp"

#include <array>
#include <utility>

#include "core/brute_force.hpp"
#include "core/error.hpp"
#include "core/interval_tree.hpp"
#include "core/parallel_sbm.hpp"
#include "core/sort_based.hpp"

namespace ddm {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kNames{{
    {Algorithm::BruteForce, "bf"},
    {Algorithm::Grid, "grid"},
    {Algorithm::IntervalTree, "itm"},
    {Algorithm::SortBased, "sbm"},
    {Algorithm::ParallelSortBased, "sbm-par"},
}};

}  // namespace

std::string_view algorithm_name(Algorithm algo) {
  for (const auto& [a, name] : kNames) {
    if (a == algo) return name;
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

Algorithm algorithm_from_name(std::string_view name) {
  if (auto algo = parse_algorithm(name)) return *algo;
  fail(ErrorCode::kInvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

PairReport match_dd(const ExtentSet& subscriptions, const ExtentSet& updates,
                    Algorithm algo, const MatchOptions& opts,
                    const GridOptions& grid) {
  switch (algo) {
    case Algorithm::BruteForce:
      return match_brute_force(subscriptions, updates, opts);
    case Algorithm::Grid:
      return match_grid(subscriptions, updates, grid, opts);
    case Algorithm::IntervalTree:
      return match_interval_tree(subscriptions, updates, opts);
    case Algorithm::SortBased:
      return match_sbm_seq(subscriptions, updates, opts);
    case Algorithm::ParallelSortBased:
      return match_sbm_parallel(subscriptions, updates, opts);
  }
  fail(ErrorCode::kInvalidArgument, "unknown algorithm");
}

PairReport match_dd(const ExtentSet& subscriptions, const ExtentSet& updates,
                    std::string_view algo, const MatchOptions& opts,
                    const GridOptions& grid) {
  return match_dd(subscriptions, updates, algorithm_from_name(algo), opts, grid);
}

}  // namespace ddm
