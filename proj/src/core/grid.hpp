#pragma once

#include <cstddef>
#include <vector>

#include "core/match_options.hpp"

namespace ddm {

// Regular 1-D mesh over [space_low, space_high) on the matching dimension.
// Coordinates outside the space are clamped to the boundary cells.
class GridIndex {
 public:
  GridIndex(std::size_t cell_count, double space_low, double space_high);

  std::size_t cell_count() const noexcept { return cells_.size(); }
  double cell_width() const noexcept { return width_; }
  std::size_t cell_of(double coord) const;

  void insert(const ExtentSet& subscriptions, const ExtentSet& updates);

  struct Cell {
    std::vector<ExtentId> subscriptions;
    std::vector<ExtentId> updates;
  };
  const Cell& cell(std::size_t c) const { return cells_[c]; }

 private:
  double low_;
  double width_;
  std::vector<Cell> cells_;
};

struct GridOptions {
  std::size_t cell_count = 1;
  double space_low = 0.0;
  double space_high = 1e6;
};

// Grid-based matching: brute force inside each cell, filtered with
// intersect_1d. A pair is reported only from the cell holding
// max(s.low, u.low), which both extents necessarily cover when they overlap,
// so every pair appears exactly once. Single-threaded.
PairReport match_grid(const ExtentSet& subscriptions, const ExtentSet& updates,
                      const GridOptions& grid, const MatchOptions& opts);

}  // namespace ddm
