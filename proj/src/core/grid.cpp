#include "core/grid.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace ddm {

GridIndex::GridIndex(std::size_t cell_count, double space_low, double space_high)
    : low_(space_low) {
  if (cell_count == 0) fail(ErrorCode::kInvalidArgument, "grid cell count must be >= 1");
  if (!(space_high > space_low) || !std::isfinite(space_low) ||
      !std::isfinite(space_high)) {
    fail(ErrorCode::kInvalidArgument, "grid routing space must be a finite, non-empty range");
  }
  width_ = (space_high - space_low) / static_cast<double>(cell_count);
  cells_.resize(cell_count);
}

std::size_t GridIndex::cell_of(double coord) const {
  const double pos = std::floor((coord - low_) / width_);
  if (pos <= 0) return 0;
  const auto last = static_cast<double>(cells_.size() - 1);
  return static_cast<std::size_t>(std::min(pos, last));
}

void GridIndex::insert(const ExtentSet& subscriptions, const ExtentSet& updates) {
  const auto place = [this](std::span<const Interval> axis, bool is_sub) {
    for (std::size_t id = 0; id < axis.size(); ++id) {
      const std::size_t first = cell_of(axis[id].low);
      const std::size_t last = cell_of(axis[id].high);
      for (std::size_t c = first; c <= last; ++c) {
        auto& bucket = is_sub ? cells_[c].subscriptions : cells_[c].updates;
        bucket.push_back(static_cast<ExtentId>(id));
      }
    }
  };
  place(subscriptions.axis(0), true);
  place(updates.axis(0), false);
}

PairReport match_grid(const ExtentSet& subscriptions, const ExtentSet& updates,
                      const GridOptions& grid, const MatchOptions& opts) {
  check_instance(subscriptions, updates);
  GridIndex index(grid.cell_count, grid.space_low, grid.space_high);
  index.insert(subscriptions, updates);

  const auto subs = subscriptions.axis(0);
  const auto upds = updates.axis(0);
  PairEmitter out(opts.mode, subscriptions, updates);
  std::vector<ExtentId> row;
  for (std::size_t c = 0; c < index.cell_count(); ++c) {
    check_deadline(opts);
    const auto& cell = index.cell(c);
    row.resize(cell.updates.size());
    for (ExtentId s : cell.subscriptions) {
      const Interval si = subs[s];
      std::size_t hits = 0;
      for (ExtentId u : cell.updates) {
        row[hits] = u;
        hits += intersect_1d(si, upds[u]);
      }
      for (std::size_t h = 0; h < hits; ++h) {
        const ExtentId u = row[h];
        if (index.cell_of(std::max(si.low, upds[u].low)) == c) out.emit(s, u);
      }
    }
  }
  return out.take();
}

}  // namespace ddm
