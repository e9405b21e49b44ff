#include "core/brute_force.hpp"

#include <algorithm>

#include "core/worker_pool.hpp"

namespace ddm {

namespace {

std::uint64_t count_row(const Interval& s, std::span<const Interval> updates) {
  std::uint64_t hits = 0;
  for (const Interval& u : updates) {
    hits += static_cast<std::uint64_t>((s.low <= u.high) & (u.low <= s.high));
  }
  return hits;
}

}  // namespace

PairReport match_brute_force(const ExtentSet& subscriptions,
                             const ExtentSet& updates, const MatchOptions& opts) {
  check_instance(subscriptions, updates);
  const std::size_t n = subscriptions.size();
  const std::size_t parts = std::max<std::size_t>(1, std::min(opts.workers, n));
  const auto subs = subscriptions.axis(0);
  const auto upds = updates.axis(0);
  const bool fast_count = opts.mode == ReportMode::Count && subscriptions.dims() == 1;

  std::vector<PairReport> partial(parts);
  fork_join(opts.pool, parts, [&](std::size_t part) {
    const Block rows = block_range(n, parts, part);
    PairEmitter out(opts.mode, subscriptions, updates);
    std::uint64_t fast_hits = 0;
    std::vector<ExtentId> row(fast_count ? 0 : upds.size());
    for (std::size_t i = rows.begin; i < rows.end; ++i) {
      check_deadline(opts);
      if (fast_count) {
        fast_hits += count_row(subs[i], upds);
        continue;
      }
      // Compact the row's hits without a data-dependent branch, then emit.
      const Interval si = subs[i];
      std::size_t hits = 0;
      for (std::size_t j = 0; j < upds.size(); ++j) {
        row[hits] = static_cast<ExtentId>(j);
        hits += intersect_1d(si, upds[j]);
      }
      for (std::size_t h = 0; h < hits; ++h) out.emit(static_cast<ExtentId>(i), row[h]);
    }
    partial[part] = out.take();
    partial[part].count += fast_hits;
  });
  return merge_reports(opts.mode, std::move(partial));
}

}  // namespace ddm
