#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "core/extent.hpp"

namespace ddm {

enum class ReportMode : std::uint8_t { Count, List };

const char* mode_name(ReportMode mode);

using Pair = std::pair<ExtentId, ExtentId>;  // (subscription, update)

// Matcher output. In List mode `pairs` holds every reported pair and `count`
// equals its size; in Count mode only `count` is populated.
struct PairReport {
  ReportMode mode = ReportMode::Count;
  std::uint64_t count = 0;
  std::vector<Pair> pairs;

  // Appends another partial report of the same mode.
  void append(PairReport&& other);

  // Pairs sorted lexicographically; the report's value as a set.
  std::vector<Pair> sorted_pairs() const;
};

// Same mode, same count and (List mode) the same pair set.
bool same_result(const PairReport& a, const PairReport& b);

// Receives candidate pairs from a matcher that has already established overlap
// on the matching dimension. For d > 1 each candidate is checked on the
// remaining dimensions before it counts.
class PairEmitter {
 public:
  PairEmitter(ReportMode mode, const ExtentSet& subscriptions,
              const ExtentSet& updates, std::size_t matched_dim = 0);

  void emit(ExtentId s, ExtentId u) {
    if (filter_ && !overlap_other_dims(*subs_, s, *upds_, u, matched_dim_)) return;
    if (report_.mode == ReportMode::List) report_.pairs.emplace_back(s, u);
    ++report_.count;
  }

  // Subscription `s` closes against every id in `active_updates`. Without a
  // filter, Count mode adds the cardinality and never iterates.
  template <typename Set>
  void emit_subscription(ExtentId s, const Set& active_updates) {
    if (!filter_ && report_.mode == ReportMode::Count) {
      report_.count += active_updates.size();
      return;
    }
    for (ExtentId u : active_updates) emit(s, u);
  }

  template <typename Set>
  void emit_update(ExtentId u, const Set& active_subscriptions) {
    if (!filter_ && report_.mode == ReportMode::Count) {
      report_.count += active_subscriptions.size();
      return;
    }
    for (ExtentId s : active_subscriptions) emit(s, u);
  }

  bool filtering() const noexcept { return filter_; }
  ReportMode mode() const noexcept { return report_.mode; }

  PairReport take() { return std::move(report_); }

 private:
  PairReport report_;
  const ExtentSet* subs_;
  const ExtentSet* upds_;
  std::size_t matched_dim_;
  bool filter_;
};

// Concatenates partial reports in order.
PairReport merge_reports(ReportMode mode, std::vector<PairReport>&& parts);

}  // namespace ddm
