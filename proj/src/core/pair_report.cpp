#include "core/pair_report.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace ddm {

const char* mode_name(ReportMode mode) {
  return mode == ReportMode::Count ? "count" : "list";
}

void PairReport::append(PairReport&& other) {
  if (other.mode != mode) fail(ErrorCode::kContract, "report mode mismatch");
  count += other.count;
  if (mode == ReportMode::List) {
    if (pairs.empty()) {
      pairs = std::move(other.pairs);
    } else {
      pairs.insert(pairs.end(), other.pairs.begin(), other.pairs.end());
    }
  }
}

std::vector<Pair> PairReport::sorted_pairs() const {
  std::vector<Pair> out = pairs;
  std::sort(out.begin(), out.end());
  return out;
}

bool same_result(const PairReport& a, const PairReport& b) {
  if (a.mode != b.mode || a.count != b.count) return false;
  if (a.mode == ReportMode::Count) return true;
  return a.sorted_pairs() == b.sorted_pairs();
}

PairEmitter::PairEmitter(ReportMode mode, const ExtentSet& subscriptions,
                         const ExtentSet& updates, std::size_t matched_dim)
    : subs_(&subscriptions),
      upds_(&updates),
      matched_dim_(matched_dim),
      filter_(subscriptions.dims() > 1) {
  report_.mode = mode;
}

PairReport merge_reports(ReportMode mode, std::vector<PairReport>&& parts) {
  PairReport out;
  out.mode = mode;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.pairs.size();
  out.pairs.reserve(total);
  for (auto& p : parts) {
    if (p.mode != mode) fail(ErrorCode::kContract, "report mode mismatch");
    out.count += p.count;
    out.pairs.insert(out.pairs.end(), p.pairs.begin(), p.pairs.end());
  }
  return out;
}

}  // namespace ddm
