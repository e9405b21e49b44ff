#pragma once

#include <chrono>
#include <optional>

#include "core/error.hpp"

namespace ddm {

// Cooperative time budget for long-running matchers. Checked at coarse
// granularity (outer loop iterations), never inside the hot inner loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;  // never expires
  explicit Deadline(double budget_seconds);

  bool expired() const {
    return until_ && Clock::now() > *until_;
  }
  void check() const {
    if (expired()) fail(ErrorCode::kBudgetExceeded, "time budget exceeded");
  }
  bool active() const noexcept { return until_.has_value(); }

 private:
  std::optional<Clock::time_point> until_;
};

inline Deadline::Deadline(double budget_seconds) {
  if (budget_seconds > 0) {
    until_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(budget_seconds));
  }
}

}  // namespace ddm
