#pragma once

#include <cstddef>

#include "core/deadline.hpp"
#include "core/pair_report.hpp"

namespace ddm {

class WorkerPool;

struct MatchOptions {
  ReportMode mode = ReportMode::Count;
  // Logical worker count P. Ignored by single-threaded matchers.
  std::size_t workers = 1;
  // Executes the workers; nullptr means a temporary pool per call.
  WorkerPool* pool = nullptr;
  const Deadline* deadline = nullptr;
};

inline void check_deadline(const MatchOptions& opts) {
  if (opts.deadline != nullptr) opts.deadline->check();
}

}  // namespace ddm
