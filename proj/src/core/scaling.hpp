#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/bench.hpp"

namespace ddm {

// Scaling metrics of one (algorithm, N, alpha, P) cell, from mean WCTs:
//   speedup   S_N(P)       = T(N, 1) / T(N, P)
//   strong    E_strong(P)  = S_N(P) / P
//   weak      E_weak(P)    = T(N, 1) / T(P * N, P)
// The weak value is reported on the row of the scaled run (P * N, P).
struct ScalingRow {
  std::string algorithm;
  std::uint64_t n = 0;
  double alpha = 0.0;
  std::size_t workers = 1;
  double wct_mean = 0.0;
  std::optional<double> speedup;
  std::optional<double> strong_efficiency;
  std::optional<double> weak_efficiency;
};

struct ScalingSummary {
  std::vector<ScalingRow> rows;
  std::vector<std::string> warnings;  // missing baselines
};

ScalingSummary compute_scaling(std::span<const BenchRecord> records);

}  // namespace ddm
