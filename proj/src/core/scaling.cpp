#include "core/scaling.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace ddm {

ScalingSummary compute_scaling(std::span<const BenchRecord> records) {
  using Cell = std::tuple<std::string, double, std::uint64_t, std::size_t>;
  std::map<Cell, std::pair<double, std::size_t>> sums;
  for (const auto& r : records) {
    auto& [sum, count] = sums[{r.algorithm, r.alpha, r.n, r.workers}];
    sum += r.wct_seconds;
    ++count;
  }
  std::map<Cell, double> mean;
  for (const auto& [cell, acc] : sums) mean[cell] = acc.first / static_cast<double>(acc.second);

  const auto lookup = [&](const std::string& algo, double alpha, std::uint64_t n,
                          std::size_t p) -> std::optional<double> {
    auto it = mean.find({algo, alpha, n, p});
    if (it == mean.end()) return std::nullopt;
    return it->second;
  };

  ScalingSummary out;
  for (const auto& [cell, t] : mean) {
    const auto& [algo, alpha, n, p] = cell;
    ScalingRow row{algo, n, alpha, p, t, {}, {}, {}};
    if (const auto base = lookup(algo, alpha, n, 1)) {
      row.speedup = *base / t;
      row.strong_efficiency = *row.speedup / static_cast<double>(p);
    } else {
      std::ostringstream os;
      os << "no P=1 baseline for " << algo << " N=" << n << " alpha=" << alpha
         << "; speedup and strong efficiency omitted for P=" << p;
      out.warnings.push_back(os.str());
    }
    // This row is the scaled run (P * N', P) of the weak series based at N'.
    if (p > 1 && n % p == 0) {
      if (const auto base = lookup(algo, alpha, n / p, 1)) {
        row.weak_efficiency = *base / t;
      }
    } else if (p == 1) {
      row.weak_efficiency = 1.0;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace ddm
