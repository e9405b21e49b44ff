#include "core/workload.hpp"

#include <cmath>
#include <vector>

#include "core/error.hpp"

namespace ddm {

void WorkloadConfig::validate() const {
  if (total == 0 || total % 2 != 0) {
    fail(ErrorCode::kInvalidArgument, "N must be a positive even number");
  }
  if (total / 2 > UINT32_MAX) fail(ErrorCode::kInvalidArgument, "N is too large");
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    fail(ErrorCode::kInvalidArgument, "alpha must be positive and finite");
  }
  if (!(length > 0) || !std::isfinite(length)) {
    fail(ErrorCode::kInvalidArgument, "routing space length must be positive and finite");
  }
  if (dims == 0) fail(ErrorCode::kInvalidArgument, "dims must be >= 1");
  if (extent_length() > length) {
    fail(ErrorCode::kInvalidArgument,
         "extent length alpha*L/N exceeds the routing space");
  }
}

Workload generate_workload(const WorkloadConfig& cfg) {
  cfg.validate();
  const double l = cfg.extent_length();
  const double span = cfg.length - l;
  std::mt19937_64 rng(cfg.seed);

  Workload w{ExtentSet(Kind::Subscription, cfg.dims), ExtentSet(Kind::Update, cfg.dims)};
  std::vector<Interval> bounds(cfg.dims);
  const auto fill = [&](ExtentSet& set, std::size_t count) {
    set.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      for (auto& iv : bounds) {
        iv.low = unit_uniform(rng) * span;
        iv.high = iv.low + l;
      }
      set.push_back(bounds);
    }
  };
  fill(w.subscriptions, cfg.subscriptions());
  fill(w.updates, cfg.updates());
  return w;
}

}  // namespace ddm
