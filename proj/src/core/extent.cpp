#include "core/extent.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace ddm {

const char* kind_tag(Kind kind) {
  return kind == Kind::Subscription ? "S" : "U";
}

bool intersect_dd(const Extent& a, const Extent& b) {
  if (a.dims() != b.dims()) {
    fail(ErrorCode::kInvalidArgument,
         "dimensionality mismatch: " + std::to_string(a.dims()) + " vs " +
             std::to_string(b.dims()));
  }
  for (std::size_t k = 0; k < a.dims(); ++k) {
    if (!intersect_1d(a.bounds[k], b.bounds[k])) return false;
  }
  return true;
}

ExtentSet::ExtentSet(Kind kind, std::size_t dims)
    : kind_(kind), dims_(dims), axes_(dims) {
  if (dims == 0) fail(ErrorCode::kInvalidArgument, "extents need d >= 1");
}

ExtentSet ExtentSet::from_extents(Kind kind, std::size_t dims,
                                  std::span<const Extent> extents) {
  ExtentSet set(kind, dims);
  set.reserve(extents.size());
  for (const Extent& e : extents) {
    if (e.kind != kind) fail(ErrorCode::kInvalidArgument, "extent kind mismatch");
    if (e.id != set.size()) {
      fail(ErrorCode::kInvalidArgument,
           "extent ids must be dense; expected " + std::to_string(set.size()) +
               ", got " + std::to_string(e.id));
    }
    set.push_back(e.bounds);
  }
  return set;
}

ExtentSet ExtentSet::from_extents(
    Kind kind, std::size_t dims,
    std::initializer_list<std::vector<Interval>> bounds) {
  ExtentSet set(kind, dims);
  for (const auto& b : bounds) set.push_back(b);
  return set;
}

ExtentId ExtentSet::push_back(std::span<const Interval> bounds) {
  if (bounds.size() != dims_) {
    fail(ErrorCode::kInvalidArgument,
         "extent has " + std::to_string(bounds.size()) + " dimensions, set has " +
             std::to_string(dims_));
  }
  for (const Interval& iv : bounds) {
    if (!std::isfinite(iv.low) || !std::isfinite(iv.high)) {
      fail(ErrorCode::kInvalidArgument, "extent coordinates must be finite");
    }
    if (iv.low > iv.high) {
      fail(ErrorCode::kInvalidArgument, "extent bound has low > high");
    }
  }
  if (size_ >= std::size_t{UINT32_MAX}) {
    fail(ErrorCode::kInvalidArgument, "too many extents");
  }
  for (std::size_t k = 0; k < dims_; ++k) axes_[k].push_back(bounds[k]);
  return static_cast<ExtentId>(size_++);
}

void ExtentSet::reserve(std::size_t n) {
  for (auto& axis : axes_) axis.reserve(n);
}

Extent ExtentSet::extent(ExtentId id) const {
  if (id >= size_) fail(ErrorCode::kInvalidArgument, "extent id out of range");
  Extent e{id, kind_, {}};
  e.bounds.reserve(dims_);
  for (std::size_t k = 0; k < dims_; ++k) e.bounds.push_back(axes_[k][id]);
  return e;
}

void check_instance(const ExtentSet& subscriptions, const ExtentSet& updates) {
  if (subscriptions.kind() != Kind::Subscription ||
      updates.kind() != Kind::Update) {
    fail(ErrorCode::kInvalidArgument,
         "expected a subscription set and an update set");
  }
  if (subscriptions.dims() != updates.dims()) {
    fail(ErrorCode::kInvalidArgument,
         "subscription and update extents differ in dimensionality");
  }
}

bool overlap_other_dims(const ExtentSet& subscriptions, ExtentId s,
                        const ExtentSet& updates, ExtentId u,
                        std::size_t skip_dim) {
  for (std::size_t k = 0; k < subscriptions.dims(); ++k) {
    if (k == skip_dim) continue;
    if (!intersect_1d(subscriptions.interval(s, k), updates.interval(u, k))) {
      return false;
    }
  }
  return true;
}

}  // namespace ddm
