#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ddm {

using ExtentId = std::uint32_t;

enum class Kind : std::uint8_t { Subscription = 0, Update = 1 };

const char* kind_tag(Kind kind);  // "S" / "U"

// Closed interval [low, high] on one axis of the routing space.
struct Interval {
  double low = 0.0;
  double high = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Closed-interval overlap; touching endpoints intersect.
// Both comparisons are always evaluated; brute-force loops stay branch-light.
constexpr bool intersect_1d(const Interval& x, const Interval& y) noexcept {
  return (x.low <= y.high) & (y.low <= x.high);
}

// One axis-parallel d-rectangle. Owning value type used at API boundaries and
// in tests; matchers read extents through ExtentSet's per-dimension arrays.
struct Extent {
  ExtentId id = 0;
  Kind kind = Kind::Subscription;
  std::vector<Interval> bounds;

  std::size_t dims() const noexcept { return bounds.size(); }

  friend bool operator==(const Extent&, const Extent&) = default;
};

// Conjunction of intersect_1d over every dimension. Throws on a
// dimensionality mismatch.
bool intersect_dd(const Extent& a, const Extent& b);

// A dense collection of extents of one kind: ids are 0..size()-1. Bounds are
// stored one contiguous array per dimension so a matcher can sweep a single
// axis without touching the others.
class ExtentSet {
 public:
  ExtentSet() : axes_(1) {}
  ExtentSet(Kind kind, std::size_t dims);

  // Builds a set from `extents`, which must all have `kind` and carry ids
  // 0..n-1 in order.
  static ExtentSet from_extents(Kind kind, std::size_t dims,
                                std::span<const Extent> extents);
  static ExtentSet from_extents(Kind kind, std::size_t dims,
                                std::initializer_list<std::vector<Interval>> bounds);

  Kind kind() const noexcept { return kind_; }
  std::size_t dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Appends an extent and returns its id. Validates finiteness and
  // low <= high on every axis.
  ExtentId push_back(std::span<const Interval> bounds);
  void reserve(std::size_t n);

  const Interval& interval(ExtentId id, std::size_t dim) const {
    return axes_[dim][id];
  }
  std::span<const Interval> axis(std::size_t dim) const { return axes_[dim]; }

  Extent extent(ExtentId id) const;

  friend bool operator==(const ExtentSet&, const ExtentSet&) = default;

 private:
  Kind kind_ = Kind::Subscription;
  std::size_t dims_ = 1;
  std::size_t size_ = 0;
  std::vector<std::vector<Interval>> axes_;
};

// Validates the pair of sets forms one problem instance: correct kinds and
// equal dimensionality.
void check_instance(const ExtentSet& subscriptions, const ExtentSet& updates);

// True when pair (s, u) overlaps on every dimension except `skip_dim`.
bool overlap_other_dims(const ExtentSet& subscriptions, ExtentId s,
                        const ExtentSet& updates, ExtentId u,
                        std::size_t skip_dim);

}  // namespace ddm
