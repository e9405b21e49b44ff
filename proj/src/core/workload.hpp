#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "core/extent.hpp"

namespace ddm {

// Synthetic workload parameters: N extents split evenly into subscriptions
// and updates, all of length l = alpha * L / N, placed uniformly in [0, L].
struct WorkloadConfig {
  std::uint64_t total = 0;  // N
  double alpha = 1.0;       // overlapping degree
  double length = 1e6;      // routing space L
  std::uint64_t seed = 0;
  std::size_t dims = 1;

  double extent_length() const { return alpha * length / static_cast<double>(total); }
  std::size_t subscriptions() const { return static_cast<std::size_t>(total / 2); }
  std::size_t updates() const { return static_cast<std::size_t>(total / 2); }

  // Throws kInvalidArgument unless N is even and positive, alpha and L are
  // positive and finite, dims >= 1 and the extent fits in the space.
  void validate() const;
};

// Generator identity recorded in workload metadata. Lower bounds are drawn as
// (x >> 11) * 2^-53 from successive std::mt19937_64 outputs, which the C++
// standard pins bit-for-bit.
inline constexpr std::string_view kRngName = "std::mt19937_64";
inline constexpr std::string_view kRngVersion = "1 (53-bit mantissa, ddm placement order)";

struct Workload {
  ExtentSet subscriptions{Kind::Subscription, 1};
  ExtentSet updates{Kind::Update, 1};
};

// Deterministic for a fixed config. Subscriptions are drawn first, then
// updates; within an extent dimensions are drawn in order. Each lower bound is
// uniform on [0, L - l] and the upper bound is lower + l.
Workload generate_workload(const WorkloadConfig& cfg);

// Uniform double in [0, 1) from one 64-bit draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace ddm
