#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "core/extent.hpp"

namespace ddm {

class WorkerPool;

// One bound of an extent's interval on the matching dimension.
struct EndpointRecord {
  double coord = 0.0;
  ExtentId owner_id = 0;
  bool is_lower = false;
  Kind owner_kind = Kind::Subscription;

  friend bool operator==(const EndpointRecord&, const EndpointRecord&) = default;
};

// Sweep order: coordinate, then lower before upper, then owner id, then
// subscription before update. Strict total order over the records of one
// instance.
struct EndpointOrder {
  bool operator()(const EndpointRecord& a, const EndpointRecord& b) const noexcept {
    if (a.coord != b.coord) return a.coord < b.coord;
    if (a.is_lower != b.is_lower) return a.is_lower;
    if (a.owner_id != b.owner_id) return a.owner_id < b.owner_id;
    return a.owner_kind < b.owner_kind;
  }
};

using EndpointList = std::vector<EndpointRecord>;

// Fills the 2(n+m) records for `dim`, subscriptions first, without sorting.
// With a pool the fill is split across `parts` tasks.
EndpointList collect_endpoints(const ExtentSet& subscriptions,
                               const ExtentSet& updates, std::size_t dim,
                               WorkerPool* pool = nullptr, std::size_t parts = 1);

// Sorts under EndpointOrder. parts > 1 sorts `parts` blocks concurrently and
// merges them pairwise; the result does not depend on `parts`.
void sort_endpoints(EndpointList& records, WorkerPool* pool = nullptr,
                    std::size_t parts = 1);

// collect_endpoints followed by sort_endpoints.
EndpointList build_endpoint_list(const ExtentSet& subscriptions,
                                 const ExtentSet& updates, std::size_t dim,
                                 WorkerPool* pool = nullptr, std::size_t parts = 1);

}  // namespace ddm
