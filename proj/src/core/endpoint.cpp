#include "core/endpoint.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/worker_pool.hpp"

namespace ddm {

EndpointList collect_endpoints(const ExtentSet& subscriptions,
                               const ExtentSet& updates, std::size_t dim,
                               WorkerPool* pool, std::size_t parts) {
  check_instance(subscriptions, updates);
  if (dim >= subscriptions.dims()) {
    fail(ErrorCode::kInvalidArgument, "matching dimension out of range");
  }
  const std::size_t n = subscriptions.size();
  const std::size_t total = n + updates.size();
  EndpointList records(2 * total);
  const auto subs = subscriptions.axis(dim);
  const auto upds = updates.axis(dim);

  parts = std::max<std::size_t>(1, std::min(parts, total));
  fork_join(pool, parts, [&](std::size_t part) {
    const Block b = block_range(total, parts, part);
    for (std::size_t i = b.begin; i < b.end; ++i) {
      const bool is_sub = i < n;
      const auto id = static_cast<ExtentId>(is_sub ? i : i - n);
      const Interval& iv = is_sub ? subs[id] : upds[id];
      const Kind kind = is_sub ? Kind::Subscription : Kind::Update;
      records[2 * i] = {iv.low, id, true, kind};
      records[2 * i + 1] = {iv.high, id, false, kind};
    }
  });
  return records;
}

void sort_endpoints(EndpointList& records, WorkerPool* pool, std::size_t parts) {
  const EndpointOrder order;
  parts = std::max<std::size_t>(1, std::min(parts, records.size() / 1024 + 1));
  if (parts == 1) {
    std::sort(records.begin(), records.end(), order);
    return;
  }

  std::vector<std::size_t> bounds(parts + 1);
  for (std::size_t p = 0; p < parts; ++p) {
    bounds[p] = block_range(records.size(), parts, p).begin;
  }
  bounds[parts] = records.size();

  fork_join(pool, parts, [&](std::size_t p) {
    std::sort(records.begin() + static_cast<std::ptrdiff_t>(bounds[p]),
              records.begin() + static_cast<std::ptrdiff_t>(bounds[p + 1]), order);
  });

  // Pairwise merge rounds, ping-ponging between two buffers.
  EndpointList scratch(records.size());
  EndpointList* src = &records;
  EndpointList* dst = &scratch;
  while (bounds.size() > 2) {
    const std::size_t runs = bounds.size() - 1;
    const std::size_t merges = (runs + 1) / 2;
    fork_join(pool, merges, [&](std::size_t k) {
      const std::size_t lo = bounds[2 * k];
      const std::size_t mid = bounds[std::min(2 * k + 1, runs)];
      const std::size_t hi = bounds[std::min(2 * k + 2, runs)];
      auto at = [](EndpointList& v, std::size_t i) {
        return v.begin() + static_cast<std::ptrdiff_t>(i);
      };
      std::merge(at(*src, lo), at(*src, mid), at(*src, mid), at(*src, hi),
                 at(*dst, lo), order);
    });
    std::vector<std::size_t> next;
    next.reserve(merges + 1);
    for (std::size_t k = 0; k < runs; k += 2) next.push_back(bounds[k]);
    next.push_back(bounds.back());
    bounds = std::move(next);
    std::swap(src, dst);
  }
  if (src != &records) records.swap(*src);
}

EndpointList build_endpoint_list(const ExtentSet& subscriptions,
                                 const ExtentSet& updates, std::size_t dim,
                                 WorkerPool* pool, std::size_t parts) {
  EndpointList records = collect_endpoints(subscriptions, updates, dim, pool, parts);
  sort_endpoints(records, pool, parts);
  return records;
}

}  // namespace ddm
