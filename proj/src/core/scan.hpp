#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "core/worker_pool.hpp"

namespace ddm {

// Exclusive prefix scan in three steps: each of `parts` workers reduces its
// block to local exclusive prefixes and a block total; one coordinator scans
// the block totals; each worker then prepends its block offset. The result is
// z[0] = identity, z[k] = x[0] op ... op x[k-1]. `op` must be associative with
// `identity` neutral on both sides; it need not be commutative.
template <typename T, typename Op>
std::vector<T> two_level_exclusive_scan(std::span<const T> items, Op op,
                                        const T& identity, std::size_t parts,
                                        WorkerPool* pool = nullptr) {
  const std::size_t count = items.size();
  std::vector<T> out(count, identity);
  if (count == 0) return out;
  if (parts == 0) parts = 1;
  parts = std::min(parts, count);

  // Step 1: local exclusive prefixes and block totals.
  std::vector<T> totals(parts, identity);
  fork_join(pool, parts, [&](std::size_t p) {
    const Block b = block_range(count, parts, p);
    T running = identity;
    for (std::size_t k = b.begin; k < b.end; ++k) {
      out[k] = running;
      running = op(running, items[k]);
    }
    totals[p] = std::move(running);
  });

  // Step 2: coordinator scans the block totals.
  std::vector<T> offsets(parts, identity);
  for (std::size_t p = 1; p < parts; ++p) {
    offsets[p] = op(offsets[p - 1], totals[p - 1]);
  }

  // Step 3: apply offsets; block 0 already holds its final values.
  fork_join(pool, parts, [&](std::size_t p) {
    if (p == 0) return;
    const Block b = block_range(count, parts, p);
    for (std::size_t k = b.begin; k < b.end; ++k) out[k] = op(offsets[p], out[k]);
  });
  return out;
}

// Plain sequential exclusive scan.
template <typename T, typename Op>
std::vector<T> sequential_exclusive_scan(std::span<const T> items, Op op,
                                         const T& identity) {
  std::vector<T> out;
  out.reserve(items.size());
  T running = identity;
  for (const T& x : items) {
    out.push_back(running);
    running = op(running, x);
  }
  return out;
}

}  // namespace ddm
