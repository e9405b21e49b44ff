#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "core/match_options.hpp"

namespace ddm {

// AVL tree of closed intervals keyed on (lower bound, owner id), augmented
// with the minimum lower bound and maximum upper bound of every subtree.
class IntervalTree {
 public:
  using Index = std::int32_t;
  static constexpr Index kNull = -1;

  struct Node {
    Interval in;
    ExtentId owner = 0;
    double minlower = 0.0;
    double maxupper = 0.0;
    Index left = kNull;
    Index right = kNull;
    std::int32_t height = 1;
  };

  IntervalTree() = default;

  // Inserts intervals[i] with owner id i, one at a time.
  static IntervalTree build(std::span<const Interval> intervals);

  void insert(const Interval& in, ExtentId owner);

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return root_ == kNull; }
  Index root() const noexcept { return root_; }
  const Node& node(Index i) const { return nodes_[static_cast<std::size_t>(i)]; }
  // Levels on the longest root-to-leaf path; 0 for an empty tree.
  std::int32_t height() const noexcept { return height_of(root_); }

  // Calls sink(owner) for every stored interval intersecting q. Subtrees are
  // pruned when [minlower, maxupper] misses q, and the right subtree is only
  // entered when q.high >= the node's lower bound. `visits`, when given,
  // counts non-null nodes entered.
  template <typename Sink>
  void query(const Interval& q, Sink&& sink, std::size_t* visits = nullptr) const {
    query_from(root_, q, sink, visits);
  }

 private:
  template <typename Sink>
  void query_from(Index x, const Interval& q, Sink& sink, std::size_t* visits) const {
    if (x == kNull) return;
    if (visits != nullptr) ++*visits;
    const Node& n = node(x);
    if (n.maxupper < q.low || n.minlower > q.high) return;
    query_from(n.left, q, sink, visits);
    if (intersect_1d(n.in, q)) sink(n.owner);
    if (q.high >= n.in.low) query_from(n.right, q, sink, visits);
  }

  std::int32_t height_of(Index x) const noexcept {
    return x == kNull ? 0 : node(x).height;
  }
  Node& at(Index i) { return nodes_[static_cast<std::size_t>(i)]; }
  void refresh(Index x);
  Index rotate_left(Index x);
  Index rotate_right(Index x);
  Index rebalance(Index x);
  Index insert_at(Index x, Index fresh);

  std::vector<Node> nodes_;
  Index root_ = kNull;
};

// Builds the tree over subscriptions on dimension 0 (serial), then splits the
// m update queries across `opts.workers` tasks with private buffers merged in
// query order.
PairReport match_interval_tree(const ExtentSet& subscriptions,
                               const ExtentSet& updates, const MatchOptions& opts);

}  // namespace ddm
