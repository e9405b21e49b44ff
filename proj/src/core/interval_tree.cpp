#include "core/interval_tree.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/worker_pool.hpp"

namespace ddm {

IntervalTree IntervalTree::build(std::span<const Interval> intervals) {
  IntervalTree tree;
  tree.nodes_.reserve(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    tree.insert(intervals[i], static_cast<ExtentId>(i));
  }
  return tree;
}

void IntervalTree::insert(const Interval& in, ExtentId owner) {
  if (nodes_.size() >= static_cast<std::size_t>(INT32_MAX)) {
    fail(ErrorCode::kInvalidArgument, "interval tree is full");
  }
  Node fresh;
  fresh.in = in;
  fresh.owner = owner;
  fresh.minlower = in.low;
  fresh.maxupper = in.high;
  nodes_.push_back(fresh);
  root_ = insert_at(root_, static_cast<Index>(nodes_.size() - 1));
}

void IntervalTree::refresh(Index x) {
  Node& n = at(x);
  n.height = 1 + std::max(height_of(n.left), height_of(n.right));
  n.minlower = n.in.low;
  n.maxupper = n.in.high;
  for (Index child : {n.left, n.right}) {
    if (child == kNull) continue;
    const Node& c = node(child);
    n.minlower = std::min(n.minlower, c.minlower);
    n.maxupper = std::max(n.maxupper, c.maxupper);
  }
}

IntervalTree::Index IntervalTree::rotate_left(Index x) {
  const Index y = at(x).right;
  at(x).right = at(y).left;
  at(y).left = x;
  refresh(x);
  refresh(y);
  return y;
}

IntervalTree::Index IntervalTree::rotate_right(Index x) {
  const Index y = at(x).left;
  at(x).left = at(y).right;
  at(y).right = x;
  refresh(x);
  refresh(y);
  return y;
}

IntervalTree::Index IntervalTree::rebalance(Index x) {
  refresh(x);
  const auto balance = [this](Index i) {
    return height_of(node(i).left) - height_of(node(i).right);
  };
  const int b = balance(x);
  if (b > 1) {
    if (balance(at(x).left) < 0) at(x).left = rotate_left(at(x).left);
    return rotate_right(x);
  }
  if (b < -1) {
    if (balance(at(x).right) > 0) at(x).right = rotate_right(at(x).right);
    return rotate_left(x);
  }
  return x;
}

IntervalTree::Index IntervalTree::insert_at(Index x, Index fresh) {
  if (x == kNull) return fresh;
  const Node& f = node(fresh);
  const Node& n = node(x);
  const bool go_left =
      f.in.low < n.in.low || (f.in.low == n.in.low && f.owner < n.owner);
  if (go_left) {
    const Index child = insert_at(n.left, fresh);
    at(x).left = child;
  } else {
    const Index child = insert_at(n.right, fresh);
    at(x).right = child;
  }
  return rebalance(x);
}

PairReport match_interval_tree(const ExtentSet& subscriptions,
                               const ExtentSet& updates, const MatchOptions& opts) {
  check_instance(subscriptions, updates);
  const IntervalTree tree = IntervalTree::build(subscriptions.axis(0));
  const auto upds = updates.axis(0);
  const std::size_t m = upds.size();
  const std::size_t parts = std::max<std::size_t>(1, std::min(opts.workers, m));

  std::vector<PairReport> partial(parts);
  fork_join(opts.pool, parts, [&](std::size_t part) {
    const Block queries = block_range(m, parts, part);
    PairEmitter out(opts.mode, subscriptions, updates);
    for (std::size_t j = queries.begin; j < queries.end; ++j) {
      if (((j - queries.begin) & 1023u) == 0) check_deadline(opts);
      const auto u = static_cast<ExtentId>(j);
      tree.query(upds[j], [&](ExtentId s) { out.emit(s, u); });
    }
    partial[part] = out.take();
  });
  return merge_reports(opts.mode, std::move(partial));
}

}  // namespace ddm
