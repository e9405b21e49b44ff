#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "core/extent.hpp"

namespace ddm {

// Ordered set of dense extent ids backing SubSet/UpdSet in the sort-based
// sweeps. Stored as a 64-ary tree of bitmaps: level 0 has one bit per id and
// each level above has one bit per nonzero word below, up to a single word.
// Insert, erase and successor search touch one word per level, i.e.
// O(log_64 n); size() is a counter. Iteration is in increasing id order.
class ActiveSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ExtentId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ExtentId*;
    using reference = ExtentId;

    const_iterator() = default;
    ExtentId operator*() const { return static_cast<ExtentId>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    friend class ActiveSet;
    const_iterator(const ActiveSet* set, std::size_t pos) : set_(set), pos_(pos) {}
    const ActiveSet* set_ = nullptr;
    std::size_t pos_ = kEnd;
  };

  ActiveSet() = default;
  ActiveSet(std::initializer_list<ExtentId> ids) {
    for (ExtentId id : ids) insert(id);
  }

  bool insert(ExtentId id) {
    if (id >= capacity_) grow(id);
    std::size_t pos = id;
    for (auto& level : levels_) {
      std::uint64_t& word = level[pos >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (pos & 63);
      const bool was_empty = word == 0;
      if (&level == &levels_.front()) {
        if (word & bit) return false;
        ++size_;
      }
      word |= bit;
      if (!was_empty) break;
      pos >>= 6;
    }
    return true;
  }

  bool erase(ExtentId id) {
    if (!contains(id)) return false;
    std::size_t pos = id;
    for (auto& level : levels_) {
      std::uint64_t& word = level[pos >> 6];
      word &= ~(std::uint64_t{1} << (pos & 63));
      if (word != 0) break;
      pos >>= 6;
    }
    --size_;
    return true;
  }

  bool contains(ExtentId id) const {
    return id < capacity_ && (levels_[0][id >> 6] >> (id & 63) & 1) != 0;
  }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  void clear() noexcept {
    for (auto& level : levels_) std::fill(level.begin(), level.end(), 0);
    size_ = 0;
  }

  const_iterator begin() const { return {this, size_ == 0 ? kEnd : next(0)}; }
  const_iterator end() const { return {this, kEnd}; }

  friend bool operator==(const ActiveSet& a, const ActiveSet& b) {
    if (a.size_ != b.size_) return false;
    if (a.size_ == 0) return true;
    const auto& x = a.levels_[0];
    const auto& y = b.levels_[0];
    const std::size_t common = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (x[i] != y[i]) return false;
    }
    // Equal sizes and equal common prefix leave nothing beyond it.
    return true;
  }

 private:
  static constexpr std::size_t kEnd = ~std::size_t{0};

  // Smallest member >= pos, or kEnd.
  std::size_t next(std::size_t pos) const {
    return levels_.empty() ? kEnd : next_at(0, pos);
  }

  std::size_t next_at(std::size_t level, std::size_t pos) const {
    const auto& words = levels_[level];
    std::size_t w = pos >> 6;
    if (w >= words.size()) return kEnd;
    const std::uint64_t here = words[w] & (~std::uint64_t{0} << (pos & 63));
    if (here != 0) return (w << 6) | static_cast<std::size_t>(std::countr_zero(here));
    if (level + 1 == levels_.size()) {
      // Top level: a single word, already scanned.
      return kEnd;
    }
    w = next_at(level + 1, w + 1);
    if (w == kEnd) return kEnd;
    return (w << 6) | static_cast<std::size_t>(std::countr_zero(words[w]));
  }

  void grow(ExtentId id) {
    std::size_t cap = capacity_ == 0 ? 64 : capacity_;
    while (cap <= id) cap *= 2;
    std::size_t words = cap / 64;
    std::size_t level = 0;
    for (;; ++level) {
      if (level == levels_.size()) levels_.emplace_back();
      levels_[level].resize(words, 0);
      if (words == 1) break;
      words = (words + 63) / 64;
    }
    // Rebuild the summaries; new levels may have been added on top.
    for (std::size_t l = 1; l <= level; ++l) {
      auto& below = levels_[l - 1];
      auto& here = levels_[l];
      std::fill(here.begin(), here.end(), 0);
      for (std::size_t i = 0; i < below.size(); ++i) {
        if (below[i] != 0) here[i >> 6] |= std::uint64_t{1} << (i & 63);
      }
    }
    capacity_ = cap;
  }

  std::vector<std::vector<std::uint64_t>> levels_;
  std::size_t capacity_ = 0;
  std::size_t size_ = 0;
};

// SubSet / UpdSet pair carried by a sweep.
struct SweepState {
  ActiveSet subscriptions;
  ActiveSet updates;

  friend bool operator==(const SweepState&, const SweepState&) = default;
};

}  // namespace ddm
