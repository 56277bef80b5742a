#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "treescope/graph.hpp"
#include "treescope/rng.hpp"

namespace treescope::detail {

// Integer-keyed priority structure over vertex ids. Pops draw uniformly from
// the extreme bucket, which is how the greedy orderings break ties.
class BucketQueue {
 public:
  explicit BucketQueue(std::size_t n) : key_(n, kAbsent), slot_(n, 0) {}

  bool empty() const noexcept { return size_ == 0; }
  std::size_t size() const noexcept { return size_; }
  bool contains(vertex_t v) const { return key_[v] != kAbsent; }
  std::int64_t key(vertex_t v) const { return key_[v]; }

  void set(vertex_t v, std::int64_t key) {
    if (key_[v] == key) return;
    if (key_[v] != kAbsent) remove(v);
    if (static_cast<std::size_t>(key) >= buckets_.size()) buckets_.resize(static_cast<std::size_t>(key) + 1);
    auto& bucket = buckets_[static_cast<std::size_t>(key)];
    slot_[v] = bucket.size();
    bucket.push_back(v);
    key_[v] = key;
    ++size_;
    if (key < lo_) lo_ = key;
    if (key > hi_) hi_ = key;
  }

  void remove(vertex_t v) {
    auto& bucket = buckets_[static_cast<std::size_t>(key_[v])];
    const vertex_t last = bucket.back();
    bucket[slot_[v]] = last;
    slot_[last] = slot_[v];
    bucket.pop_back();
    key_[v] = kAbsent;
    --size_;
  }

  std::int64_t min_key() {
    while (buckets_[static_cast<std::size_t>(lo_)].empty()) ++lo_;
    return lo_;
  }

  std::int64_t max_key() {
    while (buckets_[static_cast<std::size_t>(hi_)].empty()) --hi_;
    return hi_;
  }

  vertex_t pop_min(Rng& rng) { return pop_from(min_key(), rng); }
  vertex_t pop_max(Rng& rng) { return pop_from(max_key(), rng); }

  vertex_t pop_max_lowest() {
    const auto& bucket = buckets_[static_cast<std::size_t>(max_key())];
    const vertex_t v = *std::min_element(bucket.begin(), bucket.end());
    remove(v);
    return v;
  }

 private:
  vertex_t pop_from(std::int64_t key, Rng& rng) {
    auto& bucket = buckets_[static_cast<std::size_t>(key)];
    const vertex_t v = bucket[static_cast<std::size_t>(rng.below(bucket.size()))];
    remove(v);
    return v;
  }

  static constexpr std::int64_t kAbsent = -1;
  std::vector<std::vector<vertex_t>> buckets_;
  std::vector<std::int64_t> key_;
  std::vector<std::size_t> slot_;
  std::size_t size_ = 0;
  std::int64_t lo_ = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi_ = 0;
};

}  // namespace treescope::detail
