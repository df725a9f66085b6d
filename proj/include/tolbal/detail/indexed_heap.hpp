#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace tolbal::detail {

/// Binary max-heap over ids 0..capacity-1 with an id -> slot map, so keys can
/// be raised, lowered or removed in O(log n). Order: larger key first, then
/// smaller id.
class IndexedMaxHeap {
 public:
  struct Entry {
    std::int64_t key;
    std::uint32_t id;
  };

  IndexedMaxHeap() = default;
  explicit IndexedMaxHeap(std::size_t capacity) : slot_(capacity, kAbsent) {}

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool contains(std::uint32_t id) const noexcept { return slot_[id] != kAbsent; }
  std::int64_t key(std::uint32_t id) const noexcept { return heap_[slot_[id]].key; }
  const Entry& top() const noexcept { return heap_.front(); }
  std::span<const Entry> entries() const noexcept { return heap_; }

  /// Inserts or updates.
  void set(std::uint32_t id, std::int64_t key) {
    if (slot_[id] == kAbsent) {
      slot_[id] = static_cast<std::uint32_t>(heap_.size());
      heap_.push_back({key, id});
      sift_up(slot_[id]);
      return;
    }
    const std::uint32_t i = slot_[id];
    const std::int64_t old = heap_[i].key;
    heap_[i].key = key;
    if (key > old) {
      sift_up(i);
    } else if (key < old) {
      sift_down(i);
    }
  }

  void erase(std::uint32_t id) {
    const std::uint32_t i = slot_[id];
    if (i == kAbsent) return;
    const std::uint32_t last = static_cast<std::uint32_t>(heap_.size() - 1);
    slot_[id] = kAbsent;
    if (i != last) {
      const std::uint32_t moved = heap_[last].id;
      place(i, heap_[last]);
      heap_.pop_back();
      sift_up(i);
      sift_down(slot_[moved]);
    } else {
      heap_.pop_back();
    }
  }

  /// Calls f(entry) in heap order (best first) until f returns false, without
  /// modifying the heap. `scratch` is reusable workspace.
  template <class F>
  void visit_in_order(std::vector<std::uint32_t>& scratch, F&& f) const {
    if (heap_.empty()) return;
    auto worse = [this](std::uint32_t a, std::uint32_t b) { return before(heap_[b], heap_[a]); };
    scratch.assign(1, 0);
    while (!scratch.empty()) {
      std::pop_heap(scratch.begin(), scratch.end(), worse);
      const std::uint32_t i = scratch.back();
      scratch.pop_back();
      if (!f(heap_[i])) return;
      for (std::size_t c = 2 * std::size_t{i} + 1; c <= 2 * std::size_t{i} + 2 && c < heap_.size(); ++c) {
        scratch.push_back(static_cast<std::uint32_t>(c));
        std::push_heap(scratch.begin(), scratch.end(), worse);
      }
    }
  }

  /// Empties the heap in O(size).
  void clear() noexcept {
    for (const auto& e : heap_) slot_[e.id] = kAbsent;
    heap_.clear();
  }

 private:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;

  static bool before(const Entry& a, const Entry& b) noexcept {
    return a.key != b.key ? a.key > b.key : a.id < b.id;
  }

  void place(std::uint32_t i, const Entry& e) {
    heap_[i] = e;
    slot_[e.id] = i;
  }

  void sift_up(std::uint32_t i) {
    const Entry e = heap_[i];
    while (i > 0) {
      const std::uint32_t parent = (i - 1) / 2;
      if (!before(e, heap_[parent])) break;
      place(i, heap_[parent]);
      i = parent;
    }
    place(i, e);
  }

  void sift_down(std::uint32_t i) {
    const Entry e = heap_[i];
    const std::size_t n = heap_.size();
    for (;;) {
      std::size_t child = 2 * std::size_t{i} + 1;
      if (child >= n) break;
      if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
      if (!before(heap_[child], e)) break;
      place(i, heap_[child]);
      i = static_cast<std::uint32_t>(child);
    }
    place(i, e);
  }

  std::vector<std::uint32_t> slot_;
  std::vector<Entry> heap_;
};

}  // namespace tolbal::detail
