#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tolbal/balance.hpp"
#include "tolbal/detail/indexed_heap.hpp"
#include "tolbal/rng.hpp"
#include "tolbal/solution.hpp"
#include "tolbal/structure.hpp"

namespace tolbal {

struct SearchParams {
  /// Probability of challenging with a flip; deletions fire with p*ln|S|/|S|.
  /// p = 0 gives the insertion-only variant.
  double p = 0.8;
  /// Early-stop turn limit.
  std::int64_t T = 20;
  Tolerance tol;
  std::uint64_t seed = 0;
  /// When set, the objective becomes count - sigma*|S|.
  std::optional<Rational> size_penalty;

  void validate() const;
  Objective objective() const;
};

enum class OpKind : std::uint8_t { Insert, Flip, Delete };

struct Candidate {
  OpKind kind;
  VertexId vertex;
  int color;  // color after the op (Insert/Flip); current color for Delete
  std::int64_t delta;
};

struct OpRecord {
  OpKind kind;
  VertexId vertex;
  std::int8_t color_before;  // -1 when unselected
  std::int8_t color_after;
  std::int64_t delta;
  bool progressive;
};

struct SearchStats {
  std::int64_t iterations = 0;
  std::int64_t progressive = 0;
  std::int64_t non_progressive = 0;
  std::int64_t inserts = 0;
  std::int64_t flips = 0;
  std::int64_t deletes = 0;
  std::int64_t undone = 0;
  std::int64_t idle_rounds = 0;
};

struct SearchOutcome {
  VertexId start = 0;
  Solution solution;
  /// Best objective in scaled units (equals solution.score.scaled without a size penalty).
  std::int64_t objective = 0;
  SearchStats stats;
};

/// Randomized local search from one start vertex: greedy insertion with
/// flip/delete challengers, an early-stop budget and undo to the best state.
/// Holds O(n) reusable workspace; cleanup after a search costs only what the
/// search touched, so many searches can share one instance.
class LocalSearch {
 public:
  explicit LocalSearch(const SignedGraph& g);

  /// Restricts the search to vertices with mask[v] != 0. An empty span means
  /// every vertex. The mask must outlive subsequent searches.
  void set_active(std::span<const std::uint8_t> mask);

  SearchOutcome search(VertexId s, const SearchParams& params);

  // Stepwise interface.
  void reset(VertexId s, const SearchParams& params);
  /// One round of the main loop. Returns false once the loop has ended.
  bool step();
  void run();
  void undo_to_optimum();
  SearchOutcome result() const;

  // Raw operations (logged, no budget accounting). Preconditions as for the
  // corresponding delta functions.
  void apply_insert(VertexId x, int c);
  void apply_flip(VertexId x);
  void apply_delete(VertexId x);

  std::optional<Candidate> top_insert() const;
  std::optional<Candidate> top_flip() const;
  std::optional<Candidate> del_eval();

  /// Heap contents for verification: (id, key); insert ids are 2v + color.
  std::span<const detail::IndexedMaxHeap::Entry> insert_entries() const { return insert_heap_.entries(); }
  std::span<const detail::IndexedMaxHeap::Entry> flip_entries() const { return flip_heap_.entries(); }
  std::span<const detail::IndexedMaxHeap::Entry> delete_entries() const { return delete_heap_.entries(); }

  const Coloring& coloring() const noexcept { return coloring_; }
  std::span<const VertexId> members() const noexcept { return members_; }
  std::int64_t current() const noexcept { return cur_; }
  std::int64_t optimum() const noexcept { return opt_; }
  std::int64_t budget() const noexcept { return budget_; }
  const std::vector<OpRecord>& log() const noexcept { return log_; }
  const SearchStats& stats() const noexcept { return stats_; }
  const Objective& objective() const noexcept { return objective_; }

  /// Fresh deltas from the maintained neighbor counters.
  std::int64_t insert_key(VertexId x, int c) const noexcept;
  std::int64_t flip_key(VertexId x) const noexcept;
  std::int64_t delete_key(VertexId x) const noexcept;

 private:
  // counts_[4v + 2*sign_index + color]: selected neighbors of v by sign and color
  std::uint32_t count(VertexId v, unsigned sign_index, int color) const noexcept {
    return counts_[4 * std::size_t{v} + 2 * sign_index + static_cast<unsigned>(color)];
  }
  std::uint32_t degree_in(VertexId v) const noexcept;
  std::uint32_t imbalanced_at(VertexId v, int c) const noexcept {
    return count(v, 0, 1 - c) + count(v, 1, c);
  }
  bool active(VertexId v) const noexcept { return active_.empty() || active_[v] != 0; }
  void touch(VertexId v);
  void refresh(VertexId v);

  std::int64_t raw_insert(VertexId x, int c);
  std::int64_t raw_flip(VertexId x);
  std::int64_t raw_delete(VertexId x);
  void record(OpKind kind, VertexId x, int before, int after, std::int64_t delta);
  void execute(const Candidate& c);

  const SignedGraph* g_;
  std::span<const std::uint8_t> active_;
  std::size_t active_count_;

  SearchParams params_;
  Objective objective_;
  Rng rng_{0};

  Coloring coloring_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint8_t> touched_flag_;
  std::vector<VertexId> touched_;
  std::vector<VertexId> members_;
  std::vector<std::uint32_t> member_pos_;
  detail::IndexedMaxHeap insert_heap_;
  detail::IndexedMaxHeap flip_heap_;
  detail::IndexedMaxHeap delete_heap_;
  std::vector<std::uint32_t> heap_scratch_;
  ArticulationScanner scanner_;
  CutProbe probe_;

  std::int64_t cur_ = 0;
  std::int64_t opt_ = 0;
  std::int64_t budget_ = 0;
  std::int64_t idle_ = 0;
  VertexId start_ = 0;
  std::vector<OpRecord> log_;
  SearchStats stats_;
};

}  // namespace tolbal
