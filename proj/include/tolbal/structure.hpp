#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tolbal/signed_graph.hpp"

namespace tolbal {

/// Maximal connected vertex sets of the underlying unsigned graph, restricted
/// to `restrict` when given. Components are listed by smallest member id and
/// each component's vertices are ascending.
std::vector<VertexSet> connected_components(const SignedGraph& g, const VertexSet* restrict = nullptr);

/// True if G[vertices] is connected (the empty set counts as connected).
template <class InSet>
bool is_connected(const SignedGraph& g, std::span<const VertexId> vertices, InSet&& in_set);

bool is_connected(const SignedGraph& g, const VertexSet& set);

/// Articulation vertices of G[restrict]. Throws std::invalid_argument if the
/// induced subgraph is disconnected.
VertexSet articulation_points(const SignedGraph& g, const VertexSet& restrict);

/// Iterative Tarjan low-link scan with buffers reused across calls, so
/// repeated scans cost O(|S| + edges scanned) rather than O(n).
class ArticulationScanner {
 public:
  explicit ArticulationScanner(std::size_t n) : disc_(n, 0), low_(n, 0), parent_(n, 0), is_cut_(n, 0) {}

  /// Scans G[vertices] where membership is given by `in_set(v)`. Returns the
  /// number of vertices reached from vertices[0]; afterwards is_cut(v) is valid
  /// for every reached vertex until the next scan.
  template <class InSet>
  std::size_t scan(const SignedGraph& g, std::span<const VertexId> vertices, InSet&& in_set);

  bool is_cut(VertexId v) const noexcept { return is_cut_[v] != 0; }

 private:
  struct Frame {
    VertexId vertex;
    std::uint32_t next;  // index into neighbors(vertex)
  };

  std::vector<std::uint32_t> disc_;
  std::vector<std::uint32_t> low_;
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> is_cut_;
  std::vector<Frame> stack_;
  std::vector<VertexId> reached_;
};

template <class InSet>
std::size_t ArticulationScanner::scan(const SignedGraph& g, std::span<const VertexId> vertices, InSet&& in_set) {
  for (VertexId v : reached_) {
    disc_[v] = 0;
    is_cut_[v] = 0;
  }
  reached_.clear();
  if (vertices.empty()) return 0;

  const VertexId root = vertices.front();
  std::uint32_t clock = 1;
  std::uint32_t root_children = 0;
  disc_[root] = low_[root] = clock++;
  parent_[root] = root;
  reached_.push_back(root);
  stack_.clear();
  stack_.push_back({root, 0});

  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const auto nb = g.neighbors(f.vertex);
    if (f.next < nb.size()) {
      const VertexId w = nb[f.next++].vertex();
      if (!in_set(w)) continue;
      if (disc_[w] == 0) {
        parent_[w] = f.vertex;
        disc_[w] = low_[w] = clock++;
        reached_.push_back(w);
        if (f.vertex == root) ++root_children;
        stack_.push_back({w, 0});
      } else if (w != parent_[f.vertex]) {
        low_[f.vertex] = std::min(low_[f.vertex], disc_[w]);
      }
      continue;
    }
    const VertexId v = f.vertex;
    stack_.pop_back();
    if (v == root) break;
    const VertexId p = parent_[v];
    low_[p] = std::min(low_[p], low_[v]);
    if (p != root && low_[v] >= disc_[p]) is_cut_[p] = 1;
  }
  if (root_children > 1) is_cut_[root] = 1;
  return reached_.size();
}

/// Local test of whether removing v disconnects a connected G[S]: one search
/// per neighbor of v in S, advanced round-robin and merged when they meet.
/// Stops as soon as one search closes off (cut) or all have merged (not a
/// cut), so non-cut vertices in well-connected sets are settled cheaply.
class CutProbe {
 public:
  enum class Verdict { NotCut, Cut, GaveUp };

  explicit CutProbe(std::size_t n) : stamp_(n, 0), group_(n, 0) {}

  /// `budget` counts adjacency entries scanned and is decremented in place;
  /// GaveUp is returned when it runs out.
  template <class InSet>
  Verdict test(const SignedGraph& g, VertexId v, InSet&& in_set, std::size_t& budget);

 private:
  std::uint32_t find(std::uint32_t x) {
    while (uf_[x] != x) x = uf_[x] = uf_[uf_[x]];
    return x;
  }

  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> group_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> uf_;
  std::vector<std::vector<VertexId>> queues_;
  std::vector<std::size_t> heads_;
  std::vector<std::uint32_t> roots_;
};

template <class InSet>
CutProbe::Verdict CutProbe::test(const SignedGraph& g, VertexId v, InSet&& in_set, std::size_t& budget) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  stamp_[v] = epoch_;
  group_[v] = UINT32_MAX;
  std::uint32_t k = 0;
  for (const auto& a : g.neighbors(v)) {
    const VertexId u = a.vertex();
    if (!in_set(u)) continue;
    if (k == queues_.size()) queues_.emplace_back();
    queues_[k].assign(1, u);
    stamp_[u] = epoch_;
    group_[u] = k++;
  }
  if (budget < g.neighbors(v).size()) return Verdict::GaveUp;
  budget -= g.neighbors(v).size();
  if (k <= 1) return Verdict::NotCut;

  uf_.resize(k);
  heads_.assign(k, 0);
  roots_.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) uf_[i] = roots_[i] = i;
  std::uint32_t groups = k;
  for (std::size_t r = 0;; r = r + 1 < roots_.size() ? r + 1 : 0) {
    std::uint32_t root = roots_[r];
    if (uf_[root] != root) {
      // merged away: drop from the rotation
      roots_[r] = roots_.back();
      roots_.pop_back();
      if (r >= roots_.size()) r = roots_.size() - 1;
      continue;
    }
    auto& q = queues_[root];
    if (heads_[root] == q.size()) return Verdict::Cut;
    const VertexId x = q[heads_[root]++];
    const auto nb = g.neighbors(x);
    if (budget < nb.size()) return Verdict::GaveUp;
    budget -= nb.size();
    for (const auto& a : nb) {
      const VertexId w = a.vertex();
      if (stamp_[w] != epoch_) {
        if (!in_set(w)) continue;
        stamp_[w] = epoch_;
        group_[w] = root;
        queues_[root].push_back(w);
        continue;
      }
      if (group_[w] == UINT32_MAX) continue;
      const std::uint32_t other = find(group_[w]);
      if (other == root) continue;
      // merge the smaller pending queue into the larger
      std::uint32_t big = root, small = other;
      if (queues_[big].size() - heads_[big] < queues_[small].size() - heads_[small]) std::swap(big, small);
      auto& into = queues_[big];
      const auto& from = queues_[small];
      into.insert(into.end(), from.begin() + static_cast<std::ptrdiff_t>(heads_[small]), from.end());
      uf_[small] = big;
      root = big;
      if (--groups == 1) return Verdict::NotCut;
    }
  }
}

template <class InSet>
bool is_connected(const SignedGraph& g, std::span<const VertexId> vertices, InSet&& in_set) {
  if (vertices.empty()) return true;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{vertices.front()};
  seen[vertices.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& a : g.neighbors(v)) {
      VertexId w = a.vertex();
      if (!seen[w] && in_set(w)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertices.size();
}

}  // namespace tolbal
