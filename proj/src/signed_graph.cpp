#include "tolbal/signed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tolbal {

namespace {

bool is_integer_label(const std::string& s) {
  if (s.empty()) return false;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

SignedGraph SignedGraph::from_edges(std::size_t n, std::vector<SignedEdge> edges, std::vector<std::string> labels) {
  if (n >= (std::size_t{1} << 31)) throw std::invalid_argument("too many vertices");
  if (!labels.empty() && labels.size() != n) throw std::invalid_argument("label table size does not match vertex count");

  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const SignedEdge& a, const SignedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].u) + ", " + std::to_string(edges[i].v) + ")");
    }
  }

  SignedGraph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
    if (e.sign == Sign::Negative) ++g.negative_edges_;
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1]);
    g.offsets_[v + 1] += g.offsets_[v];
  }
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // edges are sorted by (u, v), so pushing in order yields sorted neighbor lists
  // for the "v" side; the "u" side is appended in increasing v as well.
  for (const auto& e : edges) g.adjacency_[cursor[e.v]++] = Adjacent(e.u, e.sign);
  for (const auto& e : edges) g.adjacency_[cursor[e.u]++] = Adjacent(e.v, e.sign);

  g.edges_ = std::move(edges);
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  g.numeric_labels_ = std::all_of(labels.begin(), labels.end(), is_integer_label);
  g.labels_ = std::move(labels);
  return g;
}

double SignedGraph::negative_ratio() const noexcept {
  return edges_.empty() ? 0.0 : static_cast<double>(negative_edges_) / static_cast<double>(edges_.size());
}

std::optional<Sign> SignedGraph::sign_between(VertexId u, VertexId v) const noexcept {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v, [](const Adjacent& a, VertexId x) { return a.vertex() < x; });
  if (it == nb.end() || it->vertex() != v) return std::nullopt;
  return it->sign();
}

std::optional<VertexId> SignedGraph::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexSet VertexSet::of(std::size_t universe, std::span<const VertexId> vertices) {
  VertexSet s(universe);
  for (VertexId v : vertices) {
    if (v >= universe) throw std::invalid_argument("vertex id out of range");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<VertexId>(v));
  return s;
}

bool VertexSet::insert(VertexId v) {
  if (member_[v]) return false;
  member_[v] = 1;
  list_.push_back(v);
  return true;
}

void VertexSet::clear() noexcept {
  for (VertexId v : list_) member_[v] = 0;
  list_.clear();
}

std::vector<VertexId> VertexSet::sorted() const {
  std::vector<VertexId> out(list_);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t induced_edge_count(const SignedGraph& g, const VertexSet& set) {
  std::size_t twice = 0;
  for (VertexId v : set.vertices()) {
    for (const auto& a : g.neighbors(v)) twice += set.contains(a.vertex()) ? 1 : 0;
  }
  return twice / 2;
}

}  // namespace tolbal
