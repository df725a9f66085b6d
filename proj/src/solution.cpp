#include "tolbal/solution.hpp"

namespace tolbal {

Coloring Solution::coloring(std::size_t n) const {
  Coloring col(n);
  for (std::size_t i = 0; i < vertices.size(); ++i) col.set(vertices[i], colors[i]);
  return col;
}

VertexSet Solution::vertex_set(std::size_t n) const { return VertexSet::of(n, vertices); }

Solution Solution::from_coloring(const SignedGraph& g, const Coloring& col, const Tolerance& tol) {
  Solution sol;
  sol.vertices = col.selected_vertices();
  sol.colors.reserve(sol.vertices.size());
  for (VertexId v : sol.vertices) sol.colors.push_back(static_cast<std::uint8_t>(col.color(v)));
  sol.score = tbc(g, col, tol);
  return sol;
}

Solution Solution::restrict(const SignedGraph& g, const Coloring& col, const VertexSet& set, const Tolerance& tol) {
  Solution sol;
  sol.vertices = set.sorted();
  sol.colors.reserve(sol.vertices.size());
  std::int64_t m = 0, imb = 0;
  for (VertexId v : sol.vertices) {
    sol.colors.push_back(static_cast<std::uint8_t>(col.color(v)));
    for (const auto& a : g.neighbors(v)) {
      const VertexId w = a.vertex();
      if (w < v || !set.contains(w)) continue;
      ++m;
      if (a.positive() != (col.color(v) == col.color(w))) ++imb;
    }
  }
  sol.score = make_score(m, imb, tol);
  return sol;
}

Score rescore(const SignedGraph& g, const Solution& sol, const Tolerance& tol) {
  return tbc(g, sol.coloring(g.vertex_count()), tol);
}

bool tie_break_before(const Solution& a, const Solution& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  if (a.empty()) return false;
  return a.vertices.front() < b.vertices.front();
}

}  // namespace tolbal
