#pragma once

#include <cstdint>
#include <vector>

#include "tolbal/balance.hpp"
#include "tolbal/signed_graph.hpp"

namespace tolbal {

/// A selected connected subgraph with its coloring.
struct Solution {
  std::vector<VertexId> vertices;    // ascending
  std::vector<std::uint8_t> colors;  // colors[i] belongs to vertices[i]
  Score score;

  bool empty() const noexcept { return vertices.empty(); }
  std::size_t size() const noexcept { return vertices.size(); }

  Coloring coloring(std::size_t n) const;
  VertexSet vertex_set(std::size_t n) const;

  static Solution from_coloring(const SignedGraph& g, const Coloring& col, const Tolerance& tol);
  /// Vertices of `set`, all colored per `col` (which must cover them).
  static Solution restrict(const SignedGraph& g, const Coloring& col, const VertexSet& set, const Tolerance& tol);
};

/// Recomputes the score of a solution from scratch.
Score rescore(const SignedGraph& g, const Solution& sol, const Tolerance& tol);

/// Strict order used when several candidate solutions tie on objective:
/// larger vertex count, then smaller minimum vertex id.
bool tie_break_before(const Solution& a, const Solution& b);

}  // namespace tolbal
