// Shared helpers for the test suites: random instances and brute-force
// reference computations that share no code with the library's solvers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <climits>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "tolbal/balance.hpp"
#include "tolbal/graph_io.hpp"
#include "tolbal/signed_graph.hpp"
#include "tolbal/solution.hpp"

namespace testing {

using namespace tolbal;

inline SignedGraph make_graph(std::size_t n, std::vector<std::tuple<int, int, int>> edges) {
  std::vector<SignedEdge> out;
  for (auto [u, v, s] : edges) {
    out.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), s > 0 ? Sign::Positive : Sign::Negative});
  }
  return SignedGraph::from_edges(n, std::move(out));
}

/// G(n, p) with each edge negative with probability neg.
inline SignedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density, double neg) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SignedEdge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (u(rng) < density) edges.push_back({a, b, u(rng) < neg ? Sign::Negative : Sign::Positive});
    }
  }
  return SignedGraph::from_edges(n, std::move(edges));
}

/// Random connected graph: random tree plus extra random edges.
inline SignedGraph random_connected_graph(std::mt19937_64& rng, std::size_t n, double extra_density, double neg) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<std::uint8_t>> has(n, std::vector<std::uint8_t>(n, 0));
  std::vector<SignedEdge> edges;
  auto add = [&](VertexId a, VertexId b) {
    if (a == b || has[a][b]) return;
    has[a][b] = has[b][a] = 1;
    edges.push_back({a, b, u(rng) < neg ? Sign::Negative : Sign::Positive});
  };
  for (VertexId v = 1; v < n; ++v) add(v, static_cast<VertexId>(rng() % v));
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (u(rng) < extra_density) add(a, b);
    }
  }
  return SignedGraph::from_edges(n, std::move(edges));
}

/// Dense signed adjacency matrix.
inline std::vector<std::vector<int>> adjacency_matrix(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = e.sign == Sign::Positive ? 1 : -1;
  return a;
}

/// Imbalanced edges inside `in` under colors `col` (vectors indexed by vertex).
inline int count_imbalanced(const SignedGraph& g, const std::vector<int>& in, const std::vector<int>& col) {
  int imb = 0;
  for (const auto& e : g.edges()) {
    if (!in[e.u] || !in[e.v]) continue;
    const bool same = col[e.u] == col[e.v];
    if ((e.sign == Sign::Positive) != same) ++imb;
  }
  return imb;
}

inline int count_edges(const SignedGraph& g, const std::vector<int>& in) {
  int m = 0;
  for (const auto& e : g.edges()) m += (in[e.u] && in[e.v]) ? 1 : 0;
  return m;
}

/// Connectivity of the induced subgraph by repeated relaxation.
inline bool brute_connected(const SignedGraph& g, const std::vector<int>& in) {
  const std::size_t n = g.vertex_count();
  std::vector<int> reach(n, 0);
  int first = -1;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v]) {
      first = static_cast<int>(v);
      break;
    }
  }
  if (first < 0) return true;
  reach[first] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : g.edges()) {
      if (!in[e.u] || !in[e.v]) continue;
      if (reach[e.u] != reach[e.v]) {
        reach[e.u] = reach[e.v] = 1;
        changed = true;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v] && !reach[v]) return false;
  }
  return true;
}

/// Frustration index of G[in] by trying every coloring of its vertices.
inline int brute_frustration(const SignedGraph& g, const std::vector<int>& in) {
  std::vector<VertexId> vs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) vs.push_back(v);
  }
  int best = 1 << 30;
  std::vector<int> col(g.vertex_count(), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    for (std::size_t i = 0; i < vs.size(); ++i) col[vs[i]] = (mask >> i) & 1;
    best = std::min(best, count_imbalanced(g, in, col));
  }
  return best;
}

inline int brute_frustration(const SignedGraph& g) {
  return brute_frustration(g, std::vector<int>(g.vertex_count(), 1));
}

/// Best (over colorings) scaled TBC a*m - b*imb of the whole graph.
inline std::int64_t brute_best_tbc(const SignedGraph& g, const Tolerance& tol) {
  const std::size_t n = g.vertex_count();
  std::vector<int> all(n, 1), col(n, 0);
  std::int64_t best = INT64_MIN;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) col[i] = (mask >> i) & 1;
    best = std::max(best, tol.num() * static_cast<std::int64_t>(g.edge_count()) - tol.den() * count_imbalanced(g, all, col));
  }
  return best;
}

inline Score brute_score(const SignedGraph& g, const Coloring& c, const Tolerance& tol) {
  std::vector<int> in(g.vertex_count(), 0), col(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    in[v] = c.selected(v) ? 1 : 0;
    col[v] = c.selected(v) ? c.color(v) : 0;
  }
  const int m = count_edges(g, in), imb = count_imbalanced(g, in, col);
  return {m, imb, tol.num() * m - tol.den() * imb};
}

inline bool solution_connected(const SignedGraph& g, const Solution& s) {
  std::vector<int> in(g.vertex_count(), 0);
  for (VertexId v : s.vertices) in[v] = 1;
  return brute_connected(g, in);
}

inline Score brute_solution_score(const SignedGraph& g, const Solution& s, const Tolerance& tol) {
  return brute_score(g, s.coloring(g.vertex_count()), tol);
}

/// Exact optimum of a subgraph problem by filtering all 2^n vertex subsets.
/// `value(m, L, size)` returns the objective or nullopt when infeasible.
struct BruteOptimum {
  std::int64_t value = INT64_MIN;
  std::vector<VertexId> vertices;
  bool found = false;
};

inline BruteOptimum brute_subgraph_optimum(const SignedGraph& g,
                                           const std::function<std::optional<std::int64_t>(int, int, int)>& value) {
  const std::size_t n = g.vertex_count();
  BruteOptimum best;
  std::vector<int> in(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    int size = 0;
    for (std::size_t i = 0; i < n; ++i) size += in[i] = (mask >> i) & 1;
    if (!brute_connected(g, in)) continue;
    auto v = value(count_edges(g, in), brute_frustration(g, in), size);
    if (!v) continue;
    std::vector<VertexId> vs;
    for (VertexId i = 0; i < n; ++i) {
      if (in[i]) vs.push_back(i);
    }
    const bool better = !best.found || *v > best.value ||
                        (*v == best.value && (vs.size() > best.vertices.size() ||
                                              (vs.size() == best.vertices.size() && vs < best.vertices)));
    if (better) {
      best = {*v, vs, true};
    }
  }
  return best;
}

/// max over x in {-1,0,1}^n \ {0} of x^T A x / x^T x, as (num, den).
inline std::pair<std::int64_t, std::int64_t> brute_polarity(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto a = adjacency_matrix(g);
  std::vector<int> x(n, -1);
  std::int64_t bn = 0, bd = 0;
  for (;;) {
    std::int64_t num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
      den += x[i] * x[i];
      for (std::size_t j = 0; j < n; ++j) num += x[i] * a[i][j] * x[j];
    }
    if (den > 0 && (bd == 0 || num * bd > bn * den)) {
      bn = num;
      bd = den;
    }
    std::size_t i = 0;
    while (i < n && x[i] == 1) x[i++] = -1;
    if (i == n) break;
    ++x[i];
  }
  return {bn, bd};
}

/// Project fixture path, configured by CMake.
inline std::string fixture(const std::string& name) { return std::string(TOLBAL_FIXTURE_DIR) + "/" + name; }

inline VertexId id_of(const SignedGraph& g, const std::string& label) { return *g.find_label(label); }

inline std::vector<std::string> labels_of(const SignedGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

}  // namespace testing
