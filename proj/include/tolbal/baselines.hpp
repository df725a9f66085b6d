#pragma once

#include <cstdint>
#include <vector>

#include "tolbal/solution.hpp"

namespace tolbal {

/// Which subgraph a baseline reports among its candidates:
/// P3 = most vertices with a non-negative score, P4 = most edges with a
/// non-negative score, P5 = highest score.
enum class Target { P3, P4, P5 };

/// Summary used to rank candidate subgraphs.
struct CandidateStats {
  std::int64_t scaled = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  VertexId min_vertex = 0;
};

/// True if `a` should be reported instead of `b` under `target`.
bool ranks_before(Target target, const CandidateStats& a, const CandidateStats& b);

struct PeelStep {
  VertexId vertex;
  std::int64_t delta;  // score change of removing it from what was left
};

struct GrestResult {
  Solution solution;
  Coloring coloring;               // spanning-forest coloring of the whole graph
  std::vector<PeelStep> peel;      // deletion order
};

/// Colors the graph by a randomized DFS forest, peels vertices greedily under
/// that coloring, then replays the deletions backwards with union-find and
/// reports the best connected piece seen.
GrestResult grest(const SignedGraph& g, const Tolerance& tol, Target target, std::uint64_t seed);

struct EigenResult {
  Solution solution;
  bool converged = false;
  int iterations = 0;
  double eigenvalue = 0.0;
  std::vector<double> vector;  // unit max-norm
};

/// Power iteration for the top eigenvector of the signed adjacency, then
/// Bernoulli(|v_i|) selection colored by sign, split into components.
EigenResult eigen_rounding(const SignedGraph& g, const Tolerance& tol, Target target, std::uint64_t seed,
                           int max_iterations = 1000, double rel_tol = 1e-8);

}  // namespace tolbal
