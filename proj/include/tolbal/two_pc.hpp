#pragma once

#include <cstdint>
#include <optional>

#include "tolbal/local_search.hpp"
#include "tolbal/rational.hpp"
#include "tolbal/solution.hpp"

namespace tolbal {

/// x^T A x / x^T x for x = +1 on color 0, -1 on color 1, 0 elsewhere, which
/// equals 2 * (balanced - imbalanced edges) / |V|. Throws on an empty solution.
Rational polarity(const SignedGraph& g, const Solution& sol);

struct StopPolicy {
  /// Stop after this many consecutive searches without improvement.
  int max_stale_restarts = 20;
  std::optional<double> wall_seconds;
  /// Hard cap on the number of searches.
  std::optional<std::int64_t> max_searches;
};

struct TwoPCResult {
  Solution solution;
  Rational rho{0};
  std::int64_t searches = 0;
  std::int64_t improvements = 0;
  std::size_t active_vertices = 0;  // after the last pruning
  bool timed_out = false;
};

/// Repeated size-penalized searches (beta = 1/2, sigma = 0.9 * rho) that keep
/// the start vertex after an improvement, resample it otherwise, and prune
/// vertices whose degree among active vertices drops below rho.
/// `params.tol` and `params.size_penalty` are overridden.
TwoPCResult solve_2pc(const SignedGraph& g, const SearchParams& params, const StopPolicy& stop = {});

}  // namespace tolbal
