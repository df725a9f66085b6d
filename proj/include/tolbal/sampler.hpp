#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tolbal/local_search.hpp"
#include "tolbal/rational.hpp"
#include "tolbal/solution.hpp"

namespace tolbal {

enum class SamplerMode { Sampled, Exhaustive };

struct SamplerParams {
  /// Sampling stops once the explored sizes add up to C * |V|.
  Rational C{3, 2};
  SearchParams search;
  SamplerMode mode = SamplerMode::Sampled;
  /// Worker threads; 0 = hardware concurrency. Results do not depend on it.
  unsigned threads = 1;
  /// Stop starting new searches after this much wall time (result flagged).
  std::optional<std::chrono::duration<double>> timeout;
};

struct TraceEntry {
  VertexId start;
  std::int64_t scaled;
  std::size_t vertices;
  std::size_t edges;
};

struct SamplerResult {
  Solution best;
  std::vector<TraceEntry> trace;
  std::size_t total_size = 0;
  bool timed_out = false;
};

/// Seed of the search started from vertex s; shared by both modes so an
/// exhaustive run sees every search a sampled run can make.
inline std::uint64_t search_seed(std::uint64_t base, VertexId s) { return derive_seed(base, s); }

/// Region-based sampling (or one search per vertex in exhaustive mode).
SamplerResult solve(const SignedGraph& g, const SamplerParams& params);

struct SolutionMetrics {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::int64_t imbalanced = 0;
  Rational phi_hat{0};
  bool feasible = true;
  /// 2 * (balanced - imbalanced) / |V|, 0 for an empty solution.
  Rational polarity{0};
};

SolutionMetrics solution_report(const SignedGraph& g, const Solution& sol, const Tolerance& tol);

}  // namespace tolbal
