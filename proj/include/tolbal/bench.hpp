#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tolbal/rational.hpp"
#include "tolbal/sampler.hpp"

namespace tolbal {

/// Parses a tolerance grid: either "2^-i/2,i=LO..HI" or a comma list of
/// fractions. Irrational grid points are rounded to a denominator of 10^6.
std::vector<Tolerance> parse_beta_grid(const std::string& text);

/// 2^(-i/2) as a tolerance.
Tolerance beta_power_half(int i);

struct HypothesisMetrics {
  /// Largest r such that half of the optimum's vertices start searches
  /// reaching r * optimum; empty when the optimum is not positive.
  std::optional<Rational> h1;
  /// max over starts b of |V_b| / min{|V_a| : score_a >= score_b}.
  Rational h2{1};
  std::size_t opt_vertices = 0;
};

/// `per_start` holds one trace entry per start vertex (exhaustive run), and
/// `opt` the best solution among them.
HypothesisMetrics hypothesis_metrics(const std::vector<TraceEntry>& per_start, const Solution& opt);

struct SampleStats {
  double min = 0, max = 0, mean = 0;
  double variance = 0;  // sample variance (n - 1)
  std::size_t count = 0;
};

SampleStats sample_stats(const std::vector<double>& xs);

/// Least-squares slope of log(y) against log(x); empty with fewer than two
/// distinct x values or a non-positive entry.
std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Worker count: the requested value (0 = hardware concurrency), capped by
/// the TOLBAL_THREADS environment variable when set.
unsigned worker_count(unsigned requested = 0);

}  // namespace tolbal
