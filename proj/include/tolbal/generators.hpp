#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tolbal/signed_graph.hpp"

namespace tolbal {

struct TimedEdge {
  std::string u;
  std::string v;
  std::int64_t time;
};

/// Reads `u v [w] t` lines; the last column is the timestamp. Comments as in
/// the edge-list format.
std::vector<TimedEdge> parse_timed_edges(std::istream& in);

struct TemporalThresholdResult {
  SignedGraph graph;
  /// Edges with time >= threshold are positive, older ones negative.
  std::int64_t threshold = 0;
  double achieved_neg_ratio = 0.0;
  std::optional<std::string> warning;
};

/// Picks the threshold whose negative-edge ratio is closest to the target
/// (binary search over sorted timestamps). Repeated pairs keep the sign of
/// their latest timestamp. Warns when the best ratio is more than 0.01 away.
TemporalThresholdResult generate_temporal_threshold(const std::vector<TimedEdge>& edges, double target_neg_ratio);

struct PlantedParams {
  std::size_t n = 0;
  std::size_t m = 0;
  double planted_fraction = 0.3;
  double flip_noise = 0.0;
  std::uint64_t seed = 0;
};

struct PlantedInstance {
  SignedGraph graph;
  VertexSet planted;
  std::size_t flipped_edges = 0;
  std::uint64_t seed = 0;
};

/// Plants a connected balanced subgraph on floor(fraction * n) vertices (two
/// random sides, positive inside a side, negative across), flips each planted
/// edge with probability flip_noise, and fills the remaining edge budget with
/// random-sign background edges touching at least one background vertex.
/// Planted vertices receive a share of the edges proportional to the fraction.
PlantedInstance generate_planted(const PlantedParams& params);

/// JSON sidecar: {"planted": [...labels], "flipped_edges": k, "seed": s}.
std::string planted_sidecar_json(const PlantedInstance& inst);

}  // namespace tolbal
