#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tolbal {

using VertexId = std::uint32_t;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// Canonical undirected edge, u < v.
struct SignedEdge {
  VertexId u;
  VertexId v;
  Sign sign;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// One CSR slot: neighbor id and edge sign packed into 32 bits.
class Adjacent {
 public:
  constexpr Adjacent() = default;
  constexpr Adjacent(VertexId v, Sign s) noexcept : bits_((v << 1) | (s == Sign::Negative ? 1u : 0u)) {}

  constexpr VertexId vertex() const noexcept { return bits_ >> 1; }
  constexpr Sign sign() const noexcept { return (bits_ & 1u) ? Sign::Negative : Sign::Positive; }
  constexpr bool positive() const noexcept { return (bits_ & 1u) == 0; }
  /// 0 for positive, 1 for negative; handy as an array index.
  constexpr unsigned sign_index() const noexcept { return bits_ & 1u; }

 private:
  std::uint32_t bits_ = 0;
};

/// Immutable simple undirected signed graph in CSR layout.
///
/// Vertex ids are dense (0..n-1). Each vertex keeps its original label;
/// when every label is an integer the ids follow numeric label order.
/// Both directions of every edge are stored in the adjacency so that
/// neighborhood scans are O(deg); edges() keeps one canonical copy.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Builds from canonical or non-canonical edges. Throws std::invalid_argument
  /// on self-loops, out-of-range ids or duplicate pairs.
  static SignedGraph from_edges(std::size_t n, std::vector<SignedEdge> edges,
                                std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t negative_edge_count() const noexcept { return negative_edges_; }
  /// |E-| / |E|, 0 for an edgeless graph.
  double negative_ratio() const noexcept;
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Adjacent> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::span<const SignedEdge> edges() const noexcept { return edges_; }

  std::optional<Sign> sign_between(VertexId u, VertexId v) const noexcept;

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  /// True when every label parses as a (signed) integer.
  bool numeric_labels() const noexcept { return numeric_labels_; }
  std::optional<VertexId> find_label(const std::string& label) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Adjacent> adjacency_;
  std::vector<SignedEdge> edges_;
  std::vector<std::string> labels_;
  std::size_t negative_edges_ = 0;
  std::size_t max_degree_ = 0;
  bool numeric_labels_ = true;
};

/// Subset of vertex ids: membership bitmap plus insertion-ordered list.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : member_(universe, 0) {}
  static VertexSet of(std::size_t universe, std::span<const VertexId> vertices);
  static VertexSet all(std::size_t universe);

  bool contains(VertexId v) const noexcept { return v < member_.size() && member_[v] != 0; }
  /// Returns false if already present.
  bool insert(VertexId v);
  void clear() noexcept;

  std::size_t size() const noexcept { return list_.size(); }
  bool empty() const noexcept { return list_.empty(); }
  std::size_t universe() const noexcept { return member_.size(); }
  std::span<const VertexId> vertices() const noexcept { return list_; }
  std::vector<VertexId> sorted() const;

 private:
  std::vector<std::uint8_t> member_;
  std::vector<VertexId> list_;
};

/// Number of edges with both endpoints inside `set`.
std::size_t induced_edge_count(const SignedGraph& g, const VertexSet& set);

}  // namespace tolbal
