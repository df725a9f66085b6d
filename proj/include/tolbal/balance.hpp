#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tolbal/rational.hpp"
#include "tolbal/signed_graph.hpp"

namespace tolbal {

/// Edge counts of a selection plus the integer score a*m_sel - b*imb for
/// beta = a/b. The tolerant balance count is scaled / a.
struct Score {
  std::int64_t m_sel = 0;
  std::int64_t imb = 0;
  std::int64_t scaled = 0;

  Rational value(const Tolerance& tol) const { return Rational(scaled, tol.num()); }
  friend bool operator==(const Score&, const Score&) = default;
};

Score make_score(std::int64_t m_sel, std::int64_t imb, const Tolerance& tol);

/// Partial two-coloring: color(v) is 0 or 1 for selected vertices, -1 otherwise.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n) : color_(n, -1) {}

  std::size_t universe() const noexcept { return color_.size(); }
  std::size_t selected_count() const noexcept { return selected_; }
  bool selected(VertexId v) const noexcept { return color_[v] >= 0; }
  int color(VertexId v) const noexcept { return color_[v]; }

  void set(VertexId v, int c);
  void unset(VertexId v);
  void clear();

  std::vector<VertexId> selected_vertices() const;

 private:
  std::vector<std::int8_t> color_;
  std::size_t selected_ = 0;
};

/// Incident edges of x into the selection, split by sign and by whether the
/// neighbor's color matches `c` (the color x has or would get).
struct DeltaBreakdown {
  std::int64_t deg_in = 0;
  std::int64_t pos_same = 0;
  std::int64_t pos_diff = 0;
  std::int64_t neg_same = 0;
  std::int64_t neg_diff = 0;

  std::int64_t imbalanced() const noexcept { return pos_diff + neg_same; }
  std::int64_t imbalanced_if_flipped() const noexcept { return pos_same + neg_diff; }
};

DeltaBreakdown breakdown(const SignedGraph& g, const Coloring& col, VertexId x, int c);

/// From-scratch score of the selected subgraph.
Score tbc(const SignedGraph& g, const Coloring& col, const Tolerance& tol);

struct InsertDelta {
  DeltaBreakdown parts;
  std::int64_t scaled;
};

/// Score change of selecting x with color c. Throws if x is selected.
InsertDelta insert_delta(const SignedGraph& g, const Coloring& col, const Tolerance& tol, VertexId x, int c);
/// Score change of recoloring selected x. Throws if x is unselected.
std::int64_t flip_delta(const SignedGraph& g, const Coloring& col, const Tolerance& tol, VertexId x);
/// Score change of unselecting x. Throws if x is unselected, the only selected
/// vertex, or an articulation point of the selected subgraph.
std::int64_t delete_delta(const SignedGraph& g, const Coloring& col, const Tolerance& tol, VertexId x);

/// scaled >= 0, i.e. the coloring certifies beta-tolerance of a connected selection.
inline bool is_tolerant_balanced_witness(const Score& s) noexcept { return s.scaled >= 0; }

/// beta = 1/(m+1): any imbalanced edge drives the score negative.
Tolerance strict_tolerance(const SignedGraph& g);

/// Integer objective edge_w*m_sel - imb_w*imb - size_w*|S|, whose true value
/// is that divided by unit. Covers the plain count and the size-penalized
/// variant count - sigma*|S|.
struct Objective {
  std::int64_t edge_w = 1;
  std::int64_t imb_w = 1;
  std::int64_t size_w = 0;
  std::int64_t unit = 1;

  static Objective tbc(const Tolerance& tol);
  static Objective size_penalized(const Tolerance& tol, const Rational& sigma);

  std::int64_t evaluate(std::int64_t m_sel, std::int64_t imb, std::int64_t size) const;
  Rational value(std::int64_t scaled) const { return Rational(scaled, unit); }
};

}  // namespace tolbal
