#include "tolbal/balance.hpp"

#include <algorithm>
#include <stdexcept>

#include "tolbal/structure.hpp"

namespace tolbal {

Score make_score(std::int64_t m_sel, std::int64_t imb, const Tolerance& tol) {
  return {m_sel, imb, checked_mul(tol.num(), m_sel) - checked_mul(tol.den(), imb)};
}

void Coloring::set(VertexId v, int c) {
  if (c != 0 && c != 1) throw std::invalid_argument("color must be 0 or 1");
  if (color_[v] < 0) ++selected_;
  color_[v] = static_cast<std::int8_t>(c);
}

void Coloring::unset(VertexId v) {
  if (color_[v] >= 0) --selected_;
  color_[v] = -1;
}

void Coloring::clear() {
  std::fill(color_.begin(), color_.end(), std::int8_t{-1});
  selected_ = 0;
}

std::vector<VertexId> Coloring::selected_vertices() const {
  std::vector<VertexId> out;
  out.reserve(selected_);
  for (std::size_t v = 0; v < color_.size(); ++v) {
    if (color_[v] >= 0) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

DeltaBreakdown breakdown(const SignedGraph& g, const Coloring& col, VertexId x, int c) {
  DeltaBreakdown d;
  for (const auto& a : g.neighbors(x)) {
    const VertexId w = a.vertex();
    if (!col.selected(w)) continue;
    ++d.deg_in;
    const bool same = col.color(w) == c;
    if (a.positive()) {
      (same ? d.pos_same : d.pos_diff) += 1;
    } else {
      (same ? d.neg_same : d.neg_diff) += 1;
    }
  }
  return d;
}

Score tbc(const SignedGraph& g, const Coloring& col, const Tolerance& tol) {
  std::int64_t m = 0, imb = 0;
  for (const auto& e : g.edges()) {
    if (!col.selected(e.u) || !col.selected(e.v)) continue;
    ++m;
    const bool same = col.color(e.u) == col.color(e.v);
    if ((e.sign == Sign::Positive) != same) ++imb;
  }
  return make_score(m, imb, tol);
}

InsertDelta insert_delta(const SignedGraph& g, const Coloring& col, const Tolerance& tol, VertexId x, int c) {
  if (col.selected(x)) throw std::invalid_argument("insert_delta: vertex already selected");
  auto d = breakdown(g, col, x, c);
  return {d, checked_mul(tol.num(), d.deg_in) - checked_mul(tol.den(), d.imbalanced())};
}

std::int64_t flip_delta(const SignedGraph& g, const Coloring& col, const Tolerance& tol, VertexId x) {
  if (!col.selected(x)) throw std::invalid_argument("flip_delta: vertex not selected");
  auto d = breakdown(g, col, x, col.color(x));
  return checked_mul(tol.den(), d.imbalanced() - d.imbalanced_if_flipped());
}

std::int64_t delete_delta(const SignedGraph& g, const Coloring& col, const Tolerance& tol, VertexId x) {
  if (!col.selected(x)) throw std::invalid_argument("delete_delta: vertex not selected");
  if (col.selected_count() <= 1) throw std::invalid_argument("delete_delta: cannot delete the last vertex");
  const auto members = col.selected_vertices();
  ArticulationScanner scanner(g.vertex_count());
  scanner.scan(g, members, [&](VertexId v) { return col.selected(v); });
  if (scanner.is_cut(x)) throw std::invalid_argument("delete_delta: vertex is an articulation point");
  auto d = breakdown(g, col, x, col.color(x));
  return checked_mul(tol.den(), d.imbalanced()) - checked_mul(tol.num(), d.deg_in);
}

Tolerance strict_tolerance(const SignedGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("strict tolerance needs at least one edge");
  return Tolerance(1, static_cast<std::int64_t>(g.edge_count()) + 1);
}

Objective Objective::tbc(const Tolerance& tol) { return {tol.num(), tol.den(), 0, tol.num()}; }

Objective Objective::size_penalized(const Tolerance& tol, const Rational& sigma) {
  if (sigma.num() < 0) throw std::invalid_argument("size penalty must be non-negative");
  const std::int64_t sd = sigma.den();
  return {checked_mul(tol.num(), sd), checked_mul(tol.den(), sd), checked_mul(tol.num(), sigma.num()),
          checked_mul(tol.num(), sd)};
}

std::int64_t Objective::evaluate(std::int64_t m_sel, std::int64_t imb, std::int64_t size) const {
  return checked_mul(edge_w, m_sel) - checked_mul(imb_w, imb) - checked_mul(size_w, size);
}

}  // namespace tolbal
