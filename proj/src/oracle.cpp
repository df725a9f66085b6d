#include "tolbal/oracle.hpp"

#include <bit>
#include <string>
#include <vector>

#include "tolbal/structure.hpp"

namespace tolbal {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(VertexId v) { return Mask{1} << v; }

struct Masks {
  std::vector<Mask> pos, neg, all;
};

Masks masks_of(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  Masks m{std::vector<Mask>(n, 0), std::vector<Mask>(n, 0), std::vector<Mask>(n, 0)};
  for (const auto& e : g.edges()) {
    auto& side = e.sign == Sign::Positive ? m.pos : m.neg;
    side[e.u] |= bit(e.v);
    side[e.v] |= bit(e.u);
  }
  for (std::size_t v = 0; v < n; ++v) m.all[v] = m.pos[v] | m.neg[v];
  return m;
}

std::int64_t edges_within(const Masks& m, Mask set) {
  std::int64_t twice = 0;
  for (Mask s = set; s; s &= s - 1) twice += std::popcount(m.all[std::countr_zero(s)] & set);
  return twice / 2;
}

std::int64_t imbalance_of(const Masks& m, Mask set, Mask ones) {
  std::int64_t twice = 0;
  for (Mask s = set; s; s &= s - 1) {
    const int u = std::countr_zero(s);
    const Mask same = set & (((ones >> u) & 1) ? ones : ~ones);
    const Mask diff = set & ~same;
    twice += std::popcount(m.pos[u] & diff) + std::popcount(m.neg[u] & same);
  }
  return twice / 2;
}

struct MinImbalance {
  std::int64_t imb;
  Mask ones;  // vertices colored 1
};

// Gray-code walk over colorings of G[set] with its lowest vertex fixed to 0.
MinImbalance min_imbalance(const Masks& m, Mask set, bool stop_at_zero) {
  std::vector<int> verts;
  for (Mask s = set; s; s &= s - 1) verts.push_back(std::countr_zero(s));
  Mask ones = 0;
  std::int64_t imb = imbalance_of(m, set, 0);
  MinImbalance best{imb, 0};
  if (verts.size() <= 1 || (stop_at_zero && imb == 0)) return best;
  const std::uint64_t steps = std::uint64_t{1} << (verts.size() - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int u = verts[1 + std::countr_zero(i)];
    const Mask same = (set & (((ones >> u) & 1) ? ones : ~ones)) & ~bit(static_cast<VertexId>(u));
    const Mask diff = set & ~same & ~bit(static_cast<VertexId>(u));
    const std::int64_t here = std::popcount(m.pos[u] & diff) + std::popcount(m.neg[u] & same);
    const std::int64_t deg = std::popcount(m.all[u] & set);
    imb += deg - 2 * here;
    ones ^= bit(static_cast<VertexId>(u));
    if (imb < best.imb) {
      best = {imb, ones};
      if (stop_at_zero && imb == 0) break;
    }
  }
  return best;
}

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw SizeGuardError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the limit of " +
                         std::to_string(limit));
  }
}

// A before B iff the smallest element of the symmetric difference is in A.
bool lex_before(Mask a, Mask b) { return a != b && ((a ^ b) & a & -(a ^ b)) != 0; }

Solution make_solution(Mask set, Mask ones, std::int64_t m_sel, std::int64_t imb, const Tolerance& tol) {
  Solution sol;
  for (Mask s = set; s; s &= s - 1) {
    const auto v = static_cast<VertexId>(std::countr_zero(s));
    sol.vertices.push_back(v);
    sol.colors.push_back(static_cast<std::uint8_t>((ones >> v) & 1));
  }
  sol.score = make_score(m_sel, imb, tol);
  return sol;
}

ExactResult exact_subgraph(const SignedGraph& g, const Tolerance& tol, Problem which) {
  const std::size_t n = g.vertex_count();
  guard(n, 15, "exact subgraph search");
  const Masks m = masks_of(g);
  const std::int64_t a = tol.num(), b = tol.den();
  const bool balanced_only = which == Problem::P1 || which == Problem::P2;
  const bool by_vertices = which == Problem::P1 || which == Problem::P3;
  const bool by_edges = which == Problem::P2 || which == Problem::P4;

  bool found = false;
  std::int64_t best_obj = 0;
  Mask best_set = 0, best_ones = 0;
  std::int64_t best_m = 0, best_l = 0;

  auto visit = [&](Mask set) {
    const std::int64_t size = std::popcount(set);
    const std::int64_t m_sel = edges_within(m, set);
    // Cheap upper bounds on this subset's objective.
    std::int64_t bound = by_vertices ? size : by_edges ? m_sel : a * m_sel;
    const int best_size = std::popcount(best_set);
    if (found && (bound < best_obj || (bound == best_obj && size < best_size))) return;
    const MinImbalance mi = min_imbalance(m, set, balanced_only);
    const std::int64_t scaled = a * m_sel - b * mi.imb;
    if (balanced_only ? mi.imb != 0 : (which != Problem::P5 && scaled < 0)) return;
    const std::int64_t obj = which == Problem::P5 ? scaled : bound;
    const bool better = !found || obj > best_obj ||
                        (obj == best_obj && (size > best_size || (size == best_size && lex_before(set, best_set))));
    if (better) {
      found = true;
      best_obj = obj;
      best_set = set;
      best_ones = mi.ones;
      best_m = m_sel;
      best_l = mi.imb;
    }
  };

  // Each connected subset is generated once, from its smallest vertex.
  auto extend = [&](auto&& self, Mask sub, Mask ext, Mask above, Mask near) -> void {
    visit(sub);
    while (ext) {
      const Mask w = ext & -ext;
      ext &= ext - 1;
      const int wi = std::countr_zero(w);
      const Mask exclusive = m.all[wi] & ~sub & ~near & above;
      self(self, sub | w, ext | exclusive, above, near | m.all[wi]);
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    const Mask above = ~((bit(v) << 1) - 1);
    extend(extend, bit(v), m.all[v] & above, above, m.all[v] | bit(v));
  }

  ExactResult r;
  if (!found) return r;
  r.found = true;
  r.solution = make_solution(best_set, best_ones, best_m, best_l, tol);
  r.frustration = best_l;
  r.objective = which == Problem::P5 ? Rational(best_obj, a) : Rational(best_obj);
  return r;
}

ExactResult exact_polarity(const SignedGraph& g, const Tolerance& tol) {
  const std::size_t n = g.vertex_count();
  guard(n, 10, "exact polarity search");
  ExactResult r;
  if (n == 0) return r;
  const Masks m = masks_of(g);
  std::vector<int> x(n, 0);
  std::int64_t best_num = 0, best_den = 1;
  Mask best_set = 0, best_ones = 0;
  std::int64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::int64_t code = 1; code < total; ++code) {
    // digit 0 -> 0, 1 -> +1, 2 -> -1
    std::int64_t c = code;
    Mask set = 0, ones = 0;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      const int d = static_cast<int>(c % 3);
      if (d != 0) set |= bit(static_cast<VertexId>(i));
      if (d == 2) ones |= bit(static_cast<VertexId>(i));
    }
    // x and -x are equivalent: keep the one whose lowest support vertex is +1
    if (ones & set & -set) continue;
    const std::int64_t m_sel = edges_within(m, set);
    const std::int64_t imb = imbalance_of(m, set, ones);
    const std::int64_t num = 2 * (m_sel - 2 * imb);
    const std::int64_t den = std::popcount(set);
    const std::int64_t lhs = num * best_den, rhs = best_num * den;
    const bool better = !r.found || lhs > rhs ||
                        (lhs == rhs && (den > best_den || (den == best_den && lex_before(set, best_set))));
    if (better) {
      r.found = true;
      best_num = num;
      best_den = den;
      best_set = set;
      best_ones = ones;
    }
  }
  const std::int64_t m_sel = edges_within(m, best_set);
  const std::int64_t imb = imbalance_of(m, best_set, best_ones);
  r.solution = make_solution(best_set, best_ones, m_sel, imb, tol);
  r.frustration = imb;
  r.objective = Rational(best_num, best_den);
  return r;
}

}  // namespace

std::int64_t frustration_index(const SignedGraph& g, std::size_t max_n) {
  return exact_tbi(g, Tolerance(1, 1), max_n).score.imb;
}

TbiResult exact_tbi(const SignedGraph& g, const Tolerance& tol, std::size_t max_n) {
  const std::size_t n = g.vertex_count();
  guard(n, std::min<std::size_t>(max_n, 63), "exact frustration index");
  const Masks m = masks_of(g);
  TbiResult r;
  r.coloring = Coloring(n);
  std::int64_t total = 0;
  for (const auto& comp : connected_components(g)) {
    Mask set = 0;
    for (VertexId v : comp.vertices()) set |= bit(v);
    const MinImbalance mi = min_imbalance(m, set, false);
    total += mi.imb;
    for (VertexId v : comp.vertices()) r.coloring.set(v, static_cast<int>((mi.ones >> v) & 1));
  }
  r.score = make_score(static_cast<std::int64_t>(g.edge_count()), total, tol);
  return r;
}

ExactResult exact_problem(const SignedGraph& g, const Tolerance& tol, Problem which) {
  return which == Problem::P6 ? exact_polarity(g, tol) : exact_subgraph(g, tol, which);
}

}  // namespace tolbal
