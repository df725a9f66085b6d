#include "tolbal/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tolbal/detail/indexed_heap.hpp"
#include "tolbal/rng.hpp"
#include "tolbal/structure.hpp"

namespace tolbal {

bool ranks_before(Target target, const CandidateStats& a, const CandidateStats& b) {
  const bool fa = a.scaled >= 0, fb = b.scaled >= 0;
  switch (target) {
    case Target::P3:
      if (fa != fb) return fa;
      if (a.vertices != b.vertices) return a.vertices > b.vertices;
      break;
    case Target::P4:
      if (fa != fb) return fa;
      if (a.edges != b.edges) return a.edges > b.edges;
      break;
    case Target::P5:
      break;
  }
  if (a.scaled != b.scaled) return a.scaled > b.scaled;
  if (a.vertices != b.vertices) return a.vertices > b.vertices;
  return a.min_vertex < b.min_vertex;
}

namespace {

bool imbalanced(const Adjacent& a, int cu, int cw) { return a.positive() != (cu == cw); }

Coloring forest_coloring(const SignedGraph& g, Rng& rng) {
  const std::size_t n = g.vertex_count();
  Coloring col(n);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  struct Item {
    VertexId v;
    int color;
  };
  std::vector<Item> stack;
  std::vector<Adjacent> buf;
  for (VertexId root : order) {
    if (col.selected(root)) continue;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      const Item it = stack.back();
      stack.pop_back();
      if (col.selected(it.v)) continue;
      col.set(it.v, it.color);
      auto nb = g.neighbors(it.v);
      buf.assign(nb.begin(), nb.end());
      for (std::size_t i = buf.size(); i > 1; --i) std::swap(buf[i - 1], buf[rng.below(i)]);
      for (const auto& a : buf) {
        if (!col.selected(a.vertex())) stack.push_back({a.vertex(), a.positive() ? it.color : 1 - it.color});
      }
    }
  }
  return col;
}

struct UnionFind {
  std::vector<VertexId> parent;
  std::vector<CandidateStats> stats;

  explicit UnionFind(std::size_t n) : parent(n), stats(n) {}

  VertexId find(VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
};

// Connected piece of `present` containing `seed`.
Solution component_of(const SignedGraph& g, const Coloring& col, const std::vector<std::uint8_t>& present, VertexId seed,
                      const Tolerance& tol) {
  VertexSet set(g.vertex_count());
  set.insert(seed);
  std::vector<VertexId> stack{seed};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& a : g.neighbors(v)) {
      if (present[a.vertex()] && set.insert(a.vertex())) stack.push_back(a.vertex());
    }
  }
  return Solution::restrict(g, col, set, tol);
}

}  // namespace

GrestResult grest(const SignedGraph& g, const Tolerance& tol, Target target, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  GrestResult out;
  if (n == 0) return out;
  Rng rng(derive_seed(seed, 0x6772657374ULL));
  out.coloring = forest_coloring(g, rng);
  const Coloring& col = out.coloring;
  const std::int64_t a = tol.num(), b = tol.den();

  // Peel: the removal delta of v is b*imb(v) - a*deg(v) over what remains.
  std::vector<std::int64_t> deg(n), imb(n);
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::int64_t>(g.degree(v));
    for (const auto& e : g.neighbors(v)) imb[v] += imbalanced(e, col.color(v), col.color(e.vertex())) ? 1 : 0;
  }
  detail::IndexedMaxHeap heap(n);
  for (VertexId v = 0; v < n; ++v) heap.set(v, checked_mul(b, imb[v]) - checked_mul(a, deg[v]));
  std::vector<std::uint8_t> alive(n, 1);
  out.peel.reserve(n);
  while (!heap.empty()) {
    const auto top = heap.top();
    const VertexId v = top.id;
    heap.erase(v);
    alive[v] = 0;
    out.peel.push_back({v, top.key});
    for (const auto& e : g.neighbors(v)) {
      const VertexId w = e.vertex();
      if (!alive[w]) continue;
      --deg[w];
      if (imbalanced(e, col.color(v), col.color(w))) --imb[w];
      heap.set(w, b * imb[w] - a * deg[w]);
    }
  }

  // Reverse replay.
  UnionFind uf(n);
  std::vector<std::uint8_t> present(n, 0);
  bool have = false;
  CandidateStats best;
  std::size_t best_step = 0;
  for (std::size_t step = n; step-- > 0;) {
    const VertexId v = out.peel[step].vertex;
    present[v] = 1;
    uf.parent[v] = v;
    uf.stats[v] = {0, 1, 0, v};
    for (const auto& e : g.neighbors(v)) {
      const VertexId w = e.vertex();
      if (!present[w]) continue;
      VertexId rv = uf.find(v), rw = uf.find(w);
      const std::int64_t gain = imbalanced(e, col.color(v), col.color(w)) ? a - b : a;
      if (rv != rw) {
        auto& sv = uf.stats[rv];
        const auto& sw = uf.stats[rw];
        sv.scaled += sw.scaled;
        sv.vertices += sw.vertices;
        sv.edges += sw.edges;
        sv.min_vertex = std::min(sv.min_vertex, sw.min_vertex);
        uf.parent[rw] = rv;
      }
      auto& s = uf.stats[rv];
      s.scaled += gain;
      s.edges += 1;
    }
    const CandidateStats& cur = uf.stats[uf.find(v)];
    if (!have || ranks_before(target, cur, best)) {
      have = true;
      best = cur;
      best_step = step;
    }
  }

  std::fill(present.begin(), present.end(), 0);
  for (std::size_t i = best_step; i < n; ++i) present[out.peel[i].vertex] = 1;
  out.solution = component_of(g, col, present, out.peel[best_step].vertex, tol);
  return out;
}

EigenResult eigen_rounding(const SignedGraph& g, const Tolerance& tol, Target target, std::uint64_t seed,
                           int max_iterations, double rel_tol) {
  const std::size_t n = g.vertex_count();
  EigenResult out;
  if (n == 0) return out;
  Rng rng(derive_seed(seed, 0x656967656eULL));

  // Shifting by (D+1)/2 makes the top algebraic eigenvalue dominant in modulus.
  const double shift = (static_cast<double>(g.max_degree()) + 1.0) / 2.0;
  std::vector<double> x(n), y(n);
  auto normalize = [](std::vector<double>& v) {
    double s = 0;
    for (double e : v) s += e * e;
    s = std::sqrt(s);
    if (s > 0) for (double& e : v) e /= s;
    return s;
  };
  for (double& e : x) e = 2.0 * rng.uniform() - 1.0;
  normalize(x);
  double lambda = 0, previous = 0;
  for (int it = 1; it <= max_iterations; ++it) {
    for (VertexId v = 0; v < n; ++v) {
      double acc = shift * x[v];
      for (const auto& a : g.neighbors(v)) acc += a.positive() ? x[a.vertex()] : -x[a.vertex()];
      y[v] = acc;
    }
    double rq = 0;
    for (std::size_t i = 0; i < n; ++i) rq += x[i] * y[i];
    lambda = rq - shift;
    out.iterations = it;
    if (normalize(y) == 0) break;
    x.swap(y);
    if (it > 1 && std::abs(lambda - previous) <= rel_tol * std::max(1.0, std::abs(lambda))) {
      out.converged = true;
      break;
    }
    previous = lambda;
  }
  out.eigenvalue = lambda;

  double inf = 0;
  for (double e : x) inf = std::max(inf, std::abs(e));
  if (inf > 0) for (double& e : x) e /= inf;
  out.vector = x;

  Coloring col(n);
  for (VertexId v = 0; v < n; ++v) {
    if (x[v] != 0.0 && rng.uniform() < std::abs(x[v])) {
      col.set(v, x[v] > 0 ? 0 : 1);
    }
  }
  // Components of the selection, scored on the fly; only the winner is materialized.
  std::vector<std::uint32_t> comp(n, 0);
  std::vector<VertexId> stack;
  bool have = false;
  CandidateStats best;
  VertexId best_root = 0;
  const std::int64_t a = tol.num(), b = tol.den();
  std::uint32_t next_id = 1;
  for (VertexId r = 0; r < n; ++r) {
    if (!col.selected(r) || comp[r] != 0) continue;
    const std::uint32_t id = next_id++;
    CandidateStats st{0, 0, 0, r};
    comp[r] = id;
    stack.assign(1, r);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++st.vertices;
      for (const auto& e : g.neighbors(v)) {
        const VertexId w = e.vertex();
        if (!col.selected(w)) continue;
        if (w > v) {
          ++st.edges;
          st.scaled += imbalanced(e, col.color(v), col.color(w)) ? a - b : a;
        }
        if (comp[w] == 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    if (!have || ranks_before(target, st, best)) {
      have = true;
      best = st;
      best_root = r;
    }
  }
  if (have) {
    std::vector<std::uint8_t> present(n, 0);
    for (VertexId v = 0; v < n; ++v) present[v] = comp[v] == comp[best_root] ? 1 : 0;
    out.solution = component_of(g, col, present, best_root, tol);
  }
  return out;
}

}  // namespace tolbal
