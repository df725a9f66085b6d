#include "tolbal/two_pc.hpp"

#include <chrono>
#include <stdexcept>

namespace tolbal {

Rational polarity(const SignedGraph& g, const Solution& sol) {
  if (sol.empty()) throw std::invalid_argument("polarity of an empty solution");
  const Score s = rescore(g, sol, Tolerance(1, 1));
  return Rational(2 * (s.m_sel - 2 * s.imb), static_cast<std::int64_t>(sol.size()));
}

TwoPCResult solve_2pc(const SignedGraph& g, const SearchParams& params, const StopPolicy& stop) {
  const std::size_t n = g.vertex_count();
  TwoPCResult result;
  if (n == 0) return result;
  params.validate();

  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(derive_seed(params.seed, 0x325043ULL));
  std::vector<std::uint8_t> mask(n, 1);
  std::vector<std::int64_t> active_degree(n);
  for (VertexId v = 0; v < n; ++v) active_degree[v] = static_cast<std::int64_t>(g.degree(v));
  std::vector<VertexId> active_list(n);
  for (VertexId v = 0; v < n; ++v) active_list[v] = v;

  LocalSearch ls(g);
  ls.set_active(mask);

  // Cascading removal of active vertices with degree < rho.
  auto prune = [&](const Rational& rho) {
    std::vector<VertexId> queue;
    auto low = [&](VertexId v) { return static_cast<__int128>(active_degree[v]) * rho.den() < rho.num(); };
    for (VertexId v : active_list) {
      if (low(v)) {
        mask[v] = 0;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      const VertexId v = queue.back();
      queue.pop_back();
      for (const auto& a : g.neighbors(v)) {
        const VertexId w = a.vertex();
        if (!mask[w]) continue;
        --active_degree[w];
        if (low(w)) {
          mask[w] = 0;
          queue.push_back(w);
        }
      }
    }
    std::erase_if(active_list, [&](VertexId v) { return !mask[v]; });
    ls.set_active(mask);
  };

  SearchParams p = params;
  p.tol = Tolerance(1, 2);
  VertexId start = static_cast<VertexId>(rng.below(n));
  int stale = 0;
  bool have = false;
  for (;;) {
    if (have && stale >= stop.max_stale_restarts) break;
    if (stop.max_searches && result.searches >= *stop.max_searches) break;
    if (stop.wall_seconds &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >= *stop.wall_seconds) {
      result.timed_out = true;
      break;
    }
    p.size_penalty = Rational(checked_mul(9, result.rho.num()), checked_mul(10, result.rho.den()));
    p.seed = derive_seed(params.seed, start, static_cast<std::uint64_t>(result.searches));
    SearchOutcome out = ls.search(start, p);
    ++result.searches;
    const Rational rho_hat = polarity(g, out.solution);
    if (!have || rho_hat > result.rho) {
      have = true;
      stale = 0;
      ++result.improvements;
      result.rho = rho_hat;
      result.solution = std::move(out.solution);
      prune(result.rho);
      if (active_list.empty()) break;
      if (!mask[start]) start = active_list[rng.below(active_list.size())];
    } else {
      ++stale;
      start = active_list[rng.below(active_list.size())];
    }
  }
  result.active_vertices = active_list.size();
  return result;
}

}  // namespace tolbal
