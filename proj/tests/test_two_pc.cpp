#include <doctest.h>

#include "support.hpp"
#include "tolbal/oracle.hpp"
#include "tolbal/two_pc.hpp"

using namespace testing;

namespace {

Solution solution_of(const SignedGraph& g, const Coloring& c) { return Solution::from_coloring(g, c, Tolerance(1, 2)); }

SearchParams seeded(std::uint64_t seed) {
  SearchParams p;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("polarity examples") {
  auto edge = make_graph(2, {{0, 1, 1}});
  Coloring c(2);
  c.set(0, 0);
  c.set(1, 0);
  CHECK(polarity(edge, solution_of(edge, c)) == Rational(1));
  auto tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  Coloring t(3);
  for (VertexId v = 0; v < 3; ++v) t.set(v, 0);
  CHECK(polarity(tri, solution_of(tri, t)) == Rational(2));
  CHECK_THROWS(polarity(tri, Solution{}));
}

TEST_CASE("polarity equals the quadratic form") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rng() % 8;
    auto g = random_graph(rng, n, 0.5, 0.5);
    const auto a = adjacency_matrix(g);
    Coloring c(n);
    std::vector<int> x(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      const int d = static_cast<int>(rng() % 3);
      if (d == 0) continue;
      c.set(v, d == 1 ? 0 : 1);
      x[v] = d == 1 ? 1 : -1;
    }
    if (c.selected_count() == 0) {
      c.set(0, 0);
      x[0] = 1;
    }
    std::int64_t q = 0, s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      s += x[i] * x[i];
      for (std::size_t j = 0; j < n; ++j) q += x[i] * a[i][j] * x[j];
    }
    // polarity works on any selection; connectivity is not needed here
    Solution sol;
    for (VertexId v = 0; v < n; ++v) {
      if (!c.selected(v)) continue;
      sol.vertices.push_back(v);
      sol.colors.push_back(static_cast<std::uint8_t>(c.color(v)));
    }
    CHECK(polarity(g, sol) == Rational(q, s));
  }
}

TEST_CASE("positive clique converges to its polarity") {
  auto k4 = make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  auto want = exact_problem(k4, Tolerance(1, 2), Problem::P6).objective;
  CHECK(want == Rational(3));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto r = solve_2pc(k4, seeded(seed));
    CHECK(r.rho == Rational(3));
    CHECK(r.solution.size() == 4);
  }
}

TEST_CASE("single vertex") {
  auto g = make_graph(1, {});
  auto r = solve_2pc(g, seeded(1));
  CHECK(r.rho == Rational(0));
  CHECK(r.solution.vertices == std::vector<VertexId>{0});
}

TEST_CASE("empty graph") {
  auto r = solve_2pc(make_graph(0, {}), seeded(1));
  CHECK(r.solution.empty());
  CHECK(r.searches == 0);
}

TEST_CASE("rho is consistent, bounded by the optimum and usually optimal") {
  std::mt19937_64 rng(2);
  int runs = 0, matched = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 2 + rng() % 7;
    auto g = random_graph(rng, n, 0.5, 0.3);
    const auto opt = exact_problem(g, Tolerance(1, 2), Problem::P6).objective;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto r = solve_2pc(g, seeded(seed));
      CHECK(r.rho == polarity(g, r.solution));
      CHECK(r.rho <= opt);
      CHECK(solution_connected(g, r.solution));
      CHECK(r.improvements >= 1);
      ++runs;
      matched += r.rho == opt ? 1 : 0;
    }
  }
  MESSAGE("2PC matched the optimum in " << matched << " of " << runs << " runs");
  CHECK(matched * 10 >= runs * 6);
}

TEST_CASE("stop policy") {
  std::mt19937_64 rng(3);
  auto g = random_graph(rng, 100, 0.05, 0.3);
  StopPolicy capped;
  capped.max_searches = 3;
  CHECK(solve_2pc(g, seeded(1), capped).searches <= 3);
  StopPolicy stale;
  stale.max_stale_restarts = 5;
  auto r = solve_2pc(g, seeded(1), stale);
  CHECK(r.searches >= r.improvements + 5);
  auto again = solve_2pc(g, seeded(1), stale);
  CHECK(again.solution.vertices == r.solution.vertices);
  CHECK(again.rho == r.rho);
}
