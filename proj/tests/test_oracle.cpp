#include <doctest.h>

#include "support.hpp"
#include "tolbal/graph_io.hpp"
#include "tolbal/oracle.hpp"
#include "tolbal/structure.hpp"

using namespace testing;

namespace {

std::optional<std::int64_t> brute_value(Problem p, const Tolerance& tol, int m, int l, int size) {
  const std::int64_t scaled = tol.num() * m - tol.den() * l;
  switch (p) {
    case Problem::P1: return l == 0 ? std::optional<std::int64_t>(size) : std::nullopt;
    case Problem::P2: return l == 0 ? std::optional<std::int64_t>(m) : std::nullopt;
    case Problem::P3: return scaled >= 0 ? std::optional<std::int64_t>(size) : std::nullopt;
    case Problem::P4: return scaled >= 0 ? std::optional<std::int64_t>(m) : std::nullopt;
    default: return scaled;
  }
}

}  // namespace

TEST_CASE("frustration index examples") {
  CHECK(frustration_index(read_edge_list_file(fixture("balanced.edges"))) == 0);
  CHECK(frustration_index(make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}})) == 1);
  CHECK(frustration_index(make_graph(4, {{0, 1, -1}, {0, 2, -1}, {0, 3, -1}, {1, 2, -1}, {1, 3, -1}, {2, 3, -1}})) == 2);
  CHECK(frustration_index(make_graph(0, {})) == 0);
}

TEST_CASE("frustration index matches brute force and is additive over components") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rng() % 11;
    auto g = random_graph(rng, n, 0.4, 0.2 + 0.6 * (rng() % 100) / 100.0);
    const auto l = frustration_index(g);
    CHECK(l == brute_frustration(g));
    std::int64_t sum = 0;
    for (const auto& comp : connected_components(g)) {
      std::vector<int> in(n, 0);
      for (VertexId v : comp.vertices()) in[v] = 1;
      sum += brute_frustration(g, in);
    }
    CHECK(l == sum);
  }
}

TEST_CASE("complementing every color keeps the imbalance") {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 2 + rng() % 9;
    auto g = random_graph(rng, n, 0.5, 0.5);
    Coloring c(n), d(n);
    for (VertexId v = 0; v < n; ++v) {
      const int x = static_cast<int>(rng() % 2);
      c.set(v, x);
      d.set(v, 1 - x);
    }
    CHECK(tbc(g, c, Tolerance(1, 2)) == tbc(g, d, Tolerance(1, 2)));
  }
}

TEST_CASE("exact tbi examples") {
  auto bal = read_edge_list_file(fixture("balanced.edges"));
  for (const auto& tol : {Tolerance(1, 2), Tolerance(1, 9)}) {
    CHECK(exact_tbi(bal, tol).score.value(tol) == Rational(static_cast<std::int64_t>(bal.edge_count())));
  }
  auto tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
  CHECK(exact_tbi(tri, Tolerance(1, 2)).score.value(Tolerance(1, 2)) == Rational(1));
}

TEST_CASE("exact tbi equals the best coloring and its argmax attains it") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rng() % 10;
    auto g = random_graph(rng, n, 0.45, (rng() % 100) / 100.0);
    const Tolerance tol(1, 1 + static_cast<std::int64_t>(rng() % 12));
    auto r = exact_tbi(g, tol);
    CHECK(r.score.scaled == brute_best_tbc(g, tol));
    CHECK(brute_score(g, r.coloring, tol).scaled == r.score.scaled);
  }
}

TEST_CASE("size guards") {
  std::mt19937_64 rng(4);
  auto big = random_graph(rng, 16, 0.2, 0.5);
  CHECK_THROWS_AS(exact_problem(big, Tolerance(1, 2), Problem::P5), SizeGuardError);
  auto eleven = random_graph(rng, 11, 0.2, 0.5);
  CHECK_THROWS_AS(exact_problem(eleven, Tolerance(1, 2), Problem::P6), SizeGuardError);
  auto many = random_graph(rng, 30, 0.1, 0.5);
  CHECK_THROWS_AS(frustration_index(many), SizeGuardError);
  CHECK_NOTHROW(frustration_index(random_graph(rng, 12, 0.2, 0.5), 12));
  CHECK_THROWS_AS(frustration_index(random_graph(rng, 13, 0.2, 0.5), 12), SizeGuardError);
}

TEST_CASE("exact_problem agrees with subset filtering") {
  std::mt19937_64 rng(5);
  const Problem problems[] = {Problem::P1, Problem::P2, Problem::P3, Problem::P4, Problem::P5};
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 1 + rng() % 9;
    auto g = random_graph(rng, n, 0.35, 0.4);
    const Tolerance tol(1, 1 + static_cast<std::int64_t>(rng() % 6));
    for (Problem p : problems) {
      auto want = brute_subgraph_optimum(g, [&](int m, int l, int size) { return brute_value(p, tol, m, l, size); });
      auto got = exact_problem(g, tol, p);
      REQUIRE(got.found == want.found);
      if (!got.found) continue;
      CHECK(got.solution.vertices == want.vertices);
      const Rational expected = p == Problem::P5 ? Rational(want.value, tol.num()) : Rational(want.value);
      CHECK(got.objective == expected);
      CHECK(solution_connected(g, got.solution));
      CHECK(brute_solution_score(g, got.solution, tol) == got.solution.score);
      CHECK(got.frustration == got.solution.score.imb);
    }
  }
}

TEST_CASE("exact polarity agrees with the quadratic form") {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rng() % 7;
    auto g = random_graph(rng, n, 0.5, 0.4);
    auto r = exact_problem(g, Tolerance(1, 2), Problem::P6);
    auto [num, den] = brute_polarity(g);
    REQUIRE(r.found);
    CHECK(r.objective == Rational(num, den));
    // the reported x reproduces the objective
    const auto a = adjacency_matrix(g);
    std::vector<int> x(n, 0);
    for (std::size_t i = 0; i < r.solution.size(); ++i) x[r.solution.vertices[i]] = r.solution.colors[i] ? -1 : 1;
    std::int64_t q = 0, s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      s += x[i] * x[i];
      for (std::size_t j = 0; j < n; ++j) q += x[i] * a[i][j] * x[j];
    }
    CHECK(Rational(q, s) == r.objective);
  }
  CHECK(exact_problem(make_graph(0, {}), Tolerance(1, 2), Problem::P6).found == false);
}

TEST_CASE("toy fixture optima") {
  auto g = read_edge_list_file(fixture("fig2.edges"));
  const auto strict = strict_tolerance(g);
  for (Problem p : {Problem::P1, Problem::P2}) {
    auto r = exact_problem(g, strict, p);
    CHECK(labels_of(g, r.solution.vertices) == std::vector<std::string>{"1", "2", "3", "5"});
    CHECK(r.solution.score.imb == 0);
  }
  // strict tolerance P5 lands on the same subgraph
  CHECK(labels_of(g, exact_problem(g, strict, Problem::P5).solution.vertices) ==
        std::vector<std::string>{"1", "2", "3", "5"});

  const Tolerance third(1, 3);
  auto r = exact_problem(g, third, Problem::P5);
  CHECK(labels_of(g, r.solution.vertices) == std::vector<std::string>{"1", "2", "3", "4", "5"});
  std::vector<std::string> side_of_1, other;
  const auto c1 = r.solution.colors[0];
  for (std::size_t i = 0; i < r.solution.size(); ++i) {
    (r.solution.colors[i] == c1 ? side_of_1 : other).push_back(g.label(r.solution.vertices[i]));
  }
  CHECK(side_of_1 == std::vector<std::string>{"1", "3", "5"});
  CHECK(other == std::vector<std::string>{"2", "4"});
}

TEST_CASE("balanced-subgraph size bound between the vertex and edge objectives") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rng() % 9;
    auto g = random_graph(rng, n, 0.4, 0.5);
    if (g.edge_count() == 0) continue;
    const auto delta = static_cast<std::int64_t>(g.max_degree());
    auto p1 = exact_problem(g, Tolerance(1, 2), Problem::P1);
    auto p2 = exact_problem(g, Tolerance(1, 2), Problem::P2);
    CHECK(static_cast<std::int64_t>(p2.solution.size()) * delta >= static_cast<std::int64_t>(p1.solution.size()));
    auto p3 = exact_problem(g, Tolerance(1, 4), Problem::P3);
    auto p4 = exact_problem(g, Tolerance(1, 4), Problem::P4);
    CHECK(static_cast<std::int64_t>(p4.solution.size()) * delta >= static_cast<std::int64_t>(p3.solution.size()));
  }
}
