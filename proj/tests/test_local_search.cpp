#include <doctest.h>

#include <climits>
#include <map>
#include <set>

#include "support.hpp"
#include "tolbal/generators.hpp"
#include "tolbal/graph_io.hpp"
#include "tolbal/local_search.hpp"
#include "tolbal/structure.hpp"

using namespace testing;

namespace {

SearchParams params(Tolerance tol, std::uint64_t seed, double p = 0.8, std::int64_t T = 20) {
  SearchParams sp;
  sp.tol = tol;
  sp.seed = seed;
  sp.p = p;
  sp.T = T;
  return sp;
}

bool selection_connected(const SignedGraph& g, const Coloring& c) {
  std::vector<int> in(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) in[v] = c.selected(v);
  return brute_connected(g, in);
}

// Compares heap contents with deltas recomputed from scratch.
void check_heaps(const SignedGraph& g, const LocalSearch& ls, const Tolerance& tol) {
  const auto& c = ls.coloring();
  std::map<std::uint32_t, std::int64_t> expected_insert, actual_insert;
  std::map<std::uint32_t, std::int64_t> expected_flip, actual_flip;
  const auto before = brute_score(g, c, tol).scaled;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (c.selected(v)) {
      Coloring f = c;
      f.set(v, 1 - c.color(v));
      expected_flip[v] = brute_score(g, f, tol).scaled - before;
      continue;
    }
    bool touches = false;
    for (const auto& a : g.neighbors(v)) touches = touches || c.selected(a.vertex());
    if (!touches) continue;
    for (int col = 0; col < 2; ++col) {
      Coloring f = c;
      f.set(v, col);
      expected_insert[2 * v + col] = brute_score(g, f, tol).scaled - before;
    }
  }
  for (const auto& e : ls.insert_entries()) actual_insert[e.id] = e.key;
  for (const auto& e : ls.flip_entries()) actual_flip[e.id] = e.key;
  CHECK(actual_insert == expected_insert);
  CHECK(actual_flip == expected_flip);
  std::map<std::uint32_t, std::int64_t> expected_delete, actual_delete;
  for (VertexId v : ls.members()) {
    Coloring f = c;
    f.unset(v);
    expected_delete[v] = brute_score(g, f, tol).scaled - before;
  }
  for (const auto& e : ls.delete_entries()) actual_delete[e.id] = e.key;
  CHECK(actual_delete == expected_delete);
  if (auto top = ls.top_insert()) {
    std::int64_t best = INT64_MIN;
    for (auto [id, key] : expected_insert) best = std::max(best, key);
    CHECK(top->delta == best);
  }
}

}  // namespace

TEST_CASE("isolated start vertex") {
  auto g = make_graph(3, {{1, 2, 1}});
  LocalSearch ls(g);
  auto out = ls.search(0, params(Tolerance(1, 2), 1));
  CHECK(out.solution.vertices == std::vector<VertexId>{0});
  CHECK(out.solution.score.scaled == 0);
  CHECK(out.objective == 0);
}

TEST_CASE("all-positive connected graph is taken whole") {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 20; ++rep) {
    auto g = random_connected_graph(rng, 5 + rng() % 25, 0.2, 0.0);
    LocalSearch ls(g);
    const VertexId s = static_cast<VertexId>(rng() % g.vertex_count());
    auto out = ls.search(s, params(Tolerance(1, 2), rep));
    CHECK(out.solution.size() == g.vertex_count());
    CHECK(out.solution.score.m_sel == static_cast<std::int64_t>(g.edge_count()));
    CHECK(out.solution.score.value(Tolerance(1, 2)) == Rational(static_cast<std::int64_t>(g.edge_count())));
  }
}

TEST_CASE("start vertex is validated") {
  auto g = make_graph(2, {{0, 1, 1}});
  LocalSearch ls(g);
  CHECK_THROWS_AS(ls.search(5, params(Tolerance(1, 2), 1)), std::out_of_range);
  auto bad = params(Tolerance(1, 2), 1);
  bad.p = 1.0;
  CHECK_THROWS(ls.search(0, bad));
  bad.p = 0.5;
  bad.T = 0;
  CHECK_THROWS(ls.search(0, bad));
}

TEST_CASE("del_eval: path allows only the ends") {
  auto g = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
  LocalSearch ls(g);
  ls.reset(0, params(Tolerance(1, 2), 1));
  ls.apply_insert(1, 0);
  ls.apply_insert(2, 0);
  auto d = ls.del_eval();
  REQUIRE(d.has_value());
  CHECK(d->vertex != 1);
  CHECK(d->delta == -1);
  CHECK(d->vertex == 0);  // tie broken by smaller id
}

TEST_CASE("del_eval: triangle with one imbalanced edge") {
  // 0-1 negative, everything colored 0: edge (0,1) is imbalanced
  auto g = make_graph(3, {{0, 1, -1}, {1, 2, 1}, {0, 2, 1}});
  const Tolerance half(1, 2);
  LocalSearch ls(g);
  ls.reset(0, params(half, 1));
  ls.apply_insert(2, 0);
  ls.apply_insert(1, 0);
  // deleting 0 or 1: -1*2 + 2*1 = 0; deleting 2: -2 + 0 = -2
  auto d = ls.del_eval();
  REQUIRE(d.has_value());
  CHECK(d->delta == 0);
  CHECK(d->vertex == 0);
}

TEST_CASE("del_eval matches brute force over deletable vertices") {
  std::mt19937_64 rng(8);
  const Tolerance tol(1, 3);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 3 + rng() % 8;
    auto g = random_connected_graph(rng, n, 0.3, 0.4);
    LocalSearch ls(g);
    ls.reset(0, params(tol, rep));
    // grow a random connected selection
    for (int k = 0; k < static_cast<int>(n); ++k) {
      auto entries = ls.insert_entries();
      if (entries.empty()) break;
      const auto e = entries[rng() % entries.size()];
      ls.apply_insert(e.id / 2, static_cast<int>(e.id % 2));
    }
    const auto& c = ls.coloring();
    std::optional<std::pair<std::int64_t, VertexId>> best;
    if (c.selected_count() >= 2) {
      for (VertexId v = 0; v < n; ++v) {
        if (!c.selected(v)) continue;
        std::vector<int> in(n, 0);
        for (VertexId w = 0; w < n; ++w) in[w] = c.selected(w) && w != v;
        if (!brute_connected(g, in)) continue;
        Coloring after = c;
        after.unset(v);
        const auto d = brute_score(g, after, tol).scaled - brute_score(g, c, tol).scaled;
        if (!best || d > best->first) best = std::make_pair(d, v);
      }
    }
    auto got = ls.del_eval();
    REQUIRE(got.has_value() == best.has_value());
    if (got) {
      CHECK(got->delta == best->first);
      CHECK(got->vertex == best->second);
    }
  }
}

TEST_CASE("cut probe agrees with articulation points") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 20 + rng() % 200;
    auto g = random_connected_graph(rng, n, 2.0 / static_cast<double>(n), 0.3);
    const auto all = VertexSet::all(n);
    const auto cuts = articulation_points(g, all);
    CutProbe probe(n);
    for (VertexId v = 0; v < n; ++v) {
      std::size_t unlimited = SIZE_MAX;
      const auto verdict = probe.test(g, v, [](VertexId) { return true; }, unlimited);
      CHECK(verdict == (cuts.contains(v) ? CutProbe::Verdict::Cut : CutProbe::Verdict::NotCut));
      std::size_t tight = rng() % 40;
      const auto limited = probe.test(g, v, [](VertexId) { return true; }, tight);
      if (limited != CutProbe::Verdict::GaveUp) CHECK(limited == verdict);
    }
  }
}

TEST_CASE("del_eval matches articulation points on larger sparse selections") {
  std::mt19937_64 rng(13);
  const Tolerance tol(1, 4);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 150 + rng() % 150;
    auto g = random_connected_graph(rng, n, (1.0 + rng() % 4) / static_cast<double>(n), 0.3);
    LocalSearch ls(g);
    ls.reset(static_cast<VertexId>(rng() % n), params(tol, rep));
    for (int op = 0; op < 400; ++op) {
      auto entries = ls.insert_entries();
      if (rng() % 4 != 0 && !entries.empty()) {
        const auto e = entries[rng() % entries.size()];
        ls.apply_insert(e.id / 2, static_cast<int>(e.id % 2));
        continue;
      }
      auto got = ls.del_eval();
      const auto members = ls.members();
      REQUIRE(members.size() >= 1);
      if (members.size() < 2) {
        CHECK_FALSE(got.has_value());
        continue;
      }
      const auto sel = VertexSet::of(n, members);
      const auto cuts = articulation_points(g, sel);
      std::optional<std::pair<std::int64_t, VertexId>> best;
      for (VertexId v : members) {
        if (cuts.contains(v)) continue;
        const auto d = ls.delete_key(v);
        if (!best || d > best->first || (d == best->first && v < best->second)) best = std::make_pair(d, v);
      }
      REQUIRE(got.has_value());
      CHECK(got->delta == best->first);
      CHECK(got->vertex == best->second);
      ls.apply_delete(got->vertex);
    }
  }
}

TEST_CASE("heaps stay exact under random operation sequences") {
  std::mt19937_64 rng(19);
  const Tolerance tols[] = {Tolerance(1, 2), Tolerance(1, 5), Tolerance(3, 7)};
  for (int rep = 0; rep < 15; ++rep) {
    const std::size_t n = 5 + rng() % 20;
    auto g = random_graph(rng, n, 0.25, 0.5);
    const Tolerance tol = tols[rep % 3];
    LocalSearch ls(g);
    ls.reset(static_cast<VertexId>(rng() % n), params(tol, rep));
    check_heaps(g, ls, tol);
    for (int op = 0; op < 60; ++op) {
      const int kind = static_cast<int>(rng() % 3);
      if (kind == 0 && !ls.insert_entries().empty()) {
        const auto e = ls.insert_entries()[rng() % ls.insert_entries().size()];
        ls.apply_insert(e.id / 2, static_cast<int>(e.id % 2));
      } else if (kind == 1) {
        ls.apply_flip(ls.members()[rng() % ls.members().size()]);
      } else if (auto d = ls.del_eval()) {
        ls.apply_delete(d->vertex);
      }
      CHECK(ls.current() == brute_score(g, ls.coloring(), tol).scaled);
      CHECK(selection_connected(g, ls.coloring()));
      check_heaps(g, ls, tol);
    }
  }
}

TEST_CASE("search steps keep connectivity, exact score and budget accounting") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 5 + rng() % 40;
    auto g = random_graph(rng, n, 0.15, 0.4);
    const Tolerance tol(1, 1 + static_cast<std::int64_t>(rng() % 6));
    const std::int64_t T = 1 + static_cast<std::int64_t>(rng() % 5);
    LocalSearch ls(g);
    ls.reset(static_cast<VertexId>(rng() % n), params(tol, rep, 0.8, T));
    std::int64_t best_seen = ls.current();
    while (ls.step()) {
      CHECK(ls.current() == brute_score(g, ls.coloring(), tol).scaled);
      CHECK(selection_connected(g, ls.coloring()));
      best_seen = std::max(best_seen, ls.current());
      CHECK(ls.optimum() == best_seen);
      const auto& st = ls.stats();
      CHECK(st.non_progressive <= T * st.progressive + T + 1);
    }
    const auto log = ls.log();
    // maximum prefix value of the run
    std::int64_t value = 0, max_prefix = 0;
    for (const auto& r : log) {
      value += r.delta;
      max_prefix = std::max(max_prefix, value);
    }
    ls.undo_to_optimum();
    CHECK(ls.current() == ls.optimum());
    CHECK(ls.current() == max_prefix);
    CHECK(ls.current() == brute_score(g, ls.coloring(), tol).scaled);
    CHECK(selection_connected(g, ls.coloring()));
    auto out = ls.result();
    CHECK(out.solution.score == brute_solution_score(g, out.solution, tol));
  }
}

TEST_CASE("undo with no operations leaves the state alone") {
  auto g = make_graph(3, {{0, 1, 1}, {1, 2, -1}});
  LocalSearch ls(g);
  ls.reset(1, params(Tolerance(1, 2), 3));
  ls.undo_to_optimum();
  CHECK(ls.members().size() == 1);
  CHECK(ls.current() == 0);
}

TEST_CASE("strict tolerance yields a balanced partition") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 30; ++rep) {
    auto g = random_connected_graph(rng, 10 + rng() % 30, 0.2, 0.5);
    const auto strict = strict_tolerance(g);
    LocalSearch ls(g);
    auto out = ls.search(static_cast<VertexId>(rng() % g.vertex_count()), params(strict, rep));
    CHECK(out.solution.score.imb == 0);
    CHECK(out.solution.score.scaled >= 0);
    CHECK(solution_connected(g, out.solution));
  }
}

TEST_CASE("insertion-only mode never flips or deletes") {
  std::mt19937_64 rng(5);
  auto g = random_connected_graph(rng, 40, 0.2, 0.5);
  LocalSearch ls(g);
  auto out = ls.search(0, params(Tolerance(1, 4), 9, 0.0));
  CHECK(out.stats.flips == 0);
  CHECK(out.stats.deletes == 0);
  CHECK(out.stats.inserts > 0);
}

TEST_CASE("determinism") {
  std::mt19937_64 rng(6);
  auto g = random_connected_graph(rng, 60, 0.1, 0.4);
  LocalSearch a(g), b(g);
  for (VertexId s = 0; s < 10; ++s) {
    auto x = a.search(s, params(Tolerance(1, 4), 100 + s));
    auto y = b.search(s, params(Tolerance(1, 4), 100 + s));
    CHECK(x.solution.vertices == y.solution.vertices);
    CHECK(x.solution.colors == y.solution.colors);
    CHECK(x.objective == y.objective);
  }
  // workspace reuse does not leak state between searches
  LocalSearch fresh(g);
  auto again = fresh.search(3, params(Tolerance(1, 4), 103));
  auto reused = a.search(3, params(Tolerance(1, 4), 103));
  CHECK(again.solution.vertices == reused.solution.vertices);
}

TEST_CASE("size-penalized objective is tracked exactly") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    auto g = random_connected_graph(rng, 20, 0.2, 0.3);
    auto sp = params(Tolerance(1, 2), rep);
    sp.size_penalty = Rational(9, 10);
    LocalSearch ls(g);
    auto out = ls.search(static_cast<VertexId>(rng() % 20), sp);
    const auto obj = sp.objective();
    const auto& s = out.solution.score;
    CHECK(out.objective == obj.evaluate(s.m_sel, s.imb, static_cast<std::int64_t>(out.solution.size())));
    CHECK(out.objective >= obj.evaluate(0, 0, 1));
  }
}

TEST_CASE("active mask confines the search") {
  std::mt19937_64 rng(13);
  auto g = random_connected_graph(rng, 30, 0.2, 0.3);
  std::vector<std::uint8_t> mask(30, 1);
  for (VertexId v = 0; v < 30; v += 3) mask[v] = 0;
  LocalSearch ls(g);
  ls.set_active(mask);
  auto out = ls.search(1, params(Tolerance(1, 2), 4));
  for (VertexId v : out.solution.vertices) CHECK(mask[v] == 1);
  CHECK_THROWS(ls.search(0, params(Tolerance(1, 2), 4)));
}

TEST_CASE("planted instance: search recovers most of the planted set") {
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = generate_planted({.n = 200, .m = 1000, .planted_fraction = 0.3, .flip_noise = 0.1, .seed = seed});
    LocalSearch ls(inst.graph);
    const VertexId s = inst.planted.vertices()[seed % inst.planted.size()];
    auto out = ls.search(s, params(Tolerance(1, 4), seed));
    CHECK(out.solution.score.scaled >= 0);
    std::size_t inside = 0;
    for (VertexId v : out.solution.vertices) inside += inst.planted.contains(v) ? 1 : 0;
    if (2 * inside >= inst.planted.size()) ++hits;
  }
  CHECK(hits >= 10);
}

TEST_CASE("toy fixture: best search over all starts under strict tolerance") {
  auto g = read_edge_list_file(fixture("fig2.edges"));
  const auto strict = strict_tolerance(g);
  CHECK(strict == Tolerance(1, 15));
  std::optional<SearchOutcome> best;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    LocalSearch ls(g);
    auto out = ls.search(s, params(strict, s));
    if (!best || out.objective > best->objective ||
        (out.objective == best->objective && tie_break_before(out.solution, best->solution))) {
      best = out;
    }
  }
  CHECK(labels_of(g, best->solution.vertices) == std::vector<std::string>{"1", "2", "3", "5"});
}
