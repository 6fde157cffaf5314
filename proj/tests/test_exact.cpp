#include "doctest.h"
#include "pathdec/exact.hpp"
#include "support.hpp"

using namespace pathdec;
using testsupport::brute_min_paths;
using testsupport::code_of;

TEST_CASE("oracle on named graphs") {
  for (int n : {2, 5, 9}) {
    auto res = min_path_decomposition(path_graph(n));
    CHECK(res.p == 1);
    CHECK(res.optimal);
  }
  Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(min_path_decomposition(k4).p == 2);
  for (int n : {3, 5, 7}) {
    Graph c = cycle_graph(n);
    CHECK(min_path_decomposition(c).p == 2);
    CHECK(min_path_decomposition(subdivide(c, c.edges[1])).p == 2);
  }
  CHECK(min_path_decomposition(make_graph(3, {})).p == 0);
}

TEST_CASE("oracle matches the exhaustive subset search") {
  for (unsigned seed = 0; seed < 40; ++seed) {
    int n = 3 + static_cast<int>(seed % 5);  // up to 7 vertices
    Graph g = gen_family(Family::random_connected, n, seed);
    if (g.edge_count() > 12) continue;
    auto res = min_path_decomposition(g);
    CHECK(res.optimal);
    CHECK(res.p == brute_min_paths(g));
    CHECK(verify(g, res.witness).valid);
  }
}

TEST_CASE("oracle handles disconnected input") {
  Graph two = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  auto res = min_path_decomposition(two);
  CHECK(res.p == 2);
  CHECK(verify(two, res.witness).valid);
}

TEST_CASE("witness respects the sandwich bounds on a connected corpus") {
  for (unsigned seed = 0; seed < 30; ++seed) {
    int n = 2 + static_cast<int>(seed % 6);  // up to 7 vertices
    Graph g = gen_family(Family::random_connected, n, 100 + seed);
    auto res = min_path_decomposition(g);
    REQUIRE(res.optimal);
    CHECK(verify(g, res.witness).valid);
    CHECK(res.p >= lower_bound(g));
    // A breach here would contradict the ceil(n/2) conjecture at desk scale.
    CHECK(res.p <= testsupport::ceil_half(g.n));
  }
}

TEST_CASE("determinism") {
  Graph g = gen_family(Family::random_connected, 7, 17);
  auto a = min_path_decomposition(g);
  auto b = min_path_decomposition(g);
  CHECK(a.p == b.p);
  CHECK(a.witness.paths == b.witness.paths);
}

TEST_CASE("budget exhaustion returns a valid non-optimal incumbent") {
  Graph g = cartesian_product(cycle_graph(4), cycle_graph(4));  // 32 edges
  OracleBudget tiny{200, std::chrono::duration<double>(30.0)};
  auto res = min_path_decomposition(g, tiny);
  CHECK(res.budget_hit);
  CHECK(!res.optimal);
  CHECK(verify(g, res.witness).valid);
  CHECK(code_of([] {
          min_path_decomposition(path_graph(3), OracleBudget{0, {}});
        }) == errc::invalid_params);
}

TEST_CASE("odd graph decomposition hits n/2 with one end per vertex") {
  CHECK(decompose_odd_graph(path_graph(2)).paths.size() == 1);

  Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Decomposition dk4 = decompose_odd_graph(k4);
  CHECK(dk4.paths.size() == 2);

  Graph cube = cartesian_product(path_graph(2), cycle_graph(4));
  Decomposition dc = decompose_odd_graph(cube);
  CHECK(dc.paths.size() == 4);
  CHECK(brute_min_paths(cube) == 4);

  for (unsigned seed = 0; seed < 12; ++seed) {
    int n = 4 + 2 * static_cast<int>(seed % 4);  // 4..10
    Graph g = gen_family(Family::random_odd, n, seed);
    Decomposition d = decompose_odd_graph(g);
    CHECK(static_cast<int>(d.paths.size()) == n / 2);
    CHECK(verify(g, d).valid);
    std::vector<int> ends(g.n, 0);
    for (const auto& p : d.paths) {
      ++ends[p.front()];
      ++ends[p.back()];
    }
    for (int v = 0; v < g.n; ++v) CHECK(ends[v] == 1);
  }

  CHECK(code_of([] { decompose_odd_graph(path_graph(3)); }) == errc::not_odd_graph);
  CHECK(code_of([] {
          decompose_odd_graph(make_graph(4, {{0, 1}, {2, 3}}));
        }) == errc::not_connected);
  Graph big = gen_family(Family::random_odd, 10, 3);
  CHECK(code_of([&] {
          decompose_odd_graph(big, OracleBudget{1, std::chrono::duration<double>(30.0)});
        }) == errc::budget_exhausted);
}

TEST_CASE("subdivision leaves the minimum unchanged") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    Graph g = gen_family(Family::random_connected, 5, 50 + seed);
    if (g.edge_count() > 8) continue;
    int p = min_path_decomposition(g).p;
    for (EdgePair e : g.edges)
      CHECK(min_path_decomposition(subdivide(g, e)).p == p);
  }
}
