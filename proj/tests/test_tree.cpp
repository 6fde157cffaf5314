#include "doctest.h"
#include "pathdec/exact.hpp"
#include "pathdec/tree.hpp"
#include "support.hpp"

using namespace pathdec;
using testsupport::code_of;

TEST_CASE("named trees") {
  for (int n : {2, 4, 7}) {
    Decomposition d = decompose_tree(path_graph(n));
    CHECK(d.paths.size() == 1);
    CHECK(verify(path_graph(n), d).valid);
  }
  CHECK(decompose_tree(star_graph(4)).paths.size() == 2);
  CHECK(decompose_tree(star_graph(6)).paths.size() == 3);  // degree-5 spider
  CHECK(decompose_tree(make_graph(1, {})).paths.empty());
}

TEST_CASE("tree decomposition is tight and oracle-exact on a corpus") {
  for (unsigned seed = 0; seed < 40; ++seed) {
    int n = 2 + static_cast<int>(seed % 11);  // up to 12 vertices
    Graph t = gen_family(Family::random_tree, n, 400 + seed);
    Decomposition d = decompose_tree(t);
    REQUIRE(verify(t, d).valid);
    auto prof = degree_profile(t);
    CHECK(static_cast<int>(d.paths.size()) == prof.n_o / 2);

    // Needed downstream: each odd vertex ends exactly one path.
    std::vector<int> ends(t.n, 0);
    for (const auto& p : d.paths) {
      ++ends[p.front()];
      ++ends[p.back()];
    }
    for (int v = 0; v < t.n; ++v)
      CHECK(ends[v] == (prof.degrees[v] % 2 == 1 ? 1 : 0));

    if (t.n <= 8) CHECK(static_cast<int>(d.paths.size()) ==
                        min_path_decomposition(t).p);
  }
}

TEST_CASE("removing a leaf shifts the count by the neighbor parity") {
  for (unsigned seed = 0; seed < 15; ++seed) {
    Graph t = gen_family(Family::random_tree, 8, 500 + seed);
    auto deg = t.degrees();
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    int nbr = -1;
    for (auto [u, v] : t.edges) {
      if (u == leaf) nbr = v;
      if (v == leaf) nbr = u;
    }
    // Rebuild the smaller tree with the leaf dropped and ids compacted.
    std::vector<EdgePair> rest;
    for (auto [u, v] : t.edges) {
      if (u == leaf || v == leaf) continue;
      auto shift = [&](int x) { return x > leaf ? x - 1 : x; };
      rest.push_back(canonical_edge(shift(u), shift(v)));
    }
    Graph smaller = make_graph(t.n - 1, rest);
    int with = static_cast<int>(decompose_tree(t).paths.size());
    int without = static_cast<int>(decompose_tree(smaller).paths.size());
    int nbr_deg_without = deg[nbr] - 1;
    CHECK(with - without == (nbr_deg_without % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("non-trees are rejected") {
  CHECK(code_of([] { decompose_tree(cycle_graph(4)); }) == errc::not_a_tree);
  CHECK(code_of([] {
          decompose_tree(make_graph(4, {{0, 1}, {2, 3}}));
        }) == errc::not_a_tree);
}
