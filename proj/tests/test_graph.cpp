#include <sstream>

#include "doctest.h"
#include "pathdec/graph.hpp"
#include "support.hpp"

using namespace pathdec;
using testsupport::code_of;

TEST_CASE("make_graph basics") {
  Graph p2 = make_graph(2, {{0, 1}});
  CHECK(p2.n == 2);
  CHECK(p2.edge_count() == 1);

  Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.edge_count() == 4);
  CHECK(c4.has_edge(3, 0));
  CHECK(!c4.has_edge(0, 2));

  Graph dup = make_graph(4, {{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);

  CHECK(code_of([] { make_graph(3, {{0, 3}}); }) == errc::endpoint_out_of_range);
  CHECK(code_of([] { make_graph(3, {{1, 1}}); }) == errc::self_loop);
}

TEST_CASE("cartesian product structure") {
  Graph p2 = path_graph(2);
  Graph prod = cartesian_product(p2, p2);
  CHECK(prod.n == 4);
  CHECK(prod.edge_count() == 4);
  CHECK(same_structure(prod, make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
  CHECK(prod.labels[3] == EdgePair{1, 1});

  Graph p3 = path_graph(3);
  Graph p33 = cartesian_product(p3, p3);
  CHECK(p33.n == 9);
  CHECK(p33.edge_count() == 12);

  CHECK(code_of([&] { cartesian_product(p2, make_graph(0, {})); }) ==
        errc::empty_factor);
}

TEST_CASE("product degree and size laws") {
  std::vector<Graph> factors = {path_graph(4), cycle_graph(5), star_graph(4),
                                gen_family(Family::random_tree, 6, 3),
                                gen_family(Family::random_connected, 5, 9)};
  for (const Graph& g : factors) {
    for (const Graph& h : factors) {
      Graph prod = cartesian_product(g, h);
      CHECK(prod.edge_count() ==
            g.n * h.edge_count() + h.n * g.edge_count());
      auto dg = g.degrees();
      auto dh = h.degrees();
      auto dp = prod.degrees();
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < h.n; ++b)
          CHECK(dp[product_vertex(a, b, h.n)] == dg[a] + dh[b]);
      CHECK(is_connected(prod));
    }
  }
}

TEST_CASE("product with a single vertex relabels the other factor") {
  Graph g = cycle_graph(5);
  Graph prod = cartesian_product(g, make_graph(1, {}));
  CHECK(same_structure(prod, g));
}

TEST_CASE("subdivide") {
  Graph p3 = subdivide(path_graph(2), {0, 1});
  CHECK(same_structure(p3, make_graph(3, {{0, 2}, {1, 2}})));

  Graph c3 = cycle_graph(3);
  Graph c4ish = subdivide(c3, {1, 2});
  CHECK(c4ish.n == 4);
  CHECK(c4ish.edge_count() == 4);
  auto prof = degree_profile(c4ish);
  CHECK(prof.n_o == 0);
  CHECK(prof.max_degree == 2);
  CHECK(is_connected(c4ish));

  CHECK(code_of([&] { subdivide(c3, {0, 3}); }) == errc::edge_not_present);

  // Parity of every original vertex survives; the new vertex is even.
  for (unsigned seed = 0; seed < 6; ++seed) {
    Graph g = gen_family(Family::random_connected, 6, seed);
    auto before = degree_profile(g);
    for (EdgePair e : g.edges) {
      Graph s = subdivide(g, e);
      CHECK(s.edge_count() == g.edge_count() + 1);
      auto after = degree_profile(s);
      CHECK(after.n_o == before.n_o);
      for (int v = 0; v < g.n; ++v)
        CHECK(after.degrees[v] % 2 == before.degrees[v] % 2);
      CHECK(after.degrees[g.n] == 2);
    }
  }
}

TEST_CASE("degree profile") {
  auto c4 = degree_profile(cycle_graph(4));
  CHECK(c4.n_o == 0);
  CHECK(c4.n_e == 4);
  CHECK(c4.max_degree == 2);

  auto grid = degree_profile(cartesian_product(path_graph(6), path_graph(4)));
  CHECK(grid.n_o == 2 * (6 + 4 - 4));

  auto pt = degree_profile(cartesian_product(path_graph(6), star_graph(4)));
  CHECK(pt.n_o == 2 * 4 + (6 - 4) * 4);  // 2(m - n_o(T)) + (n-2) n_o(T)

  for (unsigned seed = 0; seed < 10; ++seed)
    CHECK(degree_profile(gen_family(Family::random_connected, 7, seed)).n_o % 2 ==
          0);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path_graph(5)));
  CHECK(is_connected(make_graph(1, {})));
  CHECK(!is_connected(make_graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("family generators") {
  Graph p4 = gen_family(Family::path, 4);
  CHECK(same_structure(p4, make_graph(4, {{0, 1}, {1, 2}, {2, 3}})));
  CHECK(gen_family(Family::cycle, 5).edge_count() == 5);
  CHECK(degree_profile(gen_family(Family::star, 6)).max_degree == 5);

  for (unsigned seed = 0; seed < 8; ++seed) {
    Graph t = gen_family(Family::random_tree, 9, seed);
    CHECK(is_tree(t));

    Graph c = gen_family(Family::random_connected, 8, seed);
    CHECK(is_connected(c));

    Graph ev = gen_family(Family::random_even, 5, seed + 7);
    CHECK(is_connected(ev));
    CHECK(degree_profile(ev).n_o == 0);

    Graph od = gen_family(Family::random_odd, 6, seed + 1);
    CHECK(is_connected(od));
    CHECK(degree_profile(od).n_o == 6);
  }

  // Reproducibility: one seed, one graph.
  Graph a = gen_family(Family::random_connected, 9, 42);
  Graph b = gen_family(Family::random_connected, 9, 42);
  CHECK(same_structure(a, b));

  CHECK(code_of([] { gen_family(Family::random_odd, 5, 1); }) ==
        errc::invalid_params);
  CHECK(code_of([] { gen_family(Family::random_even, 2, 1); }) ==
        errc::invalid_params);
  CHECK(code_of([] { gen_family(Family::cycle, 2, 0); }) == errc::invalid_params);
}

TEST_CASE("edge list round trip and errors") {
  Graph g = gen_family(Family::random_connected, 7, 5);
  std::istringstream in(format_edge_list(g));
  Graph back = parse_edge_list(in);
  CHECK(same_structure(g, back));

  std::istringstream bad1("3\n0 1\n");
  auto c1 = code_of([&] { parse_edge_list(bad1); });
  CHECK(c1 == errc::parse_error);

  std::istringstream bad2("3 2\n0 1\n0 two\n");
  try {
    parse_edge_list(bad2);
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  std::istringstream bad3("2 2\n0 1\n");
  CHECK(code_of([&] { parse_edge_list(bad3); }) == errc::parse_error);
}
