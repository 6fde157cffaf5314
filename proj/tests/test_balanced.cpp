#include <set>

#include "doctest.h"
#include "pathdec/balanced.hpp"
#include "support.hpp"

using namespace pathdec;
using testsupport::code_of;

namespace {

void check_balanced(const Graph& h, const BalancedDecomposition& b) {
  auto prof = degree_profile(h);
  REQUIRE(verify(h, b.base).valid);
  CHECK(static_cast<int>(b.base.paths.size()) == prof.n_o / 2 + prof.n_e);
  int incidences = 0;
  for (int v = 0; v < h.n; ++v) {
    int want = prof.degrees[v] % 2 == 1 ? 1 : 2;
    CHECK(b.end_count[v] == want);
    incidences += b.end_count[v];
  }
  CHECK(incidences == prof.n_o + 2 * prof.n_e);
  CHECK(b.n_o1 + b.n_o2 == prof.n_o);
}

}  // namespace

TEST_CASE("four-cycle forces the four single edges") {
  Graph c4 = cycle_graph(4);
  auto b = balanced_decomposition(c4);
  check_balanced(c4, b);
  REQUIRE(b.base.paths.size() == 4);
  for (const auto& p : b.base.paths) CHECK(p.size() == 2);
}

TEST_CASE("claw splits into two paths with every vertex ending one") {
  Graph star = star_graph(4);
  auto b = balanced_decomposition(star);
  check_balanced(star, b);
  CHECK(b.base.paths.size() == 2);
  CHECK(b.n_o1 == 4);
  CHECK(b.n_o2 == 0);
}

TEST_CASE("path on four vertices becomes its three edges") {
  Graph p4 = path_graph(4);
  auto b = balanced_decomposition(p4);
  check_balanced(p4, b);
  REQUIRE(b.base.paths.size() == 3);
  for (const auto& p : b.base.paths) CHECK(p.size() == 2);
  CHECK(b.n_o2 == 2);
}

TEST_CASE("balanced decomposition over a seeded corpus") {
  for (unsigned seed = 0; seed < 25; ++seed) {
    int n = 2 + static_cast<int>(seed % 8);  // up to 9 vertices
    Graph h = gen_family(Family::random_connected, n, 200 + seed);
    check_balanced(h, balanced_decomposition(h));
  }
}

TEST_CASE("balanced decomposition rejects bad inputs") {
  CHECK(code_of([] { balanced_decomposition(make_graph(3, {})); }) ==
        errc::edgeless_graph);
  CHECK(code_of([] {
          balanced_decomposition(make_graph(4, {{0, 1}, {2, 3}}));
        }) == errc::not_connected);
}

TEST_CASE("linking structure of the named examples") {
  Graph c4 = cycle_graph(4);
  auto bc4 = balanced_decomposition(c4);
  auto lc4 = linking_structure(c4, bc4);
  CHECK(lc4.chains.empty());
  REQUIRE(lc4.cycles.size() == 1);
  CHECK(lc4.cycles[0].size() == 4);

  Graph star = star_graph(4);
  auto bs = balanced_decomposition(star);
  auto ls = linking_structure(star, bs);
  CHECK(ls.cycles.empty());
  REQUIRE(ls.chains.size() == 2);
  CHECK(ls.chains[0].size() == 1);
  CHECK(ls.chains[1].size() == 1);
  CHECK(ls.n_o1 == 4);
  CHECK(ls.n_o2 == 0);

  Graph p4 = path_graph(4);
  auto bp = balanced_decomposition(p4);
  auto lp = linking_structure(p4, bp);
  CHECK(lp.cycles.empty());
  REQUIRE(lp.chains.size() == 1);
  CHECK(lp.chains[0].size() == 3);
  // Joints are the two interior even vertices.
  std::set<VertexId> joints{lp.chains[0][0].second, lp.chains[0][1].second};
  CHECK(joints == std::set<VertexId>{1, 2});
  CHECK(lp.n_o1 == 0);
  CHECK(lp.n_o2 == 2);
}

TEST_CASE("linking structure invariants over a corpus") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    int n = 3 + static_cast<int>(seed % 7);
    Graph h = gen_family(Family::random_connected, n, 300 + seed);
    auto b = balanced_decomposition(h);
    auto links = linking_structure(h, b);
    auto deg = h.degrees();

    std::set<int> seen;
    auto walk = [&](const std::vector<PathLink>& part, bool cycle) {
      for (size_t i = 0; i < part.size(); ++i) {
        CHECK(seen.insert(part[i].path).second);
        const PathSeq& p = b.base.paths[part[i].path];
        CHECK(((p.front() == part[i].first && p.back() == part[i].second) ||
               (p.back() == part[i].first && p.front() == part[i].second)));
        if (i + 1 < part.size()) {
          CHECK(part[i].second == part[i + 1].first);
          CHECK(deg[part[i].second] % 2 == 0);  // joints are even
        } else if (cycle) {
          CHECK(part[i].second == part[0].first);
          CHECK(deg[part[i].second] % 2 == 0);
        }
      }
    };
    for (const auto& chain : links.chains) {
      walk(chain, false);
      CHECK(deg[chain.front().first] % 2 == 1);  // terminals are odd
      CHECK(deg[chain.back().second] % 2 == 1);
    }
    for (const auto& cyc : links.cycles) walk(cyc, true);
    CHECK(seen.size() == b.base.paths.size());

    CHECK(links.n_o1 == b.n_o1);
    CHECK(links.n_o2 == b.n_o2);
    CHECK(links.n_o1 + links.n_o2 == degree_profile(h).n_o);
  }
}
