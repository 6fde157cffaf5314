#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "pathdec/graph.hpp"

namespace pathdec {

namespace {

// Rejection-sampled uniform in [0, bound); avoids the stdlib distribution
// types so the same seed yields the same graph on every platform.
int bounded(std::mt19937& rng, int bound) {
  const std::uint32_t limit =
      std::mt19937::max() - std::mt19937::max() % static_cast<std::uint32_t>(bound);
  std::uint32_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<int>(r % static_cast<std::uint32_t>(bound));
}

void shuffle_ids(std::mt19937& rng, std::vector<int>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
    std::swap(v[i], v[bounded(rng, i + 1)]);
}

// Decodes a random Pruefer sequence into a labeled tree.
std::vector<EdgePair> random_tree_edges(std::mt19937& rng, int n) {
  std::vector<EdgePair> edges;
  if (n == 1) return edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = bounded(rng, n);
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back(canonical_edge(leaf, s));
    if (--deg[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.push_back(canonical_edge(a, b));
  return edges;
}

Graph random_connected_graph(std::mt19937& rng, int n) {
  auto edges = random_tree_edges(rng, n);
  std::set<EdgePair> have(edges.begin(), edges.end());
  int attempts = n >= 2 ? bounded(rng, n + 1) : 0;
  for (int i = 0; i < attempts; ++i) {
    int u = bounded(rng, n);
    int v = bounded(rng, n);
    if (u == v) continue;
    EdgePair e = canonical_edge(u, v);
    if (have.insert(e).second) edges.push_back(e);
  }
  return make_graph(n, edges);
}

Graph random_even_graph(std::mt19937& rng, int n) {
  if (n == 1) return make_graph(1, {});
  if (n < 3)
    throw Error(errc::invalid_params,
                "no connected even graph on " + std::to_string(n) + " vertices");
  // Spanning cycle keeps the graph connected with every degree even; each
  // extra vertex-disjoint-edge cycle ("closed ear") preserves both.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  shuffle_ids(rng, order);
  std::set<EdgePair> have;
  for (int i = 0; i < n; ++i)
    have.insert(canonical_edge(order[i], order[(i + 1) % n]));
  int rounds = bounded(rng, n);
  for (int r = 0; r < rounds; ++r) {
    int k = 3 + bounded(rng, std::max(1, std::min(n, 5) - 2));
    if (k > n) continue;
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    shuffle_ids(rng, pick);
    pick.resize(k);
    bool fresh = true;
    for (int i = 0; i < k && fresh; ++i)
      fresh = !have.count(canonical_edge(pick[i], pick[(i + 1) % k]));
    if (!fresh) continue;
    for (int i = 0; i < k; ++i)
      have.insert(canonical_edge(pick[i], pick[(i + 1) % k]));
  }
  Graph g = make_graph(n, {have.begin(), have.end()});
  auto prof = degree_profile(g);
  if (prof.n_o != 0 || !is_connected(g))
    throw Error(errc::generation_failed, "even generator postcondition");
  return g;
}

Graph random_odd_graph(std::mt19937& rng, int n) {
  if (n < 2 || n % 2 != 0)
    throw Error(errc::invalid_params,
                "odd graphs need an even order >= 2, got " + std::to_string(n));
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto edges = random_tree_edges(rng, n);
    std::set<EdgePair> have(edges.begin(), edges.end());
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    // Pair up even vertices with new edges until every degree is odd.
    bool stuck = false;
    while (!stuck) {
      std::vector<int> evens;
      for (int v = 0; v < n; ++v)
        if (deg[v] % 2 == 0) evens.push_back(v);
      if (evens.empty()) break;
      shuffle_ids(rng, evens);
      int u = evens[0];
      stuck = true;
      for (size_t i = 1; i < evens.size(); ++i) {
        EdgePair e = canonical_edge(u, evens[i]);
        if (!have.count(e)) {
          have.insert(e);
          ++deg[u];
          ++deg[evens[i]];
          stuck = false;
          break;
        }
      }
    }
    if (stuck) continue;
    Graph g = make_graph(n, {have.begin(), have.end()});
    if (degree_profile(g).n_o == n && is_connected(g)) return g;
  }
  throw Error(errc::generation_failed,
              "could not build a connected odd graph on " + std::to_string(n) +
                  " vertices");
}

}  // namespace

Graph gen_family(Family kind, int n, unsigned seed) {
  if (n < 1) throw Error(errc::invalid_params, "order must be >= 1");
  std::mt19937 rng(seed);
  switch (kind) {
    case Family::path: return path_graph(n);
    case Family::cycle: return cycle_graph(n);
    case Family::star: return star_graph(n);
    case Family::random_tree: return make_graph(n, random_tree_edges(rng, n));
    case Family::random_connected: return random_connected_graph(rng, n);
    case Family::random_even: return random_even_graph(rng, n);
    case Family::random_odd: return random_odd_graph(rng, n);
  }
  throw Error(errc::invalid_params, "unknown family");
}

}  // namespace pathdec
