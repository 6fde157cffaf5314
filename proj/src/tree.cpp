#include "pathdec/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

namespace pathdec {

Decomposition decompose_tree(const Graph& t) {
  if (!is_tree(t)) throw Error(errc::not_a_tree, "input is not a tree");
  if (t.n == 1) return {t, {}, Method::tree};

  // Peel lowest-id leaves down to a single vertex, remembering attachments.
  auto adj = t.adjacency();
  std::vector<int> deg = t.degrees();
  std::vector<char> alive(t.n, 1);
  std::set<int> leaves;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<std::pair<int, int>> removed;  // (leaf, neighbor)
  removed.reserve(t.n - 1);
  while (static_cast<int>(removed.size()) < t.n - 1) {
    int u = *leaves.begin();
    leaves.erase(leaves.begin());
    alive[u] = 0;
    int v = -1;
    for (int w : adj[u])
      if (alive[w]) {
        v = w;
        break;
      }
    removed.emplace_back(u, v);
    if (--deg[v] == 1 && static_cast<int>(removed.size()) < t.n - 1)
      leaves.insert(v);
    deg[u] = 0;
  }

  // Replay attachments in reverse on the growing partial tree.
  std::vector<std::deque<VertexId>> paths;
  std::vector<int> pdeg(t.n, 0);
  std::vector<std::vector<int>> ends_at(t.n);
  auto drop_end = [&](VertexId v, int idx) {
    auto& lst = ends_at[v];
    lst.erase(std::find(lst.begin(), lst.end(), idx));
  };
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    auto [u, v] = *it;
    if (pdeg[v] % 2 == 1) {
      if (ends_at[v].size() != 1)
        throw Error(errc::invariant_violation,
                    "odd vertex " + std::to_string(v) + " should end one path");
      int idx = ends_at[v].front();
      if (paths[idx].back() == v)
        paths[idx].push_back(u);
      else
        paths[idx].push_front(u);
      drop_end(v, idx);
      ends_at[u].push_back(idx);
    } else {
      int idx = static_cast<int>(paths.size());
      paths.push_back({v, u});
      ends_at[v].push_back(idx);
      ends_at[u].push_back(idx);
    }
    ++pdeg[v];
    pdeg[u] = 1;
  }

  Decomposition d;
  d.host = t;
  d.method = Method::tree;
  for (auto& p : paths) d.paths.emplace_back(p.begin(), p.end());
  if (static_cast<int>(d.paths.size()) != degree_profile(t).n_o / 2)
    throw Error(errc::invariant_violation, "tree decomposition has wrong size");
  return d;
}

}  // namespace pathdec
