#include "pathdec/balanced.hpp"

#include <algorithm>
#include <vector>

namespace pathdec {

namespace {

// Odd ends of odd-odd paths vs odd ends of odd-even paths.
void count_odd_ends(const Graph& h, const std::vector<PathSeq>& paths, int& n_o1,
                    int& n_o2) {
  auto deg = h.degrees();
  n_o1 = 0;
  n_o2 = 0;
  for (const auto& p : paths) {
    bool a_odd = deg[p.front()] % 2 == 1;
    bool b_odd = deg[p.back()] % 2 == 1;
    if (a_odd && b_odd)
      n_o1 += 2;
    else if (a_odd != b_odd)
      n_o2 += 1;
  }
}

}  // namespace

BalancedDecomposition balanced_decomposition(const Graph& h,
                                             const OracleBudget& budget) {
  if (h.edges.empty()) throw Error(errc::edgeless_graph, "no edges to decompose");
  if (!is_connected(h)) throw Error(errc::not_connected, "graph is disconnected");
  auto prof = degree_profile(h);

  std::vector<PathSeq> paths;
  if (prof.n_e == 0) {
    paths = decompose_odd_graph(h, budget).paths;
  } else {
    // Attach a pendant vertex to each even vertex; the augmented graph is odd
    // and splits into (n_o + 2 n_e)/2 paths, each vertex ending exactly one.
    std::vector<EdgePair> aug = h.edges;
    int next = h.n;
    for (int v = 0; v < h.n; ++v)
      if (prof.degrees[v] % 2 == 0) aug.emplace_back(v, next++);
    Graph augmented = make_graph(next, aug);
    Decomposition whole = decompose_odd_graph(augmented, budget);
    // Pendant vertices have degree 1, so they only ever sit at path ends.
    for (auto p : whole.paths) {
      if (p.front() >= h.n) p.erase(p.begin());
      if (!p.empty() && p.back() >= h.n) p.pop_back();
      if (p.size() >= 2) paths.push_back(std::move(p));
    }
  }

  auto ends_of = [&](const std::vector<PathSeq>& ps) {
    std::vector<int> ec(h.n, 0);
    for (const auto& p : ps) {
      ++ec[p.front()];
      ++ec[p.back()];
    }
    return ec;
  };
  std::vector<int> ec = ends_of(paths);
  for (int v = 0; v < h.n; ++v) {
    if (prof.degrees[v] % 2 == 1) {
      if (ec[v] != 1)
        throw Error(errc::invariant_violation,
                    "odd vertex " + std::to_string(v) + " ends " +
                        std::to_string(ec[v]) + " paths");
    } else if (ec[v] == 1) {
      throw Error(errc::invariant_violation,
                  "even vertex " + std::to_string(v) + " ends exactly one path");
    }
  }

  // Every even vertex without an end lies inside some path; split there.
  for (int v = 0; v < h.n; ++v) {
    if (prof.degrees[v] % 2 != 0 || ec[v] != 0) continue;
    bool split = false;
    for (size_t idx = 0; idx < paths.size() && !split; ++idx) {
      PathSeq& p = paths[idx];
      for (size_t pos = 1; pos + 1 < p.size(); ++pos) {
        if (p[pos] != v) continue;
        PathSeq tail(p.begin() + pos, p.end());
        p.resize(pos + 1);
        paths.push_back(std::move(tail));
        split = true;
        break;
      }
    }
    if (!split)
      throw Error(errc::invariant_violation,
                  "even vertex " + std::to_string(v) + " missing from all paths");
    ec[v] = 2;
  }

  if (static_cast<int>(paths.size()) != prof.n_o / 2 + prof.n_e)
    throw Error(errc::invariant_violation,
                "balanced decomposition has the wrong size");

  BalancedDecomposition out;
  out.base = {h, std::move(paths), Method::balanced};
  out.end_count = ends_of(out.base.paths);
  count_odd_ends(h, out.base.paths, out.n_o1, out.n_o2);
  return out;
}

LinkingStructure linking_structure(const Graph& h, const BalancedDecomposition& b) {
  auto deg = h.degrees();
  int npaths = static_cast<int>(b.base.paths.size());
  std::vector<std::vector<int>> links_at(h.n);  // vertex -> incident path indices
  for (int i = 0; i < npaths; ++i) {
    const PathSeq& p = b.base.paths[i];
    if (p.size() < 2)
      throw Error(errc::invariant_violation, "trivial path in balanced input");
    links_at[p.front()].push_back(i);
    links_at[p.back()].push_back(i);
  }
  for (int v = 0; v < h.n; ++v) {
    int expect = deg[v] == 0 ? 0 : (deg[v] % 2 == 1 ? 1 : 2);
    if (static_cast<int>(links_at[v].size()) != expect)
      throw Error(errc::invariant_violation,
                  "vertex " + std::to_string(v) + " joins " +
                      std::to_string(links_at[v].size()) + " paths, expected " +
                      std::to_string(expect));
  }

  LinkingStructure out;
  std::vector<char> used(npaths, 0);
  auto other_end = [&](int i, VertexId at) {
    const PathSeq& p = b.base.paths[i];
    return p.front() == at ? p.back() : p.front();
  };
  auto next_link = [&](VertexId at) {
    for (int i : links_at[at])
      if (!used[i]) return i;
    return -1;
  };

  // Open walks first: start from each odd vertex in ascending order.
  for (int v = 0; v < h.n; ++v) {
    if (deg[v] % 2 == 0) continue;
    int i = next_link(v);
    if (i < 0) continue;  // this odd vertex terminates an earlier chain
    std::vector<PathLink> chain;
    VertexId at = v;
    while (i >= 0) {
      used[i] = 1;
      VertexId to = other_end(i, at);
      chain.push_back({i, at, to});
      at = to;
      if (deg[at] % 2 == 1) break;
      i = next_link(at);
      if (i < 0)
        throw Error(errc::invariant_violation, "chain ran out at an even vertex");
    }
    out.chains.push_back(std::move(chain));
  }
  // Remaining links all sit on even vertices and close into cycles.
  for (int v = 0; v < h.n; ++v) {
    int i;
    while ((i = next_link(v)) >= 0) {
      std::vector<PathLink> cyc;
      VertexId at = v;
      do {
        used[i] = 1;
        VertexId to = other_end(i, at);
        cyc.push_back({i, at, to});
        at = to;
        i = next_link(at);
        if (at != v && i < 0)
          throw Error(errc::invariant_violation, "cycle walk ran out of links");
      } while (at != v);
      out.cycles.push_back(std::move(cyc));
    }
  }

  int consumed = 0;
  for (const auto& c : out.chains) consumed += static_cast<int>(c.size());
  for (const auto& c : out.cycles) consumed += static_cast<int>(c.size());
  if (consumed != npaths)
    throw Error(errc::invariant_violation, "linking walk missed a path");
  for (const auto& c : out.chains)
    out.n_o1 += c.size() == 1 ? 2 : 0;
  out.n_o2 = 2 * static_cast<int>(out.chains.size()) - out.n_o1;
  return out;
}

}  // namespace pathdec
