#include "pathdec/exact.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <vector>

namespace pathdec {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
  const Graph& g;
  std::vector<std::vector<std::pair<VertexId, int>>> inc;  // vertex -> (nbr, edge idx)
  std::vector<char> used;
  std::vector<int> rdeg;  // degree in the uncovered subgraph
  int covered = 0;
  int count = 0;  // completed paths + the open one, if any

  std::deque<VertexId> open;
  std::vector<char> on_open;
  std::vector<PathSeq> finished;

  int best_p;
  std::vector<PathSeq> best_paths;
  int certificate;  // additive per-component bound of the whole graph
  std::optional<int> target;

  long long nodes = 0;
  long long max_nodes;
  Clock::time_point deadline;
  bool exhausted = false;
  bool done = false;

  Searcher(const Graph& graph, const OracleBudget& budget, std::optional<int> tgt)
      : g(graph),
        inc(graph.n),
        used(graph.edges.size(), 0),
        rdeg(graph.degrees()),
        on_open(graph.n, 0),
        target(tgt),
        max_nodes(budget.max_nodes) {
    for (int i = 0; i < g.edge_count(); ++i) {
      inc[g.edges[i].first].emplace_back(g.edges[i].second, i);
      inc[g.edges[i].second].emplace_back(g.edges[i].first, i);
    }
    for (auto& lst : inc) std::sort(lst.begin(), lst.end());
    // One path per edge is always a valid incumbent.
    best_p = g.edge_count();
    for (const auto& [u, v] : g.edges) best_paths.push_back({u, v});
    certificate = residual_bound();
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget.max_time);
  }

  int limit() const {
    int cap = best_p;
    if (target) cap = std::min(cap, *target + 1);
    return cap;
  }

  bool out_of_budget() {
    if (exhausted) return true;
    if (nodes > max_nodes || ((nodes & 0xfff) == 0 && Clock::now() > deadline)) {
      exhausted = true;
      return true;
    }
    return false;
  }

  std::vector<char> seen_buf;
  std::vector<int> stack_buf;

  // Sum over components of the uncovered subgraph of
  // max(odd_vertices/2, ceil(max_degree/2)); bounds add across components.
  int residual_bound() {
    seen_buf.assign(g.n, 0);
    auto& seen = seen_buf;
    auto& stack = stack_buf;
    int total = 0;
    for (int s = 0; s < g.n; ++s) {
      if (seen[s] || rdeg[s] == 0) continue;
      int odd = 0, maxdeg = 0;
      seen[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (rdeg[u] % 2 == 1) ++odd;
        maxdeg = std::max(maxdeg, rdeg[u]);
        for (const auto& [v, ei] : inc[u])
          if (!used[ei] && !seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
      }
      total += std::max(odd / 2, (maxdeg + 1) / 2);
    }
    return total;
  }

  void take(int ei) {
    used[ei] = 1;
    ++covered;
    --rdeg[g.edges[ei].first];
    --rdeg[g.edges[ei].second];
  }

  void give_back(int ei) {
    used[ei] = 0;
    --covered;
    ++rdeg[g.edges[ei].first];
    ++rdeg[g.edges[ei].second];
  }

  void record() {
    best_p = count;
    best_paths = finished;
    if ((target && best_p <= *target) || best_p == certificate) done = true;
  }

  void search_closed() {
    ++nodes;
    if (done || out_of_budget()) return;
    if (covered == g.edge_count()) {
      if (count < limit()) record();
      return;
    }
    if (count + residual_bound() >= limit()) return;
    // Seed the next path on the smallest uncovered edge.
    int v = 0;
    while (rdeg[v] == 0) ++v;
    int ei = -1;
    VertexId w = -1;
    for (const auto& [x, idx] : inc[v])
      if (!used[idx]) {
        w = x;
        ei = idx;
        break;
      }
    take(ei);
    open = {v, w};
    on_open[v] = on_open[w] = 1;
    ++count;
    search_open(true);
    --count;
    on_open[v] = on_open[w] = 0;
    open.clear();
    give_back(ei);
  }

  // Grows the open path: all extensions at the seed-edge's lower end first,
  // then all at the other end, so every simple path through the seed edge is
  // generated exactly once.
  void search_open(bool front_phase) {
    ++nodes;
    if (done || out_of_budget()) return;
    // The open path may still absorb residual edges at its growable ends.
    int slack = front_phase ? 2 : 1;
    if (count + std::max(0, residual_bound() - slack) >= limit()) return;
    VertexId end = front_phase ? open.front() : open.back();
    for (const auto& [x, ei] : inc[end]) {
      if (used[ei] || on_open[x]) continue;
      take(ei);
      on_open[x] = 1;
      if (front_phase)
        open.push_front(x);
      else
        open.push_back(x);
      search_open(front_phase);
      if (front_phase)
        open.pop_front();
      else
        open.pop_back();
      on_open[x] = 0;
      give_back(ei);
      if (done || exhausted) return;
    }
    if (front_phase) {
      search_open(false);
      return;
    }
    // Close the open path and start the next one.
    PathSeq closed(open.begin(), open.end());
    for (VertexId v : closed) on_open[v] = 0;
    finished.push_back(closed);
    std::deque<VertexId> saved;
    saved.swap(open);
    search_closed();
    open.swap(saved);
    finished.pop_back();
    for (VertexId v : closed) on_open[v] = 1;
  }
};

}  // namespace

OracleResult min_path_decomposition(const Graph& g, const OracleBudget& budget,
                                    std::optional<int> target) {
  if (budget.max_nodes <= 0 || budget.max_time.count() <= 0)
    throw Error(errc::invalid_params, "budget must be positive");
  auto t0 = Clock::now();
  OracleResult res;
  if (g.edges.empty()) {
    res.p = 0;
    res.witness = {g, {}, Method::exact};
    res.optimal = true;
    res.elapsed = Clock::now() - t0;
    return res;
  }
  Searcher s(g, budget, target);
  if (!(target && s.best_p <= *target)) s.search_closed();
  res.p = s.best_p;
  res.witness = {g, s.best_paths, Method::exact};
  res.nodes_explored = s.nodes;
  res.elapsed = Clock::now() - t0;
  // Minimality is proven by the additive bound, by exhausting the tree, or --
  // under a target cap -- by exhausting a tree cut against target+1 while the
  // incumbent sits exactly at target+1.
  bool certified = s.best_p == s.certificate;
  bool complete = !s.exhausted && !s.done;
  if (!target)
    res.optimal = certified || complete;
  else
    res.optimal = certified || (complete && s.best_p == *target + 1);
  res.budget_hit = s.exhausted;
  return res;
}

Decomposition decompose_odd_graph(const Graph& g, const OracleBudget& budget) {
  if (!is_connected(g)) throw Error(errc::not_connected, "graph is disconnected");
  auto prof = degree_profile(g);
  if (prof.n_o != g.n)
    throw Error(errc::not_odd_graph, "a vertex of even degree is present");
  int target = g.n / 2;
  OracleResult res = min_path_decomposition(g, budget, target);
  if (res.p > target) {
    if (res.budget_hit)
      throw Error(errc::budget_exhausted,
                  "target of " + std::to_string(target) + " paths not reached");
    throw Error(errc::invariant_violation,
                "odd graph refused its guaranteed decomposition size");
  }
  return res.witness;
}

}  // namespace pathdec
