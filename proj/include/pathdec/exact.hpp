#pragma once

#include <chrono>
#include <optional>

#include "pathdec/decomposition.hpp"

namespace pathdec {

struct OracleBudget {
  long long max_nodes = 20'000'000;
  std::chrono::duration<double> max_time{60.0};
};

struct OracleResult {
  int p = 0;
  Decomposition witness;
  long long nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
  // True when minimality is certified: the search tree was exhausted, or the
  // incumbent matches the additive per-component lower bound.
  bool optimal = false;
  // True when node or time budget stopped the search early.
  bool budget_hit = false;
};

// Exact minimum path decomposition by depth-first branch and bound.  The next
// path is always seeded on the smallest uncovered edge and grown first from
// its lower end, then from the other, so identical inputs yield identical
// witnesses.  Branches are cut when the committed count plus the residual
// per-component bound cannot beat the incumbent.  On budget exhaustion the
// best decomposition found so far is returned with optimal = false.
//
// When `target` is set the search stops as soon as a decomposition with at
// most that many paths is found (used where a count is guaranteed to exist).
OracleResult min_path_decomposition(const Graph& g, const OracleBudget& budget = {},
                                    std::optional<int> target = {});

// Decomposes a connected graph with all degrees odd into exactly n/2 paths
// via a target-bounded exact search; such a decomposition always exists.
Decomposition decompose_odd_graph(const Graph& g, const OracleBudget& budget = {});

}  // namespace pathdec
