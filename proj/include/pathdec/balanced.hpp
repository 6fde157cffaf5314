#pragma once

#include "pathdec/exact.hpp"

namespace pathdec {

// A decomposition in which every odd vertex ends exactly one path and every
// even vertex ends exactly two, of size n_o/2 + n_e.  n_o1 counts the odd
// ends of odd-odd paths, n_o2 the odd ends of odd-even paths; together they
// account for every odd vertex.
struct BalancedDecomposition {
  Decomposition base;
  std::vector<int> end_count;  // per vertex
  int n_o1 = 0;
  int n_o2 = 0;
};

// One path of a chain or cycle, oriented: `first` and `second` are its end
// vertices in walk order, so link j meets link j+1 at link j's `second`.
struct PathLink {
  int path = -1;
  VertexId first = -1;
  VertexId second = -1;
};

// Joining the paths of a balanced decomposition at shared end vertices gives
// an auxiliary multigraph where odd vertices have degree 1 and even vertices
// degree 2.  Its components are open chains (odd terminal to odd terminal
// through even joints) and closed cycles (even joints only).
struct LinkingStructure {
  std::vector<std::vector<PathLink>> chains;
  std::vector<std::vector<PathLink>> cycles;
  int n_o1 = 0;  // ends of singleton chains
  int n_o2 = 0;  // ends of longer chains
};

// Builds the balanced decomposition by decomposing the graph obtained from h
// by attaching one pendant vertex to each even vertex, stripping the pendant
// edges, and splitting a path at every even vertex left without an end.
BalancedDecomposition balanced_decomposition(const Graph& h,
                                             const OracleBudget& budget = {});

LinkingStructure linking_structure(const Graph& h, const BalancedDecomposition& b);

}  // namespace pathdec
