#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pathdec/error.hpp"

namespace pathdec {

using VertexId = int;
using EdgePair = std::pair<VertexId, VertexId>;  // canonical: first < second

inline EdgePair canonical_edge(VertexId a, VertexId b) {
  return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

// Simple undirected graph with dense vertex ids [0, n).  Immutable after
// construction; all operations below return new graphs.  Product graphs keep
// the (factor-1 id, factor-2 id) of every vertex in `labels`; other graphs
// leave `labels` empty.
struct Graph {
  int n = 0;
  std::vector<EdgePair> edges;   // sorted, deduplicated, first < second
  std::vector<EdgePair> labels;  // empty, or exactly one pair per vertex

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(VertexId a, VertexId b) const;
  std::vector<int> degrees() const;
  std::vector<std::vector<VertexId>> adjacency() const;  // sorted neighbors
};

// Structural equality: same order and edge set (labels ignored).
bool same_structure(const Graph& a, const Graph& b);

struct DegreeProfile {
  int n_o = 0;         // vertices of odd degree (always even by handshake)
  int n_e = 0;         // vertices of even degree
  int max_degree = 0;
  std::vector<int> degrees;
};

Graph make_graph(int n, const std::vector<EdgePair>& edges);

// Vertex (a, b) of g x h gets the flat id a * n(h) + b, recorded in labels.
Graph cartesian_product(const Graph& g, const Graph& h);

inline VertexId product_vertex(int a, int b, int h_order) {
  return a * h_order + b;
}

// Replace edge e by a two-edge path through a fresh vertex (id = n).
// The result carries no labels.
Graph subdivide(const Graph& g, EdgePair e);

DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // K_{1,n-1} with center 0

enum class Family {
  path,
  cycle,
  star,
  random_tree,
  random_connected,
  random_even,  // connected, every degree even
  random_odd,   // connected, every degree odd
};

// Deterministic for a fixed (kind, n, seed).
Graph gen_family(Family kind, int n, unsigned seed = 0);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// Malformed input raises parse_error with the offending line number.
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

}  // namespace pathdec
