#pragma once

#include <map>
#include <optional>

#include "pathdec/layered.hpp"
#include "pathdec/tree.hpp"

namespace pathdec {

// A factor path with each vertex flagged real or virtual.  Ends are always
// real; a virtual vertex carries no second-factor layer in the product.
struct VirtualRealPath {
  PathSeq vertices;
  std::vector<char> real;  // parallel to vertices
};

struct RealAssignment {
  std::vector<VirtualRealPath> paths;
  std::vector<int> real_home;  // vertex -> index of the path where it is real
};

// For a verified decomposition of g into exactly n_o(g)/2 paths: every odd
// vertex is real on the path it ends, every even vertex on the lowest-indexed
// path containing it (or on a seeded random choice), and virtual elsewhere.
RealAssignment assign_virtual_real(const Graph& g, const Decomposition& d,
                                   std::optional<unsigned> shuffle_seed = {});

// Maps a decomposition of a contracted graph onto a host in which some edges
// were subdivided: `vertex_map` sends contracted ids to host ids and
// `edge_paths` sends each contracted edge to the host path replacing it.
struct SubdivisionMap {
  Graph host;
  std::vector<VertexId> vertex_map;
  std::map<EdgePair, PathSeq> edge_paths;
};

SubdivisionMap identity_correspondence(const Graph& g);

// Splices each edge of every path through its host replacement; the path
// count never changes.
Decomposition expand_subdivision(const Decomposition& d, const SubdivisionMap& corr);

// Decomposition of g x h from a tight decomposition of g (n_o(g)/2 paths):
// each virtual-real path contributes the layered decomposition of
// P_(reals) x h re-expanded through its virtual stretches.  Layer edges at a
// vertex of g belong to the block where that vertex is real.  At most
// ceil(n(g)*n(h)/2) paths.
Decomposition decompose_product(const Graph& g, const Graph& h,
                                const Decomposition& d_g,
                                std::optional<unsigned> real_seed = {},
                                const OracleBudget& budget = {});

// Exact decomposition of P_n x t for a tree t and n >= 4 into
// n(t) + (n-4)*n_o(t)/2 paths, matching the product's lower bound.  Blocks
// come from the grid construction instead of the generic layered one.
Decomposition decompose_path_tree_product(int n, const Graph& t);

}  // namespace pathdec
