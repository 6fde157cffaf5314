#pragma once

#include "pathdec/decomposition.hpp"

namespace pathdec {

// Decomposes a tree into exactly n_o/2 paths.  Vertices are re-attached in
// reverse leaf-pruning order; a leaf joining a neighbor of odd partial degree
// extends the one path ending there, otherwise the new edge starts a path.
// Every odd vertex of the tree ends exactly one of the produced paths.
Decomposition decompose_tree(const Graph& t);

}  // namespace pathdec
