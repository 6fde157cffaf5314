#pragma once

#include "pathdec/balanced.hpp"

namespace pathdec {

// Decomposition of P_m x h built from a balanced decomposition of h.  Each
// factor path yields one "snake" threading all m layer copies, joined by a
// rung at alternating ends between consecutive layers.  At an even joint the
// two incident chain/cycle paths split the m-1 rungs between them; at an odd
// chain terminal the rungs the snake skips are emitted as single-edge paths.
// Total: m*n_o(h)/2 + n_e(h) paths, at most m*n(h)/2.
Decomposition decompose_path_product(int m, const Graph& h,
                                     const OracleBudget& budget = {});

// Same construction driven by an already-computed balanced decomposition;
// lets callers reuse one balanced decomposition across several widths.
Decomposition layered_from_linking(int m, const Graph& h,
                                   const BalancedDecomposition& b,
                                   const LinkingStructure& links);

// Exact decomposition of the grid P_n x P_t into n+t-4 paths when both sides
// have at least two vertices (one row path when t = 1).  Requires
// max(n, t) >= 4; the factors are swapped internally when needed.
Decomposition decompose_grid(int n, int t);

// For h connected with every degree even: exactly n(h) paths, matching the
// lower bound of the product.
Decomposition decompose_path_even_product(int m, const Graph& h,
                                          const OracleBudget& budget = {});

// Rung index sets of the construction, 1-based: rung i joins layers i and
// i+1.  A snake absorbs the rungs at its first end for indices in
// `absorbed_first_end` and at its second end for `absorbed_second_end`;
// complements within [1, m-1] are left over at odd chain terminals.
std::vector<int> absorbed_first_end(int m);
std::vector<int> absorbed_second_end(int m);

}  // namespace pathdec
