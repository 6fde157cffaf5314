#include "pathdec/layered.hpp"

#include <algorithm>
#include <vector>

namespace pathdec {

std::vector<int> absorbed_first_end(int m) {
  std::vector<int> idx;
  if (m % 2 == 0)
    for (int i = 2; i <= m - 2; i += 2) idx.push_back(i);
  else
    for (int i = 2; i <= m - 1; i += 2) idx.push_back(i);
  return idx;
}

std::vector<int> absorbed_second_end(int m) {
  std::vector<int> idx;
  if (m % 2 == 0)
    for (int i = 1; i <= m - 1; i += 2) idx.push_back(i);
  else
    for (int i = 1; i <= m - 2; i += 2) idx.push_back(i);
  return idx;
}

namespace {

std::vector<int> complement_in_rungs(const std::vector<int>& set, int m) {
  std::vector<int> out;
  for (int i = 1; i <= m - 1; ++i)
    if (!std::binary_search(set.begin(), set.end(), i)) out.push_back(i);
  return out;
}

}  // namespace

Decomposition layered_from_linking(int m, const Graph& h,
                                   const BalancedDecomposition& b,
                                   const LinkingStructure& links) {
  if (m < 2) throw Error(errc::bad_order, "path factor needs order >= 2");
  Graph host = cartesian_product(path_graph(m), h);
  auto flat = [&](int layer, VertexId v) {  // layer is 0-based here
    return product_vertex(layer, v, h.n);
  };

  auto a_first = absorbed_first_end(m);
  auto a_second = absorbed_second_end(m);
  std::vector<int> left_first = complement_in_rungs(a_first, m);
  std::vector<int> left_second = complement_in_rungs(a_second, m);

  // Layer copies of an oriented factor path, traversed forward on odd layers
  // and backward on even ones so consecutive copies meet exactly at the rung
  // the index tables assign to that junction.
  auto snake = [&](const PathLink& link) {
    PathSeq seq = b.base.paths[link.path];
    if (seq.front() != link.first) std::reverse(seq.begin(), seq.end());
    PathSeq out;
    out.reserve(seq.size() * m);
    for (int layer = 1; layer <= m; ++layer) {
      if (layer % 2 == 1)
        for (VertexId v : seq) out.push_back(flat(layer - 1, v));
      else
        for (auto it = seq.rbegin(); it != seq.rend(); ++it)
          out.push_back(flat(layer - 1, *it));
      if (layer < m) {
        bool at_second = layer % 2 == 1;
        const auto& table = at_second ? a_second : a_first;
        if (!std::binary_search(table.begin(), table.end(), layer))
          throw Error(errc::invariant_violation, "rung tables disagree");
      }
    }
    return out;
  };
  auto rung = [&](int i, VertexId v) {  // 1-based rung index
    return PathSeq{flat(i - 1, v), flat(i, v)};
  };

  std::vector<PathSeq> paths;
  for (const auto& chain : links.chains) {
    for (const auto& link : chain) paths.push_back(snake(link));
    for (int i : left_first) paths.push_back(rung(i, chain.front().first));
    for (int i : left_second) paths.push_back(rung(i, chain.back().second));
  }
  for (const auto& cycle : links.cycles)
    for (const auto& link : cycle) paths.push_back(snake(link));

  return {std::move(host), std::move(paths), Method::layered};
}

Decomposition decompose_path_product(int m, const Graph& h,
                                     const OracleBudget& budget) {
  if (m < 2) throw Error(errc::bad_order, "path factor needs order >= 2");
  if (!is_connected(h)) throw Error(errc::not_connected, "second factor is disconnected");
  auto b = balanced_decomposition(h, budget);
  auto links = linking_structure(h, b);
  return layered_from_linking(m, h, b, links);
}

Decomposition decompose_path_even_product(int m, const Graph& h,
                                          const OracleBudget& budget) {
  if (m < 2) throw Error(errc::bad_order, "path factor needs order >= 2");
  if (!is_connected(h)) throw Error(errc::not_connected, "second factor is disconnected");
  if (h.edges.empty()) throw Error(errc::edgeless_graph, "no edges to decompose");
  if (degree_profile(h).n_o != 0)
    throw Error(errc::not_even_graph, "second factor has an odd vertex");
  Decomposition d = decompose_path_product(m, h, budget);
  // All linking components are cycles, so the count collapses to n(h).
  if (static_cast<int>(d.paths.size()) != h.n)
    throw Error(errc::invariant_violation, "even-factor count is off");
  return d;
}

Decomposition decompose_grid(int n, int t) {
  if (n < 1 || t < 1) throw Error(errc::invalid_params, "grid sides must be >= 1");
  if (std::max(n, t) < 4)
    throw Error(errc::too_small, "needs max(n,t) >= 4; use the exact search");
  Graph host = cartesian_product(path_graph(n), path_graph(t));
  const bool swapped = n < 4;
  const int rows = swapped ? t : n;  // the side with >= 4 vertices
  const int cols = swapped ? n : t;
  // 1-based (row, col) in construction space to a flat host id.
  auto at = [&](int i, int j) {
    int a = swapped ? j - 1 : i - 1;
    int b = swapped ? i - 1 : j - 1;
    return product_vertex(a, b, t);
  };

  std::vector<PathSeq> paths;
  if (cols == 1) {
    PathSeq row;
    for (int i = 1; i <= rows; ++i) row.push_back(at(i, 1));
    paths.push_back(std::move(row));
    return {std::move(host), std::move(paths), Method::grid};
  }

  // Boundary path: hook at (2,1), up the first column, across the last row,
  // down the last column, hook(s) back into the first row.
  PathSeq boundary;
  boundary.push_back(at(2, 1));
  boundary.push_back(at(1, 1));
  for (int j = 2; j <= cols; ++j) boundary.push_back(at(1, j));
  for (int i = 2; i <= rows; ++i) boundary.push_back(at(i, cols));
  for (int j = cols - 1; j >= 1; --j) boundary.push_back(at(rows, j));
  boundary.push_back(at(rows - 1, 1));
  if (rows % 2 == 1) boundary.push_back(at(rows - 2, 1));
  paths.push_back(std::move(boundary));

  // Column pairs covered by one comb each: down row-pair i, across, back up.
  const int comb_last = rows % 2 == 0 ? rows - 2 : rows - 3;
  for (int i = 2; i <= comb_last; i += 2) {
    PathSeq comb;
    for (int j = cols; j >= 1; --j) comb.push_back(at(i, j));
    for (int j = 1; j <= cols; ++j) comb.push_back(at(i + 1, j));
    paths.push_back(std::move(comb));
  }

  // Leftover single rungs in the first column.
  const int single_last = rows % 2 == 0 ? rows - 3 : rows - 4;
  for (int i = 3; i <= single_last; i += 2)
    paths.push_back({at(i, 1), at(i + 1, 1)});

  // Odd side count leaves one full column path next to the boundary hook.
  if (rows % 2 == 1) {
    PathSeq col;
    for (int j = 1; j <= cols; ++j) col.push_back(at(rows - 1, j));
    paths.push_back(std::move(col));
  }

  // Straight interior rows.
  for (int j = 2; j <= cols - 1; ++j) {
    PathSeq row;
    for (int i = 1; i <= rows; ++i) row.push_back(at(i, j));
    paths.push_back(std::move(row));
  }

  if (static_cast<int>(paths.size()) != rows + cols - 4)
    throw Error(errc::invariant_violation, "grid construction count is off");
  return {std::move(host), std::move(paths), Method::grid};
}

}  // namespace pathdec
