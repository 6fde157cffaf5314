#include "pathdec/product.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace pathdec {

namespace {

std::string vertex_str(VertexId v) { return std::to_string(v); }

// Real positions of a virtual-real path, in order along the path.
std::vector<int> real_positions(const VirtualRealPath& q) {
  std::vector<int> pos;
  for (size_t i = 0; i < q.vertices.size(); ++i)
    if (q.real[i]) pos.push_back(static_cast<int>(i));
  return pos;
}

// Sorted edge multiset of a path list; duplicates surface as equal neighbors.
std::vector<EdgePair> collect_edges(const std::vector<PathSeq>& paths) {
  std::vector<EdgePair> all;
  for (const auto& p : paths)
    for (size_t i = 0; i + 1 < p.size(); ++i)
      all.push_back(canonical_edge(p[i], p[i + 1]));
  std::sort(all.begin(), all.end());
  return all;
}

void check_partition(const Graph& host, const std::vector<PathSeq>& paths) {
  auto all = collect_edges(paths);
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(errc::invariant_violation, "blocks overlap on an edge");
  if (all != host.edges)
    throw Error(errc::invariant_violation, "blocks do not cover the host");
}

}  // namespace

RealAssignment assign_virtual_real(const Graph& g, const Decomposition& d,
                                   std::optional<unsigned> shuffle_seed) {
  VerifyReport rep = verify(g, d);
  if (!rep.valid)
    throw Error(errc::invariant_violation, "decomposition does not verify");
  auto prof = degree_profile(g);
  if (rep.path_count != prof.n_o / 2)
    throw Error(errc::not_tight_decomposition,
                std::to_string(rep.path_count) + " paths, need n_o/2 = " +
                    std::to_string(prof.n_o / 2));

  int npaths = rep.path_count;
  std::vector<int> home(g.n, -1);
  std::vector<std::vector<int>> containing(g.n);
  for (int i = 0; i < npaths; ++i)
    for (VertexId v : d.paths[i]) containing[v].push_back(i);
  // Odd vertices live where they end; a tight decomposition gives each odd
  // vertex exactly one end and even vertices none.
  std::vector<int> end_count(g.n, 0);
  for (int i = 0; i < npaths; ++i) {
    const PathSeq& p = d.paths[i];
    ++end_count[p.front()];
    ++end_count[p.back()];
    if (prof.degrees[p.front()] % 2 == 1) home[p.front()] = i;
    if (prof.degrees[p.back()] % 2 == 1) home[p.back()] = i;
  }
  std::mt19937 rng(shuffle_seed.value_or(0));
  for (int v = 0; v < g.n; ++v) {
    if (prof.degrees[v] % 2 == 1) {
      if (end_count[v] != 1 || home[v] < 0)
        throw Error(errc::odd_vertex_not_an_end,
                    "odd vertex " + vertex_str(v) + " ends " +
                        std::to_string(end_count[v]) + " paths");
    } else {
      if (containing[v].empty())
        throw Error(errc::invariant_violation,
                    "vertex " + vertex_str(v) + " appears in no path");
      if (shuffle_seed)
        home[v] = containing[v][rng() % containing[v].size()];
      else
        home[v] = containing[v].front();
    }
  }

  RealAssignment out;
  out.real_home = home;
  out.paths.resize(npaths);
  int real_total = 0;
  for (int i = 0; i < npaths; ++i) {
    out.paths[i].vertices = d.paths[i];
    out.paths[i].real.resize(d.paths[i].size());
    for (size_t k = 0; k < d.paths[i].size(); ++k) {
      bool r = home[d.paths[i][k]] == i;
      out.paths[i].real[k] = r;
      real_total += r;
    }
    if (!out.paths[i].real.front() || !out.paths[i].real.back())
      throw Error(errc::invariant_violation,
                  "path " + std::to_string(i) + " has a virtual end");
  }
  if (real_total != g.n)
    throw Error(errc::invariant_violation, "real vertices do not sum to n");
  return out;
}

SubdivisionMap identity_correspondence(const Graph& g) {
  SubdivisionMap corr;
  corr.host = g;
  corr.vertex_map.resize(g.n);
  for (int v = 0; v < g.n; ++v) corr.vertex_map[v] = v;
  for (const auto& [u, v] : g.edges) corr.edge_paths[{u, v}] = {u, v};
  return corr;
}

Decomposition expand_subdivision(const Decomposition& d, const SubdivisionMap& corr) {
  if (static_cast<int>(corr.vertex_map.size()) != d.host.n)
    throw Error(errc::correspondence_mismatch, "vertex map size mismatch");
  Decomposition out;
  out.host = corr.host;
  out.method = d.method;
  for (const auto& p : d.paths) {
    if (p.empty()) throw Error(errc::correspondence_mismatch, "empty path");
    PathSeq q{corr.vertex_map[p.front()]};
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      VertexId a = p[i], b = p[i + 1];
      auto it = corr.edge_paths.find(canonical_edge(a, b));
      if (it == corr.edge_paths.end())
        throw Error(errc::correspondence_mismatch,
                    "no replacement for edge (" + vertex_str(a) + "," +
                        vertex_str(b) + ")");
      const PathSeq& rep = it->second;
      VertexId from = corr.vertex_map[a], to = corr.vertex_map[b];
      if (rep.front() == from && rep.back() == to) {
        q.insert(q.end(), rep.begin() + 1, rep.end());
      } else if (rep.front() == to && rep.back() == from) {
        q.insert(q.end(), rep.rbegin() + 1, rep.rend());
      } else {
        throw Error(errc::correspondence_mismatch,
                    "replacement ends do not match edge (" + vertex_str(a) +
                        "," + vertex_str(b) + ")");
      }
    }
    out.paths.push_back(std::move(q));
  }
  return out;
}

namespace {

// Correspondence from a block product (layers x h) to the host g x h: layer
// j stands for the j-th real vertex of q, and each rung stretches through the
// virtual vertices between consecutive reals.
SubdivisionMap block_correspondence(const Graph& block_host, const Graph& host,
                                    const VirtualRealPath& q,
                                    const std::vector<int>& reals, int h_order) {
  SubdivisionMap corr;
  corr.host = host;
  int k = static_cast<int>(reals.size());
  corr.vertex_map.resize(block_host.n);
  for (int j = 0; j < k; ++j)
    for (int v = 0; v < h_order; ++v)
      corr.vertex_map[product_vertex(j, v, h_order)] =
          product_vertex(q.vertices[reals[j]], v, h_order);
  for (const auto& [x, y] : block_host.edges) {
    int jx = x / h_order, vx = x % h_order;
    int jy = y / h_order;
    PathSeq rep;
    if (jx == jy) {
      rep = {corr.vertex_map[x], corr.vertex_map[y]};
    } else {  // rung: walk the factor path between the two reals
      for (int pos = reals[jx]; pos <= reals[jy]; ++pos)
        rep.push_back(product_vertex(q.vertices[pos], vx, h_order));
    }
    corr.edge_paths[{x, y}] = std::move(rep);
  }
  return corr;
}

}  // namespace

Decomposition decompose_product(const Graph& g, const Graph& h,
                                const Decomposition& d_g,
                                std::optional<unsigned> real_seed,
                                const OracleBudget& budget) {
  if (g.n < 2) throw Error(errc::invalid_params, "first factor needs order >= 2");
  if (!is_connected(g) || !is_connected(h))
    throw Error(errc::not_connected, "both factors must be connected");
  RealAssignment assign = assign_virtual_real(g, d_g, real_seed);
  Graph host = cartesian_product(g, h);
  if (h.n == 1)  // g x K_1 is g itself under identical flat ids
    return {std::move(host), d_g.paths, Method::virtual_real};

  auto b = balanced_decomposition(h, budget);
  auto links = linking_structure(h, b);
  std::vector<PathSeq> paths;
  for (const auto& q : assign.paths) {
    auto reals = real_positions(q);
    int k = static_cast<int>(reals.size());
    Decomposition block = layered_from_linking(k, h, b, links);
    auto corr = block_correspondence(block.host, host, q, reals, h.n);
    Decomposition expanded = expand_subdivision(block, corr);
    for (auto& p : expanded.paths) paths.push_back(std::move(p));
  }
  check_partition(host, paths);
  return {std::move(host), std::move(paths), Method::virtual_real};
}

Decomposition decompose_path_tree_product(int n, const Graph& t) {
  if (n < 4) throw Error(errc::bad_order, "needs a path factor of order >= 4");
  if (!is_tree(t) || t.n < 2)
    throw Error(errc::not_a_tree, "second factor must be a tree of order >= 2");
  Decomposition d_t = decompose_tree(t);
  RealAssignment assign = assign_virtual_real(t, d_t);
  Graph host = cartesian_product(path_graph(n), t);

  std::vector<PathSeq> paths;
  for (const auto& q : assign.paths) {
    auto reals = real_positions(q);
    int k = static_cast<int>(reals.size());
    Decomposition block = decompose_grid(n, k);
    // Columns of the grid are the real tree vertices; stretch column-to-column
    // edges through the virtual stretches of q, rows map one-to-one.
    SubdivisionMap corr;
    corr.host = host;
    corr.vertex_map.resize(block.host.n);
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < k; ++j)
        corr.vertex_map[product_vertex(a, j, k)] =
            product_vertex(a, q.vertices[reals[j]], t.n);
    for (const auto& [x, y] : block.host.edges) {
      int ax = x / k, jx = x % k;
      int jy = y % k;
      PathSeq rep;
      if (jx == jy) {
        rep = {corr.vertex_map[x], corr.vertex_map[y]};
      } else {
        for (int pos = reals[jx]; pos <= reals[jy]; ++pos)
          rep.push_back(product_vertex(ax, q.vertices[pos], t.n));
      }
      corr.edge_paths[{x, y}] = std::move(rep);
    }
    Decomposition expanded = expand_subdivision(block, corr);
    for (auto& p : expanded.paths) paths.push_back(std::move(p));
  }
  check_partition(host, paths);

  int expected = t.n + (n - 4) * degree_profile(t).n_o / 2;
  if (static_cast<int>(paths.size()) != expected)
    throw Error(errc::invariant_violation, "path-tree count is off");
  return {std::move(host), std::move(paths), Method::virtual_real};
}

}  // namespace pathdec
