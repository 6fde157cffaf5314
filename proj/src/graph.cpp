#include "pathdec/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <vector>

namespace pathdec {

const char* errc_name(errc c) {
  switch (c) {
    case errc::endpoint_out_of_range: return "EndpointOutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::empty_factor: return "EmptyFactor";
    case errc::edge_not_present: return "EdgeNotPresent";
    case errc::invalid_params: return "InvalidParams";
    case errc::generation_failed: return "GenerationFailed";
    case errc::parse_error: return "ParseError";
    case errc::host_mismatch: return "HostMismatch";
    case errc::trivial_path: return "TrivialPath";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::not_odd_graph: return "NotOddGraph";
    case errc::not_connected: return "NotConnected";
    case errc::edgeless_graph: return "EdgelessGraph";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::not_a_tree: return "NotATree";
    case errc::bad_order: return "BadOrder";
    case errc::too_small: return "TooSmall";
    case errc::not_even_graph: return "NotEvenGraph";
    case errc::not_tight_decomposition: return "NotTightDecomposition";
    case errc::odd_vertex_not_an_end: return "OddVertexNotAnEnd";
    case errc::correspondence_mismatch: return "CorrespondenceMismatch";
  }
  return "UnknownError";
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a == b) return false;
  return std::binary_search(edges.begin(), edges.end(), canonical_edge(a, b));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<VertexId>> Graph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

bool same_structure(const Graph& a, const Graph& b) {
  return a.n == b.n && a.edges == b.edges;
}

Graph make_graph(int n, const std::vector<EdgePair>& edges) {
  if (n < 0) throw Error(errc::invalid_params, "negative vertex count");
  Graph g;
  g.n = n;
  g.edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b)
      throw Error(errc::self_loop, "loop at vertex " + std::to_string(a));
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(errc::endpoint_out_of_range,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") outside [0," + std::to_string(n) + ")");
    g.edges.push_back(canonical_edge(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.n == 0 || h.n == 0)
    throw Error(errc::empty_factor, "both factors need at least one vertex");
  Graph p;
  p.n = g.n * h.n;
  p.edges.reserve(static_cast<size_t>(g.n) * h.edges.size() +
                  static_cast<size_t>(h.n) * g.edges.size());
  for (const auto& [a, b] : g.edges)
    for (int v = 0; v < h.n; ++v)
      p.edges.emplace_back(product_vertex(a, v, h.n), product_vertex(b, v, h.n));
  for (const auto& [v, w] : h.edges)
    for (int a = 0; a < g.n; ++a)
      p.edges.emplace_back(product_vertex(a, v, h.n), product_vertex(a, w, h.n));
  std::sort(p.edges.begin(), p.edges.end());
  p.labels.resize(p.n);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < h.n; ++b) p.labels[product_vertex(a, b, h.n)] = {a, b};
  return p;
}

Graph subdivide(const Graph& g, EdgePair e) {
  EdgePair key = canonical_edge(e.first, e.second);
  if (!std::binary_search(g.edges.begin(), g.edges.end(), key))
    throw Error(errc::edge_not_present,
                "(" + std::to_string(e.first) + "," + std::to_string(e.second) +
                    ") is not an edge");
  Graph out;
  out.n = g.n + 1;
  out.edges.reserve(g.edges.size() + 1);
  for (const auto& edge : g.edges)
    if (edge != key) out.edges.push_back(edge);
  out.edges.emplace_back(key.first, g.n);
  out.edges.emplace_back(key.second, g.n);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees = g.degrees();
  for (int d : p.degrees) {
    if (d % 2 == 1)
      ++p.n_o;
    else
      ++p.n_e;
    p.max_degree = std::max(p.max_degree, d);
  }
  if (p.n_o % 2 != 0)
    throw Error(errc::invariant_violation, "odd number of odd vertices");
  return p;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == g.n;
}

bool is_tree(const Graph& g) {
  return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

Graph path_graph(int n) {
  if (n < 1) throw Error(errc::invalid_params, "path needs n >= 1");
  std::vector<EdgePair> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(errc::invalid_params, "cycle needs n >= 3");
  std::vector<EdgePair> edges;
  for (int i = 0; i < n; ++i) edges.push_back(canonical_edge(i, (i + 1) % n));
  return make_graph(n, edges);
}

Graph star_graph(int n) {
  if (n < 1) throw Error(errc::invalid_params, "star needs n >= 1");
  std::vector<EdgePair> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return make_graph(n, edges);
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) {
        out = line;
        return true;
      }
    }
    return false;
  };
  std::string header;
  if (!next_line(header))
    throw Error(errc::parse_error, "line 1: missing 'n m' header");
  int n = 0, m = 0;
  {
    std::istringstream ss(header);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra))
      throw Error(errc::parse_error,
                  "line " + std::to_string(lineno) + ": expected 'n m'");
  }
  if (n < 0 || m < 0)
    throw Error(errc::parse_error,
                "line " + std::to_string(lineno) + ": negative count");
  std::vector<EdgePair> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::string row;
    if (!next_line(row))
      throw Error(errc::parse_error, "line " + std::to_string(lineno + 1) +
                                         ": expected " + std::to_string(m) +
                                         " edges, got " + std::to_string(i));
    std::istringstream ss(row);
    int u = 0, v = 0;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra))
      throw Error(errc::parse_error,
                  "line " + std::to_string(lineno) + ": expected 'u v'");
    edges.emplace_back(u, v);
  }
  try {
    return make_graph(n, edges);
  } catch (const Error& e) {
    throw Error(errc::parse_error, e.what());
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace pathdec
