#include "pathdec/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pathdec {

const char* method_name(Method m) {
  switch (m) {
    case Method::tree: return "tree";
    case Method::grid: return "grid";
    case Method::layered: return "layered";
    case Method::balanced: return "balanced";
    case Method::virtual_real: return "virtual_real";
    case Method::exact: return "exact";
    case Method::manual: return "manual";
  }
  return "manual";
}

Method method_from_name(const std::string& name) {
  for (Method m : {Method::tree, Method::grid, Method::layered, Method::balanced,
                   Method::virtual_real, Method::exact, Method::manual})
    if (name == method_name(m)) return m;
  throw Error(errc::parse_error, "unknown method '" + name + "'");
}

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::not_a_path: return "NotAPath";
    case ViolationKind::non_edge: return "NonEdge";
    case ViolationKind::duplicate_edge: return "DuplicateEdge";
    case ViolationKind::uncovered_edge: return "UncoveredEdge";
  }
  return "Unknown";
}

namespace {

std::string edge_str(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

VerifyReport verify(const Graph& g, const Decomposition& d) {
  if (!same_structure(g, d.host))
    throw Error(errc::host_mismatch, "decomposition host differs from graph");
  VerifyReport rep;
  rep.path_count = static_cast<int>(d.paths.size());
  std::set<EdgePair> used;
  for (size_t idx = 0; idx < d.paths.size(); ++idx) {
    const PathSeq& p = d.paths[idx];
    const std::string tag = "path " + std::to_string(idx);
    if (p.empty()) {
      rep.violations.push_back({ViolationKind::not_a_path, tag + " is empty"});
      continue;
    }
    bool in_range = true;
    for (VertexId v : p)
      if (v < 0 || v >= g.n) {
        rep.violations.push_back(
            {ViolationKind::not_a_path, tag + ": vertex " + std::to_string(v) +
                                            " outside [0," + std::to_string(g.n) + ")"});
        in_range = false;
        break;
      }
    if (!in_range) continue;
    if (p.size() == 1) {
      // Tolerated only for the lone-vertex edgeless host.
      if (!(g.n == 1 && g.edges.empty()))
        rep.violations.push_back(
            {ViolationKind::not_a_path, tag + " is a single vertex"});
      continue;
    }
    std::set<VertexId> distinct(p.begin(), p.end());
    if (distinct.size() != p.size())
      rep.violations.push_back(
          {ViolationKind::not_a_path, tag + " repeats a vertex"});
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      VertexId a = p[i], b = p[i + 1];
      if (a == b || !g.has_edge(a, b)) {
        rep.violations.push_back(
            {ViolationKind::non_edge, tag + ": " + edge_str(a, b) + " is not an edge"});
        continue;
      }
      if (!used.insert(canonical_edge(a, b)).second)
        rep.violations.push_back({ViolationKind::duplicate_edge,
                                  edge_str(a, b) + " covered more than once"});
    }
  }
  for (const auto& [u, v] : g.edges)
    if (!used.count({u, v}))
      rep.violations.push_back(
          {ViolationKind::uncovered_edge, edge_str(u, v) + " not covered"});
  rep.valid = rep.violations.empty();
  return rep;
}

PathClass classify_path(const Graph& g, const PathSeq& p) {
  if (p.size() < 2)
    throw Error(errc::trivial_path, "classification needs at least two vertices");
  VertexId a = p.front(), b = p.back();
  if (a < 0 || a >= g.n || b < 0 || b >= g.n)
    throw Error(errc::endpoint_out_of_range, "path end outside the host");
  auto deg = g.degrees();
  bool a_odd = deg[a] % 2 == 1;
  bool b_odd = deg[b] % 2 == 1;
  if (a_odd && b_odd) return PathClass::odd_odd;
  if (!a_odd && !b_odd) return PathClass::even_even;
  return PathClass::odd_even;
}

int lower_bound(const Graph& g) {
  if (g.edges.empty()) return 0;
  auto prof = degree_profile(g);
  return std::max(prof.n_o / 2, (prof.max_degree + 1) / 2);
}

std::string to_json(const Decomposition& d) {
  nlohmann::json j;
  j["n"] = d.host.n;
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : d.host.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["method"] = method_name(d.method);
  auto paths = nlohmann::json::array();
  for (const auto& p : d.paths) paths.push_back(p);
  j["paths"] = std::move(paths);
  return j.dump(2) + "\n";
}

Decomposition decomposition_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::parse_error, e.what());
  }
  try {
    int n = j.at("n").get<int>();
    std::vector<EdgePair> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw Error(errc::parse_error, "edge entries must be [u,v] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Decomposition d;
    d.host = make_graph(n, edges);
    d.method = method_from_name(j.at("method").get<std::string>());
    for (const auto& p : j.at("paths")) {
      PathSeq seq;
      for (const auto& v : p) {
        int id = v.get<int>();
        if (id < 0 || id >= n)
          throw Error(errc::parse_error,
                      "path vertex " + std::to_string(id) + " outside [0," +
                          std::to_string(n) + ")");
        seq.push_back(id);
      }
      d.paths.push_back(std::move(seq));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::parse_error, e.what());
  } catch (const Error& e) {
    if (e.code() == errc::parse_error) throw;
    throw Error(errc::parse_error, e.what());
  }
}

}  // namespace pathdec
