#pragma once

#include <string>
#include <vector>

#include "pathdec/graph.hpp"

namespace pathdec {

// A simple path given by its vertex sequence.  A single vertex denotes a
// trivial path with no edges; valid decompositions do not contain those
// (except over the one-vertex edgeless host).
using PathSeq = std::vector<VertexId>;

enum class Method { tree, grid, layered, balanced, virtual_real, exact, manual };

const char* method_name(Method m);
Method method_from_name(const std::string& name);  // throws parse_error

struct Decomposition {
  Graph host;
  std::vector<PathSeq> paths;
  Method method = Method::manual;
};

enum class ViolationKind { not_a_path, non_edge, duplicate_edge, uncovered_edge };

const char* violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct VerifyReport {
  bool valid = false;
  int path_count = 0;
  std::vector<Violation> violations;
};

// Exact check that d is a path decomposition of g: every listed sequence is
// a simple path of g, no edge is used twice, and every edge of g is covered.
// Throws host_mismatch when d.host is not structurally equal to g.
VerifyReport verify(const Graph& g, const Decomposition& d);

enum class PathClass { odd_odd, odd_even, even_even };

// Classifies a path by the degree parities of its two end vertices in g.
PathClass classify_path(const Graph& g, const PathSeq& p);

// max(n_o/2, ceil(max_degree/2)); 0 for edgeless graphs.  Every path
// decomposition needs at least this many paths.
int lower_bound(const Graph& g);

// JSON schema: {"n":int,"edges":[[u,v],...],"method":string,"paths":[[...],...]}
std::string to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);  // throws parse_error

}  // namespace pathdec
