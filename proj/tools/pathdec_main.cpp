// Command-line front end: graph generation/ingestion, decomposition method
// dispatch, verification, exact oracle runs, and DOT export.
//
// Exit codes: 0 success, 1 invalid decomposition, 2 parse error,
// 3 method/input mismatch, 4 internal verification failure, 5 oracle budget
// exhausted.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pathdec/exact.hpp"
#include "pathdec/layered.hpp"
#include "pathdec/product.hpp"
#include "pathdec/tree.hpp"

namespace {

using namespace pathdec;

// Generator spec mini-grammar:
//   path:n | cycle:n | star:n | tree:n[:seed] | grid:n,t | even:n[:seed] |
//   odd:n[:seed] | connected:n[:seed] | product:<spec>,<spec>
struct GenSpec {
  enum class Kind { path, cycle, star, tree, grid, even, odd, connected, product };
  Kind kind;
  int a = 0, b = 0;
  std::optional<unsigned> seed;
  std::unique_ptr<GenSpec> left, right;
};

GenSpec parse_gen_spec(const std::string& text);

GenSpec parse_sized(GenSpec::Kind kind, const std::string& rest,
                    const std::string& text, bool seeded) {
  GenSpec s;
  s.kind = kind;
  std::istringstream ss(rest);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.empty() || parts.size() > (seeded ? 2u : 1u))
    throw Error(errc::parse_error, "bad generator spec '" + text + "'");
  try {
    s.a = std::stoi(parts[0]);
    if (parts.size() == 2) s.seed = static_cast<unsigned>(std::stoul(parts[1]));
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "bad number in generator spec '" + text + "'");
  }
  return s;
}

GenSpec parse_gen_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(errc::parse_error, "generator spec needs 'kind:...'");
  std::string kind = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  if (kind == "path") return parse_sized(GenSpec::Kind::path, rest, text, false);
  if (kind == "cycle") return parse_sized(GenSpec::Kind::cycle, rest, text, false);
  if (kind == "star") return parse_sized(GenSpec::Kind::star, rest, text, false);
  if (kind == "tree") return parse_sized(GenSpec::Kind::tree, rest, text, true);
  if (kind == "even") return parse_sized(GenSpec::Kind::even, rest, text, true);
  if (kind == "odd") return parse_sized(GenSpec::Kind::odd, rest, text, true);
  if (kind == "connected")
    return parse_sized(GenSpec::Kind::connected, rest, text, true);
  if (kind == "grid") {
    GenSpec s;
    s.kind = GenSpec::Kind::grid;
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw Error(errc::parse_error, "grid spec needs 'grid:n,t'");
    try {
      s.a = std::stoi(rest.substr(0, comma));
      s.b = std::stoi(rest.substr(comma + 1));
    } catch (const std::exception&) {
      throw Error(errc::parse_error, "bad number in '" + text + "'");
    }
    return s;
  }
  if (kind == "product") {
    // Split at the first comma where both halves parse.
    for (size_t pos = rest.find(','); pos != std::string::npos;
         pos = rest.find(',', pos + 1)) {
      try {
        GenSpec s;
        s.kind = GenSpec::Kind::product;
        s.left = std::make_unique<GenSpec>(parse_gen_spec(rest.substr(0, pos)));
        s.right = std::make_unique<GenSpec>(parse_gen_spec(rest.substr(pos + 1)));
        return s;
      } catch (const Error&) {
        continue;
      }
    }
    throw Error(errc::parse_error, "product spec needs 'product:<spec>,<spec>'");
  }
  throw Error(errc::parse_error, "unknown generator kind '" + kind + "'");
}

Graph build_graph(const GenSpec& s, unsigned default_seed) {
  unsigned seed = s.seed.value_or(default_seed);
  switch (s.kind) {
    case GenSpec::Kind::path: return gen_family(Family::path, s.a);
    case GenSpec::Kind::cycle: return gen_family(Family::cycle, s.a);
    case GenSpec::Kind::star: return gen_family(Family::star, s.a);
    case GenSpec::Kind::tree: return gen_family(Family::random_tree, s.a, seed);
    case GenSpec::Kind::even: return gen_family(Family::random_even, s.a, seed);
    case GenSpec::Kind::odd: return gen_family(Family::random_odd, s.a, seed);
    case GenSpec::Kind::connected:
      return gen_family(Family::random_connected, s.a, seed);
    case GenSpec::Kind::grid:
      return cartesian_product(path_graph(s.a), path_graph(s.b));
    case GenSpec::Kind::product:
      return cartesian_product(build_graph(*s.left, default_seed),
                               build_graph(*s.right, default_seed));
  }
  throw Error(errc::parse_error, "unreachable generator kind");
}

struct Input {
  Graph graph;
  std::optional<GenSpec> spec;  // set when --gen was used
};

Input load_input(const std::string& gen, const std::string& file, unsigned seed) {
  if (!gen.empty()) {
    Input in;
    in.spec = parse_gen_spec(gen);
    in.graph = build_graph(*in.spec, seed);
    return in;
  }
  std::ifstream f(file);
  if (!f) throw Error(errc::parse_error, "cannot open '" + file + "'");
  return {parse_edge_list(f), {}};
}

bool is_even_graph(const Graph& g) {
  return g.edge_count() > 0 && is_connected(g) && degree_profile(g).n_o == 0;
}

bool is_odd_graph(const Graph& g) {
  return is_connected(g) && degree_profile(g).n_o == g.n;
}

// Tight decomposition of the first factor for the virtual-real composition.
Decomposition tight_first_factor(const Graph& g, const OracleBudget& budget) {
  if (is_tree(g)) return decompose_tree(g);
  if (is_odd_graph(g)) return decompose_odd_graph(g, budget);
  throw Error(errc::invalid_params,
              "first factor must be a tree or an odd graph");
}

struct DecomposeChoice {
  Decomposition d;
  std::string method;
  bool optimal_known = true;
};

DecomposeChoice dispatch_auto(const Input& in, unsigned seed,
                              const OracleBudget& budget) {
  const GenSpec* spec = in.spec ? &*in.spec : nullptr;
  if (spec && spec->kind == GenSpec::Kind::grid && std::max(spec->a, spec->b) >= 4)
    return {decompose_grid(spec->a, spec->b), "grid"};
  if (spec && spec->kind == GenSpec::Kind::product) {
    const GenSpec& l = *spec->left;
    const GenSpec& r = *spec->right;
    if (l.kind == GenSpec::Kind::path && r.kind == GenSpec::Kind::path &&
        std::max(l.a, r.a) >= 4)
      return {decompose_grid(l.a, r.a), "grid"};
    if (l.kind == GenSpec::Kind::path && l.a >= 2) {
      Graph h = build_graph(r, seed);
      if (is_even_graph(h))
        return {decompose_path_even_product(l.a, h, budget), "even"};
      if (is_connected(h) && h.edge_count() > 0)
        return {decompose_path_product(l.a, h, budget), "layered"};
    } else {
      Graph g = build_graph(l, seed);
      Graph h = build_graph(r, seed);
      if (g.n >= 2 && is_connected(h) && (is_tree(g) || is_odd_graph(g)))
        return {decompose_product(g, h, tight_first_factor(g, budget), {}, budget),
                "virtual_real"};
    }
  }
  if (is_tree(in.graph)) return {decompose_tree(in.graph), "tree"};
  OracleResult res = min_path_decomposition(in.graph, budget);
  return {res.witness, "exact", res.optimal};
}

DecomposeChoice dispatch(const Input& in, const std::string& method, unsigned seed,
                         const OracleBudget& budget) {
  if (method == "auto") return dispatch_auto(in, seed, budget);
  if (method == "tree") return {decompose_tree(in.graph), "tree"};
  if (method == "exact") {
    OracleResult res = min_path_decomposition(in.graph, budget);
    return {res.witness, "exact", res.optimal};
  }
  const GenSpec* spec = in.spec ? &*in.spec : nullptr;
  if (method == "grid") {
    const GenSpec* l = nullptr;
    const GenSpec* r = nullptr;
    if (spec && spec->kind == GenSpec::Kind::grid)
      return {decompose_grid(spec->a, spec->b), "grid"};
    if (spec && spec->kind == GenSpec::Kind::product &&
        (l = spec->left.get(), r = spec->right.get(),
         l->kind == GenSpec::Kind::path && r->kind == GenSpec::Kind::path))
      return {decompose_grid(l->a, r->a), "grid"};
    throw Error(errc::invalid_params, "grid method needs --gen grid:n,t");
  }
  if (!spec || spec->kind != GenSpec::Kind::product)
    throw Error(errc::invalid_params,
                "method '" + method + "' needs --gen product:<spec>,<spec>");
  const GenSpec& l = *spec->left;
  const GenSpec& r = *spec->right;
  if (method == "layered") {
    if (l.kind != GenSpec::Kind::path || l.a < 2)
      throw Error(errc::invalid_params, "layered needs a path first factor");
    return {decompose_path_product(l.a, build_graph(r, seed), budget), "layered"};
  }
  if (method == "even") {
    if (l.kind != GenSpec::Kind::path || l.a < 2)
      throw Error(errc::invalid_params, "even needs a path first factor");
    return {decompose_path_even_product(l.a, build_graph(r, seed), budget), "even"};
  }
  if (method == "virtual_real") {
    Graph h = build_graph(r, seed);
    if (l.kind == GenSpec::Kind::path && l.a >= 4 && is_tree(h))
      return {decompose_path_tree_product(l.a, h), "virtual_real"};
    Graph g = build_graph(l, seed);
    return {decompose_product(g, h, tight_first_factor(g, budget), {}, budget),
            "virtual_real"};
  }
  throw Error(errc::invalid_params, "unknown method '" + method + "'");
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::parse_error: return 2;
    case errc::budget_exhausted: return 5;
    default: return 3;  // method/input mismatch family
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(errc::parse_error, "cannot write '" + path + "'");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// One color class per path, fixed palette.
std::string to_dot(const Decomposition& d) {
  static const char* kPalette[] = {
      "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
      "#f781bf", "#17becf", "#666666", "#1b9e77", "#d95f02", "#7570b3"};
  constexpr int kColors = 12;
  std::ostringstream out;
  out << "graph decomposition {\n  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < d.host.n; ++v) {
    out << "  " << v;
    if (!d.host.labels.empty())
      out << " [label=\"" << d.host.labels[v].first << ","
          << d.host.labels[v].second << "\"]";
    out << ";\n";
  }
  for (size_t i = 0; i < d.paths.size(); ++i) {
    const char* color = kPalette[i % kColors];
    for (size_t k = 0; k + 1 < d.paths[i].size(); ++k)
      out << "  " << d.paths[i][k] << " -- " << d.paths[i][k + 1] << " [color=\""
          << color << "\", penwidth=2];\n";
  }
  out << "}\n";
  return out.str();
}

int cmd_decompose(const std::string& gen, const std::string& file,
                  const std::string& method, unsigned seed,
                  const OracleBudget& budget, const std::string& out_path) {
  Input in;
  try {
    in = load_input(gen, file, seed);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  DecomposeChoice choice;
  try {
    choice = dispatch(in, method, seed, budget);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  VerifyReport rep = verify(choice.d.host, choice.d);
  if (!rep.valid) {
    std::cerr << "internal error: produced decomposition does not verify\n";
    for (const auto& v : rep.violations)
      std::cerr << violation_name(v.kind) << ": " << v.detail << "\n";
    return 4;
  }
  if (!choice.optimal_known)
    std::cerr << "warning: exact search hit its budget; count may not be minimal\n";
  if (!out_path.empty()) write_file(out_path, to_json(choice.d));
  std::cout << "p=" << rep.path_count << " lb=" << lower_bound(choice.d.host)
            << " method=" << choice.method << " verified=true\n";
  return 0;
}

int cmd_verify(const std::string& file) {
  Decomposition d;
  try {
    d = decomposition_from_json(read_file(file));
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  VerifyReport rep = verify(d.host, d);
  for (const auto& v : rep.violations)
    std::cout << violation_name(v.kind) << ": " << v.detail << "\n";
  if (rep.valid) {
    std::cout << "valid path_count=" << rep.path_count << "\n";
    return 0;
  }
  return 1;
}

int cmd_oracle(const std::string& gen, const std::string& file, unsigned seed,
               const OracleBudget& budget, const std::string& out_path) {
  Input in;
  try {
    in = load_input(gen, file, seed);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  OracleResult res = min_path_decomposition(in.graph, budget);
  VerifyReport rep = verify(in.graph, res.witness);
  if (!rep.valid) {
    std::cerr << "internal error: witness does not verify\n";
    return 4;
  }
  if (!out_path.empty()) write_file(out_path, to_json(res.witness));
  std::cout << "p=" << res.p << (res.optimal ? " optimal" : " NON-OPTIMAL")
            << " nodes=" << res.nodes_explored << " elapsed=" << res.elapsed.count()
            << "s\n";
  if (!out_path.empty()) std::cout << "witness written to " << out_path << "\n";
  if (!res.optimal) {
    std::cout << "NON-OPTIMAL: budget exhausted before the search finished\n";
    return 5;
  }
  return 0;
}

int cmd_export(const std::string& file, const std::string& out_path) {
  Decomposition d;
  try {
    d = decomposition_from_json(read_file(file));
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  VerifyReport rep = verify(d.host, d);
  if (!rep.valid) {
    std::cerr << "refusing to export an invalid decomposition\n";
    return 1;
  }
  std::string dot = to_dot(d);
  if (out_path.empty())
    std::cout << dot;
  else
    write_file(out_path, dot);
  return 0;
}

int cmd_sweep(const std::string& kind, int min_n, int max_n, int count,
              unsigned seed, int jobs, const OracleBudget& budget) {
  Family fam;
  if (kind == "tree") fam = Family::random_tree;
  else if (kind == "connected") fam = Family::random_connected;
  else if (kind == "even") fam = Family::random_even;
  else if (kind == "odd") fam = Family::random_odd;
  else {
    std::cerr << "unknown sweep kind '" << kind << "'\n";
    return 2;
  }
  struct Row {
    int n = 0, e = 0, p = 0, lb = 0;
    bool ok = false;
    std::string note;
  };
  std::vector<Row> rows(count);
  auto work = [&](int begin, int step) {
    for (int i = begin; i < count; i += step) {
      Row& row = rows[i];
      try {
        int n = min_n + i % std::max(1, max_n - min_n + 1);
        if (fam == Family::random_odd && n % 2 == 1) n = n + 1 <= max_n ? n + 1 : n - 1;
        Graph g = gen_family(fam, n, seed + static_cast<unsigned>(i));
        OracleResult res = min_path_decomposition(g, budget);
        row.n = g.n;
        row.e = g.edge_count();
        row.p = res.p;
        row.lb = lower_bound(g);
        bool verified = verify(g, res.witness).valid;
        bool sandwich = res.p >= row.lb && res.p <= (g.n + 1) / 2;
        row.ok = res.optimal && verified && sandwich;
        if (!verified) row.note = "witness invalid";
        else if (!sandwich) row.note = "bound violated";
        else if (!res.optimal) row.note = "budget exhausted";
      } catch (const Error& e) {
        row.ok = false;
        row.note = e.what();
      }
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work, t, jobs);
  work(0, jobs);
  for (auto& t : pool) t.join();
  int bad = 0;
  for (int i = 0; i < count; ++i) {
    const Row& r = rows[i];
    std::cout << "n=" << r.n << " e=" << r.e << " p=" << r.p << " lb=" << r.lb
              << (r.ok ? " ok" : " VIOLATION " + r.note) << "\n";
    if (!r.ok) ++bad;
  }
  std::cout << (bad == 0 ? "sweep clean" : "sweep found problems") << " (" << count
            << " graphs)\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path decompositions of graphs and Cartesian products"};
  app.require_subcommand(1);

  std::string gen, file, method = "auto", out_path;
  unsigned seed = 0;
  long long max_nodes = 20'000'000;
  double max_seconds = 60.0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--gen", gen, "generator spec, e.g. grid:6,4");
    cmd->add_option("--in", file, "edge-list file (first line 'n m')");
    cmd->add_option("--seed", seed, "seed for random generators");
    cmd->add_option("--max-nodes", max_nodes, "search node budget");
    cmd->add_option("--max-seconds", max_seconds, "search time budget");
  };

  CLI::App* dec = app.add_subcommand("decompose", "decompose a graph");
  add_input(dec);
  dec->add_option("--method", method,
                  "auto|tree|grid|layered|even|virtual_real|exact");
  dec->add_option("--out", out_path, "write decomposition JSON here");

  CLI::App* ver = app.add_subcommand("verify", "verify a decomposition file");
  std::string verify_file;
  ver->add_option("file", verify_file, "decomposition JSON")->required();

  CLI::App* ora = app.add_subcommand("oracle", "exact minimum search");
  add_input(ora);
  ora->add_option("--out", out_path, "write witness JSON here");

  CLI::App* exp = app.add_subcommand("export", "decomposition JSON to DOT");
  std::string export_file;
  exp->add_option("file", export_file, "decomposition JSON")->required();
  exp->add_option("--out", out_path, "write DOT here (default stdout)");

  CLI::App* swp = app.add_subcommand("sweep", "oracle sweep over a corpus");
  swp->group("");  // hidden
  std::string sweep_kind = "connected";
  int sweep_min_n = 2, sweep_max_n = 7, sweep_count = 20, jobs = 1;
  swp->add_option("--kind", sweep_kind, "tree|connected|even|odd");
  swp->add_option("--min-n", sweep_min_n);
  swp->add_option("--max-n", sweep_max_n);
  swp->add_option("--count", sweep_count);
  swp->add_option("--seed", seed);
  swp->add_option("--jobs", jobs, "parallel workers");
  swp->add_option("--max-nodes", max_nodes);
  swp->add_option("--max-seconds", max_seconds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  OracleBudget budget{max_nodes, std::chrono::duration<double>(max_seconds)};
  try {
    if (dec->parsed()) {
      if (gen.empty() == file.empty()) {
        std::cerr << "need exactly one of --gen or --in\n";
        return 2;
      }
      return cmd_decompose(gen, file, method, seed, budget, out_path);
    }
    if (ver->parsed()) return cmd_verify(verify_file);
    if (ora->parsed()) {
      if (gen.empty() == file.empty()) {
        std::cerr << "need exactly one of --gen or --in\n";
        return 2;
      }
      return cmd_oracle(gen, file, seed, budget, out_path);
    }
    if (exp->parsed()) return cmd_export(export_file, out_path);
    if (swp->parsed())
      return cmd_sweep(sweep_kind, sweep_min_n, sweep_max_n, sweep_count, seed,
                       jobs, budget);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  return 2;
}
