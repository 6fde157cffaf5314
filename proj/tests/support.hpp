#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pathdec/decomposition.hpp"
#include "pathdec/graph.hpp"

namespace testsupport {

// Exhaustive minimum path decomposition by subset dynamic programming.  Kept
// independent of the production search: no bounds, no incumbents, just
// memoized recursion over uncovered-edge masks with every simple path through
// the lowest uncovered edge tried in turn.
class BruteForce {
 public:
  explicit BruteForce(const pathdec::Graph& g) : g_(g), inc_(g.n) {
    for (int i = 0; i < g.edge_count(); ++i) {
      inc_[g.edges[i].first].push_back({g.edges[i].second, i});
      inc_[g.edges[i].second].push_back({g.edges[i].first, i});
    }
  }

  int solve() {
    const int e = g_.edge_count();
    if (e == 0) return 0;
    if (e > 24) throw std::runtime_error("brute force capped at 24 edges");
    return f((1u << e) - 1);
  }

 private:
  int f(std::uint32_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    int seed = __builtin_ctz(mask);
    std::vector<std::uint32_t> pmasks;
    std::vector<char> on(g_.n, 0);
    auto [u, v] = g_.edges[seed];
    on[u] = on[v] = 1;
    grow_front(u, v, 1u << seed, mask, on, pmasks);
    int best = INT_MAX;
    for (std::uint32_t pm : pmasks) best = std::min(best, 1 + f(mask & ~pm));
    memo_[mask] = best;
    return best;
  }

  void grow_front(int a, int b, std::uint32_t pmask, std::uint32_t avail,
                  std::vector<char>& on, std::vector<std::uint32_t>& out) {
    for (auto [x, ei] : inc_[a]) {
      if (!(avail >> ei & 1) || on[x]) continue;
      on[x] = 1;
      grow_front(x, b, pmask | (1u << ei), avail, on, out);
      on[x] = 0;
    }
    grow_back(b, pmask, avail, on, out);
  }

  void grow_back(int b, std::uint32_t pmask, std::uint32_t avail,
                 std::vector<char>& on, std::vector<std::uint32_t>& out) {
    out.push_back(pmask);
    for (auto [x, ei] : inc_[b]) {
      if (!(avail >> ei & 1) || on[x]) continue;
      on[x] = 1;
      grow_back(x, pmask | (1u << ei), avail, on, out);
      on[x] = 0;
    }
  }

  const pathdec::Graph& g_;
  std::vector<std::vector<std::pair<int, int>>> inc_;
  std::unordered_map<std::uint32_t, int> memo_;
};

inline int brute_min_paths(const pathdec::Graph& g) { return BruteForce(g).solve(); }

template <typename F>
std::optional<pathdec::errc> code_of(F&& fn) {
  try {
    fn();
  } catch (const pathdec::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline int ceil_half(int x) { return (x + 1) / 2; }

inline int path_edge_total(const pathdec::Decomposition& d) {
  int total = 0;
  for (const auto& p : d.paths) total += static_cast<int>(p.size()) - 1;
  return total;
}

}  // namespace testsupport
