#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "wegner7/error.hpp"
#include "wegner7/simple_graph.hpp"

namespace wegner7 {

/// A cycle given by its cyclic vertex sequence.
struct CycleRef {
  std::vector<int> vertices;

  std::size_t length() const { return vertices.size(); }
  bool contains(int v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }
  friend bool operator==(const CycleRef&, const CycleRef&) = default;
};

/// Rotation/reflection representative starting at the least vertex with the smaller neighbor second.
inline CycleRef canonical_cycle(CycleRef c) {
  auto& v = c.vertices;
  if (v.size() < 3) return c;
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  if (v[1] > v.back()) std::reverse(v.begin() + 1, v.end());
  return c;
}

template <AdjacencyGraph G>
bool is_cycle_of(const G& g, const CycleRef& c) {
  const auto& v = c.vertices;
  if (v.size() < 3) return false;
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 0 || sorted.back() >= g.vertex_count()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int a = v[i], b = v[(i + 1) % v.size()];
    bool adjacent = false;
    for (int w : g.neighbors(a)) adjacent = adjacent || w == b;
    if (!adjacent) return false;
  }
  return true;
}

/// Every simple cycle of length 3..max_len, each once in canonical form, in DFS order.
/// Throws over_budget once more than `limit` cycles have been produced.
template <AdjacencyGraph G>
std::vector<CycleRef> enumerate_cycles(const G& g, int max_len,
                                       std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  const SimpleGraph s = to_simple(g);
  const int n = s.vertex_count();
  std::vector<CycleRef> out;
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);

  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int w : s.neighbors(v)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        if (out.size() >= limit) throw error(errc::over_budget, "cycle enumeration exceeded " + std::to_string(limit) + " cycles");
        out.push_back(CycleRef{path});
      }
      if (w <= start || on_path[static_cast<std::size_t>(w)] || static_cast<int>(path.size()) >= max_len) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
    }
  };

  for (int s0 = 0; s0 < n; ++s0) {
    path.assign(1, s0);
    on_path[static_cast<std::size_t>(s0)] = true;
    dfs(dfs, s0, s0);
    on_path[static_cast<std::size_t>(s0)] = false;
  }
  return out;
}

}  // namespace wegner7
