#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "wegner7/coloring.hpp"
#include "wegner7/cycles.hpp"
#include "wegner7/decomposition.hpp"
#include "wegner7/error.hpp"
#include "wegner7/precolor.hpp"
#include "wegner7/simple_graph.hpp"

namespace wegner7 {

/// Limits for exact computations; inputs above them are refused.
struct OracleBudget {
  int max_vertices = 20;
  std::uint64_t node_limit = 500'000'000;

  /// Reads WEGNER7_BUDGET as "max_vertices" or "max_vertices:node_limit".
  static OracleBudget from_env();
  static OracleBudget from_env(OracleBudget base) {
    const char* raw = std::getenv("WEGNER7_BUDGET");
    if (!raw || !*raw) return base;
    const std::string s(raw);
    try {
      const auto colon = s.find(':');
      base.max_vertices = std::stoi(s.substr(0, colon));
      if (colon != std::string::npos) base.node_limit = std::stoull(s.substr(colon + 1));
    } catch (const std::exception&) {
      throw error(errc::input_violation, "WEGNER7_BUDGET must look like N or N:NODES, got '" + s + "'");
    }
    return base;
  }
};

inline OracleBudget OracleBudget::from_env() { return from_env(OracleBudget{}); }

struct OptimalColoring {
  int colors = 0;
  std::vector<int> color;  // 0-based
};

namespace detail {

inline int greedy_clique_bound(const SimpleGraph& h) {
  int best = h.vertex_count() > 0 ? 1 : 0;
  for (int v = 0; v < h.vertex_count(); ++v) {
    std::vector<int> clique{v};
    std::vector<int> cand(h.neighbors(v).begin(), h.neighbors(v).end());
    std::sort(cand.begin(), cand.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
    for (int w : cand)
      if (std::all_of(clique.begin(), clique.end(), [&](int u) { return h.has_edge(u, w); })) clique.push_back(w);
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace detail

/// Exact minimum coloring: DSATUR branch-and-bound seeded with a greedy clique lower bound
/// and the DSATUR greedy upper bound.
inline OptimalColoring optimal_coloring(const SimpleGraph& h, const OracleBudget& budget = {}) {
  const int n = h.vertex_count();
  if (n > budget.max_vertices)
    throw error(errc::over_budget, std::to_string(n) + " vertices exceed the oracle limit of " + std::to_string(budget.max_vertices));
  if (n == 0) return {};

  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> seen(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<int> sat(static_cast<std::size_t>(n), 0);
  auto paint = [&](int v, int c) {
    color[static_cast<std::size_t>(v)] = c;
    for (int w : h.neighbors(v))
      if (seen[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)]++ == 0) ++sat[static_cast<std::size_t>(w)];
  };
  auto unpaint = [&](int v) {
    const int c = color[static_cast<std::size_t>(v)];
    color[static_cast<std::size_t>(v)] = -1;
    for (int w : h.neighbors(v))
      if (--seen[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] == 0) --sat[static_cast<std::size_t>(w)];
  };
  auto pick = [&]() {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0 || sat[static_cast<std::size_t>(v)] > sat[static_cast<std::size_t>(best)] ||
          (sat[static_cast<std::size_t>(v)] == sat[static_cast<std::size_t>(best)] && h.degree(v) > h.degree(best)))
        best = v;
    }
    return best;
  };

  // Greedy DSATUR for the upper bound.
  OptimalColoring best;
  for (int step = 0; step < n; ++step) {
    const int v = pick();
    int c = 0;
    while (seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) ++c;
    paint(v, c);
  }
  best.color = color;
  best.colors = *std::max_element(color.begin(), color.end()) + 1;
  for (int v = 0; v < n; ++v) unpaint(v);

  const int lower = detail::greedy_clique_bound(h);
  if (lower == best.colors) return best;

  std::uint64_t nodes = 0;
  int uncolored = n;
  auto search = [&](auto&& self, int used) -> void {
    if (uncolored == 0) {
      best.colors = used;
      best.color = color;
      return;
    }
    if (++nodes > budget.node_limit) throw error(errc::over_budget, "chromatic search exceeded " + std::to_string(budget.node_limit) + " nodes");
    const int v = pick();
    for (int c = 0; c <= used && c < best.colors - 1; ++c) {
      if (seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) continue;
      paint(v, c);
      --uncolored;
      self(self, std::max(used, c + 1));
      ++uncolored;
      unpaint(v);
      if (best.colors == lower) return;
    }
  };
  search(search, 0);
  return best;
}

inline int chromatic_number(const SimpleGraph& h, const OracleBudget& budget = {}) {
  return optimal_coloring(h, budget).colors;
}

/// Exhaustive check over every red/blue marking of the uncolored vertices of `pre`, using the
/// conclusion predicates directly; boundary conditions are not checked.
inline bool exists_extension(const PlanarGraph& g, const BoundarySpec& spec, const RBColoring& pre,
                             const OracleBudget& budget = {}) {
  const BoundaryView view(g, spec);
  std::vector<int> free;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (pre[v] == Mark::Uncolored) free.push_back(v);
  if (free.size() > 20) throw error(errc::over_budget, std::to_string(free.size()) + " unmarked vertices are too many to enumerate");
  const auto rp = r0_prime_must_be_red(view);
  RBColoring rb = pre;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i) rb.set(free[i], (mask >> i) & 1 ? Mark::Blue : Mark::Red);
    if (rp && !rb.is_red(*rp)) continue;
    if (!red_facial_4paths(g, rb, &spec).empty()) continue;
    if (chromatic_number(blue_square_graph(g, rb).graph, OracleBudget{g.vertex_count(), budget.node_limit}) <= 3) return true;
  }
  return false;
}

/// Whether the spec's precoloring extends to a red/blue coloring meeting (i)-(iii).
inline bool exists_decomposition(const PlanarGraph& g, const BoundarySpec& spec, const OracleBudget& budget = {},
                                 int cycle_bound = kDefaultCycleBound) {
  const BoundaryView view(g, spec);
  if (view.interior().size() > 15)
    throw error(errc::over_budget, "interior has " + std::to_string(view.interior().size()) + " vertices (limit 15)");
  const RBColoring pre = initial_precoloring(g, spec);
  const auto report = check_conditions(g, spec, pre, cycle_bound);
  if (!report.all_pass()) throw error(errc::precondition_failed, "boundary conditions fail: " + report.failures());
  return exists_extension(g, spec, pre, budget);
}

/// Every simple cycle up to max_len, once each in canonical form.
template <AdjacencyGraph G>
std::vector<CycleRef> all_cycles(const G& g, int max_len, const OracleBudget& budget = {}) {
  return enumerate_cycles(g, max_len, static_cast<std::size_t>(budget.node_limit));
}

}  // namespace wegner7
