#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wegner7/error.hpp"
#include "wegner7/planarity.hpp"
#include "wegner7/precolor.hpp"
#include "wegner7/simple_graph.hpp"

namespace wegner7 {

inline constexpr int kFirstBlueColor = 1;
inline constexpr int kFirstRedColor = 4;
inline constexpr int kPaletteSize = 7;

enum class ColorClass { None, Blue, Red };

/// Vertex -> color in 1..7 (0 = uncolored). Colors 1-3 are the blue class, 4-7 the red class.
class PaletteColoring {
 public:
  PaletteColoring() = default;
  explicit PaletteColoring(int n) : color_(static_cast<std::size_t>(n), 0) {}

  int size() const { return static_cast<int>(color_.size()); }
  int operator[](int v) const { return color_[static_cast<std::size_t>(v)]; }
  void set(int v, int c) { color_[static_cast<std::size_t>(v)] = c; }
  const std::vector<int>& colors() const { return color_; }

  static ColorClass class_of_color(int c) {
    if (c >= kFirstBlueColor && c < kFirstRedColor) return ColorClass::Blue;
    if (c >= kFirstRedColor && c <= kPaletteSize) return ColorClass::Red;
    return ColorClass::None;
  }
  ColorClass class_of(int v) const { return class_of_color((*this)[v]); }

  bool complete() const {
    return std::all_of(color_.begin(), color_.end(), [](int c) { return c > 0; });
  }
  int colors_used() const {
    std::set<int> used(color_.begin(), color_.end());
    used.erase(0);
    return static_cast<int>(used.size());
  }
  int max_color() const { return color_.empty() ? 0 : *std::max_element(color_.begin(), color_.end()); }

  friend bool operator==(const PaletteColoring&, const PaletteColoring&) = default;

 private:
  std::vector<int> color_;
};

/// Backtracking k-coloring with DSATUR vertex choice. Returns colors 0..k-1, or nullopt when
/// none exists. `fixed[v] >= 0` pins a vertex. Throws budget_exceeded past `node_limit`.
inline std::optional<std::vector<int>> find_coloring(const SimpleGraph& h, int k,
                                                     std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max(),
                                                     std::span<const int> fixed = {}) {
  const int n = h.vertex_count();
  if (n == 0) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
  std::vector<int> saturation(static_cast<std::size_t>(n), 0);
  auto at = [&](int v, int c) -> int& { return seen[static_cast<std::size_t>(v) * static_cast<std::size_t>(k) + static_cast<std::size_t>(c)]; };
  auto paint = [&](int v, int c) {
    color[static_cast<std::size_t>(v)] = c;
    for (int w : h.neighbors(v))
      if (at(w, c)++ == 0) ++saturation[static_cast<std::size_t>(w)];
  };
  auto unpaint = [&](int v) {
    const int c = color[static_cast<std::size_t>(v)];
    color[static_cast<std::size_t>(v)] = -1;
    for (int w : h.neighbors(v))
      if (--at(w, c) == 0) --saturation[static_cast<std::size_t>(w)];
  };
  int remaining = n;
  bool any_fixed = false;
  for (int v = 0; v < static_cast<int>(fixed.size()) && v < n; ++v) {
    const int c = fixed[static_cast<std::size_t>(v)];
    if (c < 0) continue;
    if (c >= k || at(v, c) > 0) return std::nullopt;
    paint(v, c);
    --remaining;
    any_fixed = true;
  }
  std::uint64_t nodes = 0;
  auto pick = [&]() {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0 || saturation[static_cast<std::size_t>(v)] > saturation[static_cast<std::size_t>(best)] ||
          (saturation[static_cast<std::size_t>(v)] == saturation[static_cast<std::size_t>(best)] && h.degree(v) > h.degree(best)))
        best = v;
    }
    return best;
  };
  auto search = [&](auto&& self, int max_used) -> bool {
    if (remaining == 0) return true;
    if (++nodes > node_limit) throw error(errc::budget_exceeded, "coloring search exceeded " + std::to_string(node_limit) + " nodes");
    const int v = pick();
    if (saturation[static_cast<std::size_t>(v)] >= k) return false;
    const int top = any_fixed ? k - 1 : std::min(k - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
      if (at(v, c) > 0) continue;
      paint(v, c);
      --remaining;
      if (self(self, std::max(max_used, c))) return true;
      ++remaining;
      unpaint(v);
    }
    return false;
  };
  if (!search(search, -1)) return std::nullopt;
  return color;
}

template <AdjacencyGraph G>
bool is_proper(const G& h, std::span<const int> color) {
  for (int v = 0; v < h.vertex_count(); ++v)
    for (int w : h.neighbors(v))
      if (v < w && color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(w)]) return false;
  return true;
}

/// Proper 3-coloring (colors 1-3) of the blue square-graph, whose maximum degree must be at
/// most 3 with no K4, which guarantees one.
inline PaletteColoring color_blue_square(const PlanarGraph& g, const RBColoring& rb) {
  const auto blue = blue_square_graph(g, rb);
  const SimpleGraph& h = blue.graph;
  if (h.max_degree() > 3) throw error(errc::brooks_precondition_failed, "blue square-graph has maximum degree " + std::to_string(h.max_degree()));
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) != 3) continue;
    const auto nb = h.neighbors(v);
    if (h.has_edge(nb[0], nb[1]) && h.has_edge(nb[0], nb[2]) && h.has_edge(nb[1], nb[2]))
      throw error(errc::brooks_precondition_failed, "blue square-graph contains K4 at vertex " + std::to_string(blue.to_host[static_cast<std::size_t>(v)]));
  }
  const auto colors = find_coloring(h, 3);
  if (!colors) throw error(errc::unsat3, "no 3-coloring of the blue square-graph");
  PaletteColoring out(g.vertex_count());
  for (std::size_t i = 0; i < blue.to_host.size(); ++i) out.set(blue.to_host[i], kFirstBlueColor + (*colors)[i]);
  return out;
}

/// Proper 4-coloring (colors 4-7) of the red square-graph, which must be planar.
inline PaletteColoring color_red_square(const PlanarGraph& g, const RBColoring& rb,
                                        std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max()) {
  const auto red = red_square_graph(g, rb);
  if (!is_planar(red.graph)) throw error(errc::not_planar, "red square-graph is not planar");
  const auto colors = find_coloring(red.graph, 4, node_limit);
  if (!colors) throw error(errc::unsat4, "no 4-coloring of a planar red square-graph");
  PaletteColoring out(g.vertex_count());
  for (std::size_t i = 0; i < red.to_host.size(); ++i) out.set(red.to_host[i], kFirstRedColor + (*colors)[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Kempe chains

struct KempeChain {
  int first_color = 0;
  int second_color = 0;
  std::vector<int> vertices;  // sorted
};

inline KempeChain kempe_chain(const PaletteColoring& pal, const SimpleGraph& gsq, int start, int i, int j) {
  if (start < 0 || start >= pal.size() || (pal[start] != i && pal[start] != j))
    throw error(errc::start_not_in_colors, "vertex " + std::to_string(start) + " is not colored " + std::to_string(i) + " or " + std::to_string(j));
  KempeChain chain{i, j, {start}};
  std::vector<bool> seen(static_cast<std::size_t>(pal.size()), false);
  seen[static_cast<std::size_t>(start)] = true;
  for (std::size_t head = 0; head < chain.vertices.size(); ++head)
    for (int w : gsq.neighbors(chain.vertices[head]))
      if (!seen[static_cast<std::size_t>(w)] && (pal[w] == i || pal[w] == j)) {
        seen[static_cast<std::size_t>(w)] = true;
        chain.vertices.push_back(w);
      }
  std::sort(chain.vertices.begin(), chain.vertices.end());
  return chain;
}

/// Exchanges colors i and j on the Kempe chain through `start`.
inline PaletteColoring kempe_swap(PaletteColoring pal, const SimpleGraph& gsq, int start, int i, int j) {
  const KempeChain chain = kempe_chain(pal, gsq, start, i, j);
  if (i == j) return pal;
  for (int v : chain.vertices) pal.set(v, pal[v] == i ? j : i);
  return pal;
}

// ---------------------------------------------------------------------------
// Verification

struct SquareConflict {
  Edge edge{-1, -1};
  std::string reason;
};

/// First reason `pal` is not a proper coloring of G^2 with colors 1..7, if any.
template <AdjacencyGraph G>
std::optional<SquareConflict> find_square_conflict(const G& g, const PaletteColoring& pal) {
  if (pal.size() != g.vertex_count())
    return SquareConflict{{-1, -1}, "coloring has " + std::to_string(pal.size()) + " entries for " + std::to_string(g.vertex_count()) + " vertices"};
  for (int v = 0; v < pal.size(); ++v)
    if (pal[v] < 1 || pal[v] > kPaletteSize)
      return SquareConflict{{v, v}, "vertex " + std::to_string(v) + " has color " + std::to_string(pal[v]) + " outside 1..7"};
  const SimpleGraph sq = square(g);
  for (auto [u, v] : sq.edges())
    if (pal[u] == pal[v])
      return SquareConflict{{u, v}, "vertices " + std::to_string(u) + " and " + std::to_string(v) + " share color " + std::to_string(pal[u])};
  return std::nullopt;
}

template <AdjacencyGraph G>
bool verify_square_coloring(const G& g, const PaletteColoring& pal) {
  return !find_square_conflict(g, pal).has_value();
}

}  // namespace wegner7
