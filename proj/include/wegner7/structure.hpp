#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "wegner7/error.hpp"
#include "wegner7/planar_graph.hpp"
#include "wegner7/simple_graph.hpp"

namespace wegner7 {

namespace detail {

// Connectivity of g with some vertices and edges switched off.
template <AdjacencyGraph G>
bool connected_without(const G& g, const std::vector<bool>& dead_vertex, const std::vector<Edge>& dead_edges) {
  const int n = g.vertex_count();
  auto edge_dead = [&](int u, int v) {
    for (auto [a, b] : dead_edges)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
  };
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v)
    if (!dead_vertex[static_cast<std::size_t>(v)]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)] || dead_vertex[static_cast<std::size_t>(w)] || edge_dead(v, w)) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == alive;
}

}  // namespace detail

/// Vertex 3-connectivity by deleting every pair of vertices; desk-scale only.
template <AdjacencyGraph G>
bool is_three_connected(const G& g) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  std::vector<bool> dead(static_cast<std::size_t>(n), false);
  if (!detail::connected_without(g, dead, {})) return false;
  for (int a = 0; a < n; ++a) {
    dead[static_cast<std::size_t>(a)] = true;
    for (int b = a + 1; b < n; ++b) {
      dead[static_cast<std::size_t>(b)] = true;
      const bool ok = detail::connected_without(g, dead, {});
      dead[static_cast<std::size_t>(b)] = false;
      if (!ok) return false;
    }
    dead[static_cast<std::size_t>(a)] = false;
  }
  return true;
}

/// Cut-edges via lowpoint numbering, each as (u, v) with u < v.
template <AdjacencyGraph G>
std::vector<Edge> bridges(const G& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> out;
  int clock = 0;
  struct Frame {
    int v, parent;
    std::vector<int> nb;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack;
    auto push = [&](int v, int parent) {
      disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = clock++;
      Frame f{v, parent, {}, 0};
      for (int w : g.neighbors(v)) f.nb.push_back(w);
      stack.push_back(std::move(f));
    };
    push(root, -1);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < f.nb.size()) {
        const int w = f.nb[f.next++];
        if (w == f.parent) continue;
        if (disc[static_cast<std::size_t>(w)] < 0) {
          push(w, f.v);
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        const int v = f.v, p = f.parent;
        stack.pop_back();
        if (p >= 0) {
          low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
          if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)]) out.emplace_back(std::min(p, v), std::max(p, v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <AdjacencyGraph G>
bool has_triangle(const G& g) {
  const SimpleGraph s = to_simple(g);
  for (auto [u, v] : s.edges())
    for (int w : s.neighbors(u))
      if (w != v && s.has_edge(v, w)) return true;
  return false;
}

/// Every 3-edge set whose removal disconnects G must be the three edges at one vertex.
inline bool cyclically_4_edge_connected(const PlanarGraph& g) {
  if (!g.is_cubic()) throw error(errc::not_cubic, "cyclic edge connectivity is defined here for cubic graphs");
  const auto edges = g.edges();
  const std::vector<bool> none(static_cast<std::size_t>(g.vertex_count()), false);
  const std::size_t m = edges.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const std::vector<Edge> cut{edges[i], edges[j], edges[k]};
        if (detail::connected_without(g, none, cut)) continue;
        bool star = false;
        for (int v : {edges[i].first, edges[i].second}) {
          auto touches = [v](const Edge& e) { return e.first == v || e.second == v; };
          if (touches(edges[j]) && touches(edges[k])) star = true;
        }
        if (!star) return false;
      }
  return true;
}

/// Two faces sharing an edge, chosen by smallest total length, then smaller short face,
/// then smallest shared-edge index.
struct LightFacePair {
  int small_face = -1;
  int large_face = -1;
  Edge shared{-1, -1};
  int edge_index = -1;
  std::size_t small_length = 0;
  std::size_t large_length = 0;
  std::size_t total() const { return small_length + large_length; }
};

inline LightFacePair light_face_pair(const PlanarGraph& g) {
  const auto edges = g.edges();
  std::optional<LightFacePair> best;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    int f1 = g.face_of(g.dart(u, v));
    int f2 = g.face_of(g.dart(v, u));
    if (f1 == f2) continue;
    std::size_t k1 = g.faces()[static_cast<std::size_t>(f1)].length();
    std::size_t k2 = g.faces()[static_cast<std::size_t>(f2)].length();
    if (k2 < k1) {
      std::swap(k1, k2);
      std::swap(f1, f2);
    }
    LightFacePair cand{f1, f2, edges[i], static_cast<int>(i), k1, k2};
    if (!best || cand.total() < best->total() || (cand.total() == best->total() && cand.small_length < best->small_length)) best = cand;
  }
  if (!best || best->total() > 11)
    throw error(errc::no_light_pair, "no two adjacent faces with total length at most 11");
  return *best;
}

/// Face walks that are simple cycles, as vertex sequences.
inline bool face_is_cycle(const PlanarGraph& g, const Face& f) {
  auto vs = g.face_vertices(f);
  std::sort(vs.begin(), vs.end());
  return vs.size() >= 3 && std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

}  // namespace wegner7
