#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wegner7/error.hpp"
#include "wegner7/planar_graph.hpp"
#include "wegner7/structure.hpp"

namespace wegner7 {

struct Point {
  double x = 0, y = 0;
};

/// Straight-line drawing to rotation system: neighbors sorted clockwise by angle.
inline PlanarGraph embed_from_coordinates(std::span<const Point> pos, std::span<const Edge> edges) {
  std::vector<std::vector<int>> rot(pos.size());
  for (auto [u, v] : edges) {
    rot[static_cast<std::size_t>(u)].push_back(v);
    rot[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < rot.size(); ++v) {
    auto angle = [&](int w) {
      return std::atan2(pos[static_cast<std::size_t>(w)].y - pos[v].y, pos[static_cast<std::size_t>(w)].x - pos[v].x);
    };
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
  }
  return PlanarGraph::from_rotation(std::move(rot));
}

inline PlanarGraph k4() {
  const Point pos[] = {{0, 10}, {8.66, -5}, {-8.66, -5}, {0, 0}};
  const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  return embed_from_coordinates(pos, edges);
}

/// Triangular prism: outer triangle 0,1,2, inner triangle 3,4,5, spokes i -- i+3.
inline PlanarGraph prism() {
  const Point pos[] = {{0, 10}, {8.66, -5}, {-8.66, -5}, {0, 4}, {3.46, -2}, {-3.46, -2}};
  const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  return embed_from_coordinates(pos, edges);
}

/// The prism with spoke 0--3 (its lexicographically first edge outside a triangle)
/// subdivided by vertex 6. Its square is K7.
inline PlanarGraph prism_gadget() {
  const Point pos[] = {{0, 10}, {8.66, -5}, {-8.66, -5}, {0, 4}, {3.46, -2}, {-3.46, -2}, {0, 7}};
  const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 6}, {6, 3}, {1, 4}, {2, 5}};
  return embed_from_coordinates(pos, edges);
}

/// Two gadget copies (0..6 and 7..13) joined by an edge between their degree-2 vertices.
/// Cubic, planar, and its square needs seven colors.
inline PlanarGraph wegner_tight() {
  const PlanarGraph gadget = prism_gadget();
  const auto& one = gadget.rotation();
  std::vector<std::vector<int>> rot(one);
  for (const auto& r : one) {
    std::vector<int> shifted;
    for (int w : r) shifted.push_back(w + 7);
    rot.push_back(std::move(shifted));
  }
  rot[6].push_back(13);
  rot[13].push_back(6);
  return PlanarGraph::from_rotation(std::move(rot));
}

struct GenSeed {
  std::uint64_t seed = 0;
  int steps = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Applies `seed.steps` face expansions to K4: pick a face and two of its edges, subdivide
/// both, and join the new vertices across the face.
inline PlanarGraph expand_k4(const GenSeed& seed) {
  std::mt19937_64 rng(seed.seed);
  PlanarGraph g = k4();
  for (int step = 0; step < seed.steps; ++step) {
    const auto& fs = g.faces();
    const Face& f = fs[static_cast<std::size_t>(rng() % fs.size())];
    const std::size_t len = f.walk.size();
    const std::size_t i = rng() % len;
    std::size_t j = rng() % (len - 1);
    if (j >= i) ++j;
    const int p = g.tail(f.walk[i]), q = g.head(f.walk[i]);
    const int r = g.tail(f.walk[j]), s = g.head(f.walk[j]);
    auto rot = g.rotation();
    const int a = g.vertex_count(), b = a + 1;
    auto replace = [&](int at, int from, int to) { std::replace(rot[static_cast<std::size_t>(at)].begin(), rot[static_cast<std::size_t>(at)].end(), from, to); };
    replace(p, q, a);
    replace(q, p, a);
    replace(r, s, b);
    replace(s, r, b);
    rot.push_back({p, b, q});
    rot.push_back({r, a, s});
    g = PlanarGraph::from_rotation(std::move(rot));
  }
  return g;
}

/// 3-connected cubic planar graph on n vertices (n even, n >= 4). Not uniformly distributed.
inline PlanarGraph random_cubic_planar(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw error(errc::bad_n, "n must be even and at least 4, got " + std::to_string(n));
  return expand_k4(GenSeed{seed, (n - 4) / 2});
}

struct GraphMetadata {
  int n = 0;
  int m = 0;
  bool cubic = false;
  bool three_connected = false;
  bool triangle_free = false;
  bool cyclically_4ec = false;
  int light_k1 = 0;
  int light_k2 = 0;
};

inline GraphMetadata describe(const PlanarGraph& g) {
  GraphMetadata m;
  m.n = g.vertex_count();
  m.m = g.edge_count();
  m.cubic = g.is_cubic();
  m.three_connected = is_three_connected(g);
  m.triangle_free = !has_triangle(g);
  m.cyclically_4ec = m.cubic && cyclically_4_edge_connected(g);
  if (m.cubic && m.three_connected) {
    const auto lp = light_face_pair(g);
    m.light_k1 = static_cast<int>(lp.small_length);
    m.light_k2 = static_cast<int>(lp.large_length);
  }
  return m;
}

inline nlohmann::json to_json(const GraphMetadata& m) {
  return {{"n", m.n}, {"m", m.m}, {"cubic", m.cubic}, {"three_connected", m.three_connected},
          {"triangle_free", m.triangle_free}, {"cyclically_4_edge_connected", m.cyclically_4ec},
          {"light_pair", {m.light_k1, m.light_k2}}};
}

struct CorpusSpec {
  std::vector<int> sizes{8, 10, 12, 14, 16};
  int count = 100;
  std::uint64_t seed = 1;
  bool include_tight = false;
};

struct CorpusEntry {
  std::string id;
  PlanarGraph graph;
  GenSeed seed;
  GraphMetadata meta;
};

/// Entry i has size sizes[i % |sizes|] and seed splitmix64(seed + i). With include_tight
/// the two-gadget example is appended as "tight-n14".
inline std::vector<CorpusEntry> corpus(const CorpusSpec& spec) {
  if (spec.sizes.empty() && spec.count > 0) throw error(errc::bad_n, "corpus needs at least one size");
  std::vector<CorpusEntry> out;
  for (int i = 0; i < spec.count; ++i) {
    const int n = spec.sizes[static_cast<std::size_t>(i) % spec.sizes.size()];
    if (n < 4 || n % 2 != 0) throw error(errc::bad_n, "n must be even and at least 4, got " + std::to_string(n));
    const GenSeed gs{splitmix64(spec.seed + static_cast<std::uint64_t>(i)), (n - 4) / 2};
    char id[32];
    std::snprintf(id, sizeof id, "c%03d-n%d", i, n);
    PlanarGraph g = expand_k4(gs);
    auto meta = describe(g);
    out.push_back({id, std::move(g), gs, meta});
  }
  if (spec.include_tight) {
    PlanarGraph g = wegner_tight();
    auto meta = describe(g);
    out.push_back({"tight-n14", std::move(g), {}, meta});
  }
  return out;
}

}  // namespace wegner7
