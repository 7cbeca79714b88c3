#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "wegner7/error.hpp"
#include "wegner7/simple_graph.hpp"

namespace wegner7 {

/// Half-edge index. Dart `offset(v) + i` runs from v to `rotation(v)[i]`.
using Dart = int;

enum class Turn { Left, Right };

inline const char* to_string(Turn t) { return t == Turn::Left ? "left" : "right"; }

/// Closed orbit of the face-tracing permutation.
struct Face {
  std::vector<Dart> walk;
  std::size_t length() const { return walk.size(); }
};

/// Combinatorial plane embedding of a graph with maximum degree three.
///
/// Rotations are stored clockwise. Face tracing follows `face_next(u->v) = v->w`
/// where w is the clockwise successor of u at v, so a path u,v,w is traversed in
/// face-orbit direction exactly when it makes a sharp right turn at v.
/// Instances are immutable once built and always satisfy Euler's formula.
class PlanarGraph {
 public:
  PlanarGraph() = default;

  /// Validates symmetry, simplicity, the degree bound and V - E + F = 2 per component.
  static PlanarGraph from_rotation(std::vector<std::vector<int>> rotation) {
    PlanarGraph g;
    g.rot_ = std::move(rotation);
    g.validate_lists();
    g.build_darts();
    g.trace_faces();
    g.check_euler();
    return g;
  }

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return static_cast<int>(tail_.size() / 2); }
  int dart_count() const { return static_cast<int>(tail_.size()); }
  int degree(int v) const { return static_cast<int>(rot_[static_cast<std::size_t>(v)].size()); }

  /// Neighbors of v in clockwise order.
  std::span<const int> neighbors(int v) const { return rot_[static_cast<std::size_t>(v)]; }
  const std::vector<std::vector<int>>& rotation() const { return rot_; }

  bool has_edge(int u, int v) const { return dart(u, v) >= 0; }

  /// Dart u->v, or -1 when u and v are not adjacent.
  Dart dart(int u, int v) const {
    if (u < 0 || u >= vertex_count()) return -1;
    const auto& r = rot_[static_cast<std::size_t>(u)];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] == v) return offset_[static_cast<std::size_t>(u)] + static_cast<int>(i);
    return -1;
  }

  int tail(Dart d) const { return tail_[static_cast<std::size_t>(d)]; }
  int head(Dart d) const { return head_[static_cast<std::size_t>(d)]; }
  Dart twin(Dart d) const { return twin_[static_cast<std::size_t>(d)]; }

  Dart face_next(Dart d) const {
    const Dart t = twin(d);
    const int v = tail(t);
    const int i = t - offset_[static_cast<std::size_t>(v)];
    return offset_[static_cast<std::size_t>(v)] + (i + 1) % degree(v);
  }

  Dart face_prev(Dart d) const {
    const int u = tail(d);
    const int i = d - offset_[static_cast<std::size_t>(u)];
    return twin(offset_[static_cast<std::size_t>(u)] + (i + degree(u) - 1) % degree(u));
  }

  /// Clockwise successor / predecessor of neighbor u in the rotation at v.
  int rotation_successor(int v, int u) const { return head(face_next(dart(u, v))); }
  int rotation_predecessor(int v, int u) const { return tail(face_prev(dart(v, u))); }

  const std::vector<Face>& faces() const { return faces_; }
  int face_of(Dart d) const { return face_id_[static_cast<std::size_t>(d)]; }

  /// Vertices of a face in walk order (the tail of every dart).
  std::vector<int> face_vertices(const Face& f) const {
    std::vector<int> out;
    out.reserve(f.walk.size());
    for (Dart d : f.walk) out.push_back(tail(d));
    return out;
  }

  /// Edges (u < v), lexicographic; an edge's index is its position here.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& r : rot_) d = std::max(d, static_cast<int>(r.size()));
    return d;
  }

  bool is_cubic() const {
    return std::all_of(rot_.begin(), rot_.end(), [](const auto& r) { return r.size() == 3; });
  }

 private:
  void validate_lists() const {
    const int n = vertex_count();
    for (int v = 0; v < n; ++v) {
      const auto& r = rot_[static_cast<std::size_t>(v)];
      if (r.size() > 3)
        throw error(errc::input_violation, "vertex " + std::to_string(v) + " has degree " + std::to_string(r.size()) + " > 3");
      for (std::size_t i = 0; i < r.size(); ++i) {
        const int w = r[i];
        if (w < 0 || w >= n) throw error(errc::input_violation, "neighbor " + std::to_string(w) + " of vertex " + std::to_string(v) + " out of range");
        if (w == v) throw error(errc::input_violation, "loop at vertex " + std::to_string(v));
        for (std::size_t j = 0; j < i; ++j)
          if (r[j] == w) throw error(errc::input_violation, "parallel edge " + std::to_string(v) + "-" + std::to_string(w));
        const auto& back = rot_[static_cast<std::size_t>(w)];
        if (std::find(back.begin(), back.end(), v) == back.end())
          throw error(errc::asymmetric_rotation, std::to_string(v) + " lists " + std::to_string(w) + " but not conversely");
      }
    }
  }

  void build_darts() {
    const int n = vertex_count();
    offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) offset_[static_cast<std::size_t>(v) + 1] = offset_[static_cast<std::size_t>(v)] + degree(v);
    const auto darts = static_cast<std::size_t>(offset_.back());
    tail_.resize(darts);
    head_.resize(darts);
    twin_.resize(darts);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < degree(v); ++i) {
        const auto d = static_cast<std::size_t>(offset_[static_cast<std::size_t>(v)] + i);
        tail_[d] = v;
        head_[d] = rot_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
      }
    for (std::size_t d = 0; d < darts; ++d) twin_[d] = dart(head_[d], tail_[d]);
  }

  void trace_faces() {
    face_id_.assign(tail_.size(), -1);
    faces_.clear();
    for (Dart start = 0; start < dart_count(); ++start) {
      if (face_id_[static_cast<std::size_t>(start)] >= 0) continue;
      Face f;
      Dart d = start;
      do {
        face_id_[static_cast<std::size_t>(d)] = static_cast<int>(faces_.size());
        f.walk.push_back(d);
        d = face_next(d);
      } while (d != start);
      faces_.push_back(std::move(f));
    }
  }

  void check_euler() const {
    int components = 0;
    const auto label = component_labels(*this, &components);
    // V - E + F per component, counting an isolated vertex as bounding one face.
    std::vector<long long> vertices(static_cast<std::size_t>(components), 0), half_edges(vertices), face_count(vertices);
    for (int v = 0; v < vertex_count(); ++v) {
      const auto c = static_cast<std::size_t>(label[static_cast<std::size_t>(v)]);
      ++vertices[c];
      half_edges[c] += degree(v);
    }
    for (const Face& f : faces_) ++face_count[static_cast<std::size_t>(label[static_cast<std::size_t>(tail(f.walk.front()))])];
    for (std::size_t c = 0; c < vertices.size(); ++c) {
      const long long faces = half_edges[c] == 0 ? 1 : face_count[c];
      const long long euler = vertices[c] - half_edges[c] / 2 + faces;
      if (euler != 2)
        throw error(errc::euler_violation, "V - E + F = " + std::to_string(euler) + " on the component of vertex " +
                                               std::to_string(std::find(label.begin(), label.end(), static_cast<int>(c)) - label.begin()));
    }
  }

  std::vector<std::vector<int>> rot_;
  std::vector<int> offset_;
  std::vector<int> tail_, head_, twin_;
  std::vector<Face> faces_;
  std::vector<int> face_id_;
};

inline PlanarGraph from_rotation(std::vector<std::vector<int>> rotation) {
  return PlanarGraph::from_rotation(std::move(rotation));
}

inline const std::vector<Face>& faces(const PlanarGraph& g) { return g.faces(); }

/// Sharp right when w follows u clockwise at v, sharp left when it precedes it.
inline Turn turn_direction(const PlanarGraph& g, int u, int v, int w) {
  if (v < 0 || v >= g.vertex_count() || u == w || !g.has_edge(u, v) || !g.has_edge(v, w))
    throw error(errc::not_facial, "path " + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + " is not a facial path");
  if (g.degree(v) < 3) throw error(errc::degree_too_low, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  return g.rotation_successor(v, u) == w ? Turn::Right : Turn::Left;
}

/// True iff the path, read in one of its two directions, is a contiguous piece of a face walk.
inline bool is_facial_path(const PlanarGraph& g, std::span<const int> path) {
  if (path.size() < 2) return path.size() == 1;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) return false;
  auto follows = [&](auto first, auto last) {
    Dart d = g.dart(*first, *std::next(first));
    for (auto it = std::next(first); std::next(it) != last; ++it) {
      const Dart nd = g.face_next(d);
      if (g.head(nd) != *std::next(it)) return false;
      d = nd;
    }
    return true;
  };
  return follows(path.begin(), path.end()) || follows(path.rbegin(), path.rend());
}

}  // namespace wegner7
