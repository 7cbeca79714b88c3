#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "wegner7/cycles.hpp"
#include "wegner7/error.hpp"
#include "wegner7/planar_graph.hpp"
#include "wegner7/simple_graph.hpp"

namespace wegner7 {

enum class Mark : std::uint8_t { Uncolored, Red, Blue };

/// Red / blue / uncolored mark per vertex of a host graph.
class RBColoring {
 public:
  RBColoring() = default;
  explicit RBColoring(int n, Mark fill = Mark::Uncolored) : mark_(static_cast<std::size_t>(n), fill) {}

  int size() const { return static_cast<int>(mark_.size()); }
  Mark operator[](int v) const { return mark_[static_cast<std::size_t>(v)]; }
  void set(int v, Mark m) { mark_[static_cast<std::size_t>(v)] = m; }

  bool is_blue(int v) const { return (*this)[v] == Mark::Blue; }
  bool is_red(int v) const { return (*this)[v] == Mark::Red; }

  std::vector<int> vertices_with(Mark m) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
      if ((*this)[v] == m) out.push_back(v);
    return out;
  }

  friend bool operator==(const RBColoring&, const RBColoring&) = default;

 private:
  std::vector<Mark> mark_;
};

enum class ForbiddenKind { Left, Right, Four };

inline const char* to_string(ForbiddenKind k) {
  switch (k) {
    case ForbiddenKind::Left: return "left";
    case ForbiddenKind::Right: return "right";
    case ForbiddenKind::Four: return "four";
  }
  return "?";
}

/// Outer cycle C plus the distinguished boundary vertex: a blue b0, or a red r0 with its kind.
struct BoundarySpec {
  enum class Role { B0, R0 };
  struct Special {
    Role role;
    int vertex;
    ForbiddenKind kind = ForbiddenKind::Four;
  };

  CycleRef outer;
  std::optional<Special> special;

  static BoundarySpec with_b0(CycleRef outer, int b0) { return {std::move(outer), Special{Role::B0, b0}}; }
  static BoundarySpec with_r0(CycleRef outer, int r0, ForbiddenKind kind) {
    return {std::move(outer), Special{Role::R0, r0, kind}};
  }

  std::optional<int> b0() const {
    if (special && special->role == Role::B0) return special->vertex;
    return std::nullopt;
  }
  std::optional<int> r0() const {
    if (special && special->role == Role::R0) return special->vertex;
    return std::nullopt;
  }
  /// r0 is left- or right-forbidden (not 4-forbidden).
  bool r0_turn_restricted() const { return r0() && special->kind != ForbiddenKind::Four; }
};

/// A BoundarySpec checked against its host: the outer cycle is a chordless face.
class BoundaryView {
 public:
  BoundaryView(const PlanarGraph& g, const BoundarySpec& spec) : g_(&g), spec_(&spec) {
    const auto& c = spec.outer.vertices;
    if (!is_cycle_of(g, spec.outer)) throw error(errc::spec_mismatch, "outer sequence is not a cycle of the graph");
    on_outer_.assign(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : c) on_outer_[static_cast<std::size_t>(v)] = true;
    if (!is_face(c)) throw error(errc::spec_mismatch, "outer cycle is not a face of the embedding");
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int w : g.neighbors(c[i])) {
        const int prev = c[(i + c.size() - 1) % c.size()], next = c[(i + 1) % c.size()];
        if (on_outer_[static_cast<std::size_t>(w)] && w != prev && w != next)
          throw error(errc::spec_mismatch, "outer cycle has chord " + std::to_string(c[i]) + "-" + std::to_string(w));
      }
    if (spec.special && !on_outer_[static_cast<std::size_t>(spec.special->vertex)])
      throw error(errc::spec_mismatch, "distinguished vertex " + std::to_string(spec.special->vertex) + " is not on the outer cycle");
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!on_outer_[static_cast<std::size_t>(v)]) interior_.push_back(v);
  }

  const PlanarGraph& graph() const { return *g_; }
  const BoundarySpec& spec() const { return *spec_; }

  bool on_outer(int v) const { return on_outer_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& interior() const { return interior_; }

  /// Edges of int(C): with the outer cycle chordless, exactly those with an interior end.
  bool interior_edge(int u, int v) const { return !on_outer(u) || !on_outer(v); }

  std::vector<Edge> interior_edges() const {
    std::vector<Edge> out;
    for (auto e : g_->edges())
      if (interior_edge(e.first, e.second)) out.push_back(e);
    return out;
  }

  /// The neighbor of r0 inside C, when r0 exists and has one.
  std::optional<int> r0_prime() const {
    const auto r0 = spec_->r0();
    if (!r0) return std::nullopt;
    for (int w : g_->neighbors(*r0))
      if (!on_outer(w)) return w;
    return std::nullopt;
  }

  int outer_neighbor_count(int v) const {
    int k = 0;
    for (int w : g_->neighbors(v)) k += on_outer(w) ? 1 : 0;
    return k;
  }

 private:
  bool is_face(const std::vector<int>& c) const {
    auto traces = [&](auto first, auto last) {
      const Dart d0 = g_->dart(*first, *std::next(first));
      const Face& f = g_->faces()[static_cast<std::size_t>(g_->face_of(d0))];
      if (f.length() != c.size()) return false;
      Dart d = d0;
      for (auto it = std::next(first); it != last; ++it) {
        const auto nxt = std::next(it) == last ? first : std::next(it);
        if (g_->head(d) != *it) return false;
        d = g_->face_next(d);
        if (g_->head(d) != *nxt) return false;
      }
      return true;
    };
    return traces(c.begin(), c.end()) || traces(c.rbegin(), c.rend());
  }

  const PlanarGraph* g_;
  const BoundarySpec* spec_;
  std::vector<bool> on_outer_;
  std::vector<int> interior_;
};

// ---------------------------------------------------------------------------
// Forbidden and dangerous cycles

namespace detail {

inline int non_blue_count(const RBColoring& rb, const CycleRef& c) {
  int k = 0;
  for (int v : c.vertices) k += rb.is_blue(v) ? 0 : 1;
  return k;
}

}  // namespace detail

/// All blue with length not divisible by 3, or length 2 mod 3 with exactly one non-blue vertex.
/// Uncolored vertices count as non-blue.
inline bool is_forbidden_cycle(const PlanarGraph&, const RBColoring& rb, const CycleRef& c) {
  const auto len = c.length();
  const int non_blue = detail::non_blue_count(rb, c);
  return (len % 3 != 0 && non_blue == 0) || (len % 3 == 2 && non_blue == 1);
}

/// Not forbidden, has a non-blue vertex, and turning any single non-blue vertex blue
/// produces a forbidden cycle.
inline bool is_dangerous_cycle(const PlanarGraph& g, const RBColoring& rb, const CycleRef& c) {
  if (is_forbidden_cycle(g, rb, c)) return false;
  RBColoring flipped = rb;
  bool any = false;
  for (int v : c.vertices) {
    if (rb.is_blue(v)) continue;
    any = true;
    const Mark old = flipped[v];
    flipped.set(v, Mark::Blue);
    const bool forbidden = is_forbidden_cycle(g, flipped, c);
    flipped.set(v, old);
    if (!forbidden) return false;
  }
  return any;
}

enum class CycleDefect { Forbidden, Dangerous };

inline const char* to_string(CycleDefect d) { return d == CycleDefect::Forbidden ? "forbidden" : "dangerous"; }

struct CycleFinding {
  CycleRef cycle;
  CycleDefect defect;
};

inline constexpr int kDefaultCycleBound = 12;

/// Forbidden and dangerous cycles of length at most `max_len`. With a spec, a dangerous
/// cycle through b0 and exactly one other outer vertex is not reported.
inline std::vector<CycleFinding> scan_cycles(const PlanarGraph& g, const RBColoring& rb, int max_len = kDefaultCycleBound,
                                             const BoundarySpec* spec = nullptr) {
  std::vector<bool> on_outer(static_cast<std::size_t>(g.vertex_count()), false);
  std::optional<int> b0;
  if (spec) {
    for (int v : spec->outer.vertices) on_outer[static_cast<std::size_t>(v)] = true;
    b0 = spec->b0();
  }
  std::vector<CycleFinding> out;
  for (auto& c : enumerate_cycles(g, max_len)) {
    // Only cycles with at least two blue vertices can be forbidden or dangerous.
    if (c.length() - static_cast<std::size_t>(detail::non_blue_count(rb, c)) < 2) continue;
    if (is_forbidden_cycle(g, rb, c)) {
      out.push_back({std::move(c), CycleDefect::Forbidden});
    } else if (is_dangerous_cycle(g, rb, c)) {
      if (b0 && c.contains(*b0)) {
        int others = 0;
        for (int v : c.vertices) others += (v != *b0 && on_outer[static_cast<std::size_t>(v)]) ? 1 : 0;
        if (others == 1) continue;
      }
      out.push_back({std::move(c), CycleDefect::Dangerous});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boundary conditions

/// Interior vertices that the boundary rules force to be blue: those with a red outer
/// neighbor other than r0, and for a left/right-forbidden r0 the neighbor of r0' reached
/// by the forbidden turn.
inline std::vector<int> forced_blue_interior(const BoundaryView& view, const RBColoring& rb) {
  const PlanarGraph& g = view.graph();
  const auto r0 = view.spec().r0();
  std::vector<bool> forced(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : view.interior())
    for (int w : g.neighbors(v))
      if (view.on_outer(w) && rb.is_red(w) && (!r0 || w != *r0)) forced[static_cast<std::size_t>(v)] = true;

  if (view.spec().r0_turn_restricted()) {
    if (const auto rp = view.r0_prime(); rp && g.degree(*rp) == 3) {
      std::vector<int> inner;
      for (int w : g.neighbors(*rp))
        if (!view.on_outer(w)) inner.push_back(w);
      if (inner.size() == 2) {
        const Turn want = view.spec().special->kind == ForbiddenKind::Right ? Turn::Right : Turn::Left;
        for (int a : inner)
          if (turn_direction(g, *r0, *rp, a) == want) forced[static_cast<std::size_t>(a)] = true;
      }
    }
  }
  std::vector<int> out;
  for (int v : view.interior())
    if (forced[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

/// The precoloring a spec determines: outer cycle red except b0, forced interior vertices blue.
inline RBColoring initial_precoloring(const PlanarGraph& g, const BoundarySpec& spec) {
  const BoundaryView view(g, spec);
  RBColoring rb(g.vertex_count());
  for (int v : spec.outer.vertices) rb.set(v, Mark::Red);
  if (const auto b0 = spec.b0()) rb.set(*b0, Mark::Blue);
  for (int v : forced_blue_interior(view, rb)) rb.set(v, Mark::Blue);
  return rb;
}

struct Witness {
  std::vector<int> vertices;
  std::vector<Edge> edges;
  bool empty() const { return vertices.empty() && edges.empty(); }
};

struct ConditionVerdict {
  std::string condition;
  bool pass = true;
  Witness witness;
  std::string detail;
};

/// Verdicts for c1..c9 in order.
struct ConditionReport {
  std::array<ConditionVerdict, 9> verdicts;

  const ConditionVerdict& condition(int i) const { return verdicts.at(static_cast<std::size_t>(i - 1)); }
  bool all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.pass; });
  }
  std::string failures() const {
    std::string s;
    for (const auto& v : verdicts)
      if (!v.pass) s += (s.empty() ? "" : ", ") + v.condition + (v.detail.empty() ? "" : " (" + v.detail + ")");
    return s;
  }
};

inline ConditionReport check_conditions(const PlanarGraph& g, const BoundarySpec& spec, const RBColoring& rb,
                                        int cycle_bound = kDefaultCycleBound) {
  const BoundaryView view(g, spec);
  if (rb.size() != g.vertex_count()) throw error(errc::input_violation, "coloring size does not match the graph");
  ConditionReport report;
  for (int i = 0; i < 9; ++i) report.verdicts[static_cast<std::size_t>(i)].condition = "c" + std::to_string(i + 1);
  auto fail = [&](int i, Witness w, std::string detail) {
    auto& v = report.verdicts[static_cast<std::size_t>(i - 1)];
    if (!v.pass) return;
    v.pass = false;
    v.witness = std::move(w);
    v.detail = std::move(detail);
  };
  const int n = g.vertex_count();
  const auto& outer = spec.outer.vertices;

  // c1: no set of at most two interior edges separates an interior vertex from C.
  {
    const auto inner = view.interior_edges();
    auto reach_all = [&](const std::vector<Edge>& removed) -> std::optional<int> {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      std::vector<int> stack(outer.begin(), outer.end());
      for (int v : outer) seen[static_cast<std::size_t>(v)] = true;
      auto cut = [&](int a, int b) {
        for (auto [x, y] : removed)
          if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
      };
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
          if (!seen[static_cast<std::size_t>(w)] && !cut(v, w)) {
            seen[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
          }
      }
      for (int v : view.interior())
        if (!seen[static_cast<std::size_t>(v)]) return v;
      return std::nullopt;
    };
    bool done = false;
    if (auto v = reach_all({})) {
      fail(1, {{*v}, {}}, "vertex cut off from C");
      done = true;
    }
    for (std::size_t i = 0; i < inner.size() && !done; ++i)
      for (std::size_t j = i; j < inner.size() && !done; ++j) {
        std::vector<Edge> removed{inner[i]};
        if (j != i) removed.push_back(inner[j]);
        if (auto v = reach_all(removed)) {
          fail(1, {{*v}, removed}, "interior edge cut of size " + std::to_string(removed.size()));
          done = true;
        }
      }
  }

  // c2: degrees.
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 3) fail(2, {{v}, {}}, "degree above 3");
    if (!view.on_outer(v) && g.degree(v) != 3) fail(2, {{v}, {}}, "interior vertex of degree " + std::to_string(g.degree(v)));
  }

  // c3: C is precolored with at most one blue vertex, and that vertex is the spec's b0.
  std::vector<int> blue_on_c;
  for (int v : outer) {
    if (rb[v] == Mark::Uncolored) fail(3, {{v}, {}}, "outer vertex uncolored");
    if (rb.is_blue(v)) blue_on_c.push_back(v);
  }
  if (blue_on_c.size() > 1) fail(3, {blue_on_c, {}}, "more than one blue outer vertex");
  if (blue_on_c.size() == 1 && spec.b0() != blue_on_c.front()) fail(3, {blue_on_c, {}}, "blue outer vertex is not the declared b0");
  if (const auto b0 = spec.b0(); b0 && !rb.is_blue(*b0)) fail(3, {{*b0}, {}}, "declared b0 is not blue");

  // c4: b0 has an outer neighbor of degree 2.
  if (const auto b0 = spec.b0()) {
    bool ok = false;
    for (int w : g.neighbors(*b0)) ok = ok || (view.on_outer(w) && g.degree(w) == 2);
    if (!ok) fail(4, {{*b0}, {}}, "no outer neighbor of degree 2");
  }

  // c5: without b0, some red r0 carries a kind.
  if (blue_on_c.empty()) {
    if (!spec.r0()) fail(5, {}, "all of C is red but no r0 is declared");
    else if (!rb.is_red(*spec.r0())) fail(5, {{*spec.r0()}, {}}, "r0 is not red");
  }

  // c6: G - V(C) connected, with a vertex adjacent to the distinguished vertex.
  {
    std::vector<bool> dead(static_cast<std::size_t>(n), false);
    for (int v : outer) dead[static_cast<std::size_t>(v)] = true;
    int start = view.interior().empty() ? -1 : view.interior().front();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::size_t reached = 0;
    if (start >= 0) {
      std::vector<int> stack{start};
      seen[static_cast<std::size_t>(start)] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : g.neighbors(v))
          if (!dead[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
          }
      }
    }
    if (reached != view.interior().size()) {
      std::vector<int> missed;
      for (int v : view.interior())
        if (!seen[static_cast<std::size_t>(v)]) missed.push_back(v);
      fail(6, {missed, {}}, "G - V(C) is disconnected");
    }
    if (spec.special) {
      bool joined = false;
      for (int w : g.neighbors(spec.special->vertex)) joined = joined || !view.on_outer(w);
      if (!joined) fail(6, {{spec.special->vertex}, {}}, "no interior vertex joined to the distinguished vertex");
    } else {
      fail(6, {}, "no distinguished vertex");
    }
  }

  // c7: the interior precoloring is exactly the forced set.
  {
    std::vector<bool> forced(static_cast<std::size_t>(n), false);
    for (int v : forced_blue_interior(view, rb)) forced[static_cast<std::size_t>(v)] = true;
    std::vector<int> wrong;
    for (int v : view.interior()) {
      const Mark want = forced[static_cast<std::size_t>(v)] ? Mark::Blue : Mark::Uncolored;
      if (rb[v] != want) wrong.push_back(v);
    }
    if (!wrong.empty()) fail(7, {wrong, {}}, "interior precoloring differs from the forced set");
  }

  // c8: no forbidden or dangerous cycle beyond the b0 exception.
  {
    const auto found = scan_cycles(g, rb, cycle_bound, &spec);
    if (!found.empty())
      fail(8, {found.front().cycle.vertices, {}}, std::string(to_string(found.front().defect)) + " cycle of length " +
                                                      std::to_string(found.front().cycle.length()));
  }

  // c9: a left/right-forbidden r0 whose r0' has no other outer neighbor needs a facial cycle
  // through r0' avoiding C.
  if (spec.r0_turn_restricted()) {
    if (const auto rp = view.r0_prime(); rp && view.outer_neighbor_count(*rp) == 1) {
      bool ok = false;
      for (const Face& f : g.faces()) {
        auto vs = g.face_vertices(f);
        if (std::find(vs.begin(), vs.end(), *rp) == vs.end()) continue;
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) continue;
        if (std::none_of(vs.begin(), vs.end(), [&](int v) { return view.on_outer(v); })) ok = true;
      }
      if (!ok) fail(9, {{*rp}, {}}, "no facial cycle through r0' disjoint from C");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Red facial paths

/// Facial paths with k distinct vertices, each once (the lexicographically smaller direction).
inline std::vector<std::vector<int>> facial_paths(const PlanarGraph& g, int k) {
  std::set<std::vector<int>> seen;
  for (Dart d0 = 0; d0 < g.dart_count(); ++d0) {
    std::vector<int> p{g.tail(d0)};
    Dart d = d0;
    for (int i = 1; i < k; ++i) {
      p.push_back(g.head(d));
      d = g.face_next(d);
    }
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    auto rev = p;
    std::reverse(rev.begin(), rev.end());
    seen.insert(std::min(p, rev));
  }
  return {seen.begin(), seen.end()};
}

struct RedFacialPath {
  enum class Kind { FourPath, ThreePathAtR0 };
  std::vector<int> vertices;
  Kind kind;
};

/// Red facial 4-paths with every edge in int(C), plus red facial 3-paths r0 r0' a that make
/// the forbidden turn at r0'. Without a spec every edge counts as interior.
inline std::vector<RedFacialPath> red_facial_4paths(const PlanarGraph& g, const RBColoring& rb,
                                                    const BoundarySpec* spec = nullptr) {
  std::optional<BoundaryView> view;
  if (spec) view.emplace(g, *spec);
  auto interior_edge = [&](int a, int b) { return !view || view->interior_edge(a, b); };
  std::vector<RedFacialPath> out;
  for (auto& p : facial_paths(g, 4)) {
    if (!std::all_of(p.begin(), p.end(), [&](int v) { return rb.is_red(v); })) continue;
    if (!interior_edge(p[0], p[1]) || !interior_edge(p[1], p[2]) || !interior_edge(p[2], p[3])) continue;
    out.push_back({std::move(p), RedFacialPath::Kind::FourPath});
  }
  if (view && spec->r0_turn_restricted()) {
    const int r0 = *spec->r0();
    const auto rp = view->r0_prime();
    if (rp && g.degree(*rp) == 3 && rb.is_red(r0) && rb.is_red(*rp)) {
      const Turn banned = spec->special->kind == ForbiddenKind::Right ? Turn::Right : Turn::Left;
      for (int a : g.neighbors(*rp))
        if (a != r0 && rb.is_red(a) && turn_direction(g, r0, *rp, a) == banned)
          out.push_back({{r0, *rp, a}, RedFacialPath::Kind::ThreePathAtR0});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Square-subgraphs

inline InducedSubgraph class_square_graph(const PlanarGraph& g, const RBColoring& rb, Mark m) {
  return induced_subgraph(square(g), rb.vertices_with(m));
}

inline InducedSubgraph blue_square_graph(const PlanarGraph& g, const RBColoring& rb) {
  return class_square_graph(g, rb, Mark::Blue);
}

inline InducedSubgraph red_square_graph(const PlanarGraph& g, const RBColoring& rb) {
  return class_square_graph(g, rb, Mark::Red);
}

/// Red vertices joined by red edges of G and by distance-two pairs whose middle vertex lies
/// inside C; the part of the red square-graph that can be drawn inside the outer cycle.
inline InducedSubgraph red_interior_square_graph(const PlanarGraph& g, const RBColoring& rb, const BoundarySpec& spec) {
  const BoundaryView view(g, spec);
  const auto red = rb.vertices_with(Mark::Red);
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < red.size(); ++i) local[static_cast<std::size_t>(red[i])] = static_cast<int>(i);
  InducedSubgraph out{SimpleGraph(static_cast<int>(red.size())), red};
  auto L = [&](int v) { return local[static_cast<std::size_t>(v)]; };
  for (auto [u, v] : g.edges())
    if (L(u) >= 0 && L(v) >= 0) out.graph.add_edge(L(u), L(v));
  for (int mid : view.interior()) {
    const auto nb = g.neighbors(mid);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (L(nb[i]) >= 0 && L(nb[j]) >= 0) out.graph.add_edge(L(nb[i]), L(nb[j]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json witness_json(const Witness& w) {
  if (!w.edges.empty()) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : w.edges) edges.push_back({u, v});
    if (w.vertices.empty()) return edges;
    return {{"vertices", w.vertices}, {"edges", edges}};
  }
  return w.vertices;
}

inline nlohmann::json to_json(const ConditionReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : report.verdicts) {
    nlohmann::json entry{{"condition", v.condition}, {"pass", v.pass}, {"witness", witness_json(v.witness)}};
    if (!v.detail.empty()) entry["detail"] = v.detail;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace wegner7
