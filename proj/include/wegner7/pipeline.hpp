#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wegner7/coloring.hpp"
#include "wegner7/decomposition.hpp"
#include "wegner7/error.hpp"
#include "wegner7/oracle.hpp"
#include "wegner7/planar_graph.hpp"
#include "wegner7/precolor.hpp"
#include "wegner7/structure.hpp"

namespace wegner7 {

enum class ColorMode { Auto, Decomposition, Oracle };

inline const char* to_string(ColorMode m) {
  switch (m) {
    case ColorMode::Auto: return "auto";
    case ColorMode::Decomposition: return "decomp";
    case ColorMode::Oracle: return "oracle";
  }
  return "?";
}

struct PipelineOptions {
  ColorMode mode = ColorMode::Auto;
  SolveOptions solve;
  OracleBudget budget;
  std::uint64_t color_node_limit = 10'000'000;
};

/// A decomposition found on `host` (the graph with outer cycle C), with host vertices mapped
/// back to the input graph. `removed` is the light-pair edge deleted from the input, if any.
struct CertifiedDecomposition {
  PlanarGraph host;
  BoundarySpec spec;
  DecompositionCertificate cert;
  std::vector<int> to_input;
  std::optional<Edge> removed;
};

struct RouteAttempt {
  std::string route;  // "light-pair" or "triangle"
  int r0 = -1;        // input vertex
  ForbiddenKind kind = ForbiddenKind::Four;
  std::string outcome;  // "ok" or the failure reason
};

/// One line per reduction or coloring step, in input vertex labels.
struct PathStep {
  std::string action;
  std::vector<int> vertices;
  std::string detail;
};

struct ColorResult {
  PaletteColoring coloring;
  std::vector<PathStep> path;
  std::vector<RouteAttempt> attempts;
  std::vector<CertifiedDecomposition> certificates;
  bool used_oracle = false;
  bool used_decomposition = false;
};

namespace detail {

struct Piece {
  PlanarGraph graph;
  std::vector<int> to_input;
};

// Keeps `keep` (sorted) with the induced rotation order.
inline Piece restrict_rotation(const std::vector<std::vector<int>>& rot, const std::vector<int>& keep,
                               const std::vector<int>& to_input) {
  std::vector<int> local(rot.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> out(keep.size());
  Piece p;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (int w : rot[static_cast<std::size_t>(keep[i])])
      if (local[static_cast<std::size_t>(w)] >= 0) out[i].push_back(local[static_cast<std::size_t>(w)]);
    p.to_input.push_back(to_input[static_cast<std::size_t>(keep[i])]);
  }
  p.graph = PlanarGraph::from_rotation(std::move(out));
  return p;
}

inline void remove_edge(std::vector<std::vector<int>>& rot, int u, int v) {
  std::erase(rot[static_cast<std::size_t>(u)], v);
  std::erase(rot[static_cast<std::size_t>(v)], u);
}

class SevenColorer {
 public:
  SevenColorer(const PipelineOptions& opt, ColorResult& out) : opt_(opt), out_(out) {}

  // Colors 1..7 indexed by piece vertex.
  std::vector<int> color(const Piece& p) {
    const PlanarGraph& g = p.graph;
    const int n = g.vertex_count();
    if (n == 0) return {};

    if (opt_.mode == ColorMode::Oracle) return oracle(p, "oracle mode");

    const auto labels = component_labels(g);
    if (*std::max_element(labels.begin(), labels.end()) > 0) {
      step("components", {}, std::to_string(*std::max_element(labels.begin(), labels.end()) + 1) + " components");
      std::vector<int> out(static_cast<std::size_t>(n), 0);
      for (int c = 0; c <= *std::max_element(labels.begin(), labels.end()); ++c) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
          if (labels[static_cast<std::size_t>(v)] == c) keep.push_back(v);
        const auto sub = color(restrict_rotation(g.rotation(), keep, p.to_input));
        for (std::size_t i = 0; i < keep.size(); ++i) out[static_cast<std::size_t>(keep[i])] = sub[i];
      }
      return out;
    }

    if (n <= kPaletteSize) {
      step("rainbow", p.to_input, "");
      std::vector<int> out(static_cast<std::size_t>(n));
      std::iota(out.begin(), out.end(), 1);
      return out;
    }

    for (int v = 0; v < n; ++v)
      if (g.degree(v) < 3) return reduce_low_degree(p, v);

    if (const auto br = bridges(g); !br.empty()) return split_bridge(p, br.front());

    return color_cubic(p);
  }

 private:
  void step(std::string action, std::vector<int> vertices, std::string detail) {
    out_.path.push_back({std::move(action), std::move(vertices), std::move(detail)});
  }

  std::vector<int> oracle(const Piece& p, const std::string& why) {
    const int n = p.graph.vertex_count();
    if (n > opt_.budget.max_vertices)
      throw error(errc::too_large, "oracle needed (" + why + ") but " + std::to_string(n) + " vertices exceed the limit of " +
                                       std::to_string(opt_.budget.max_vertices));
    const auto best = optimal_coloring(square(p.graph), opt_.budget);
    if (best.colors > kPaletteSize)
      throw error(errc::certification_failed, "square needs " + std::to_string(best.colors) + " colors");
    step("oracle", p.to_input, why + "; " + std::to_string(best.colors) + " colors");
    out_.used_oracle = true;
    std::vector<int> out(best.color);
    for (int& c : out) ++c;
    return out;
  }

  // Delete v; a degree-2 vertex's neighbors are joined when not adjacent. v then sees at most
  // six vertices of G^2.
  std::vector<int> reduce_low_degree(const Piece& p, int v) {
    const PlanarGraph& g = p.graph;
    auto rot = g.rotation();
    const auto nb = rot[static_cast<std::size_t>(v)];
    if (nb.size() == 2 && !g.has_edge(nb[0], nb[1])) {
      std::replace(rot[static_cast<std::size_t>(nb[0])].begin(), rot[static_cast<std::size_t>(nb[0])].end(), v, nb[1]);
      std::replace(rot[static_cast<std::size_t>(nb[1])].begin(), rot[static_cast<std::size_t>(nb[1])].end(), v, nb[0]);
      step("reduce-degree", {p.to_input[static_cast<std::size_t>(v)]}, "joined " + std::to_string(p.to_input[static_cast<std::size_t>(nb[0])]) + "-" +
                                                                           std::to_string(p.to_input[static_cast<std::size_t>(nb[1])]));
    } else {
      for (int w : nb) std::erase(rot[static_cast<std::size_t>(w)], v);
      step("reduce-degree", {p.to_input[static_cast<std::size_t>(v)]}, "degree " + std::to_string(nb.size()));
    }
    rot[static_cast<std::size_t>(v)].clear();
    std::vector<int> keep;
    for (int u = 0; u < g.vertex_count(); ++u)
      if (u != v) keep.push_back(u);
    const auto sub = color(restrict_rotation(rot, keep, p.to_input));

    std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) out[static_cast<std::size_t>(keep[i])] = sub[i];
    std::array<bool, kPaletteSize + 1> used{};
    for (int a : g.neighbors(v)) {
      used[static_cast<std::size_t>(out[static_cast<std::size_t>(a)])] = true;
      for (int b : g.neighbors(a))
        if (b != v) used[static_cast<std::size_t>(out[static_cast<std::size_t>(b)])] = true;
    }
    for (int c = 1; c <= kPaletteSize; ++c)
      if (!used[static_cast<std::size_t>(c)]) {
        out[static_cast<std::size_t>(v)] = c;
        return out;
      }
    throw error(errc::certification_failed, "no free color for reduced vertex " + std::to_string(p.to_input[static_cast<std::size_t>(v)]));
  }

  // Colors both sides of a bridge ab separately, then permutes the colors of b's side.
  std::vector<int> split_bridge(const Piece& p, Edge bridge) {
    const PlanarGraph& g = p.graph;
    auto rot = g.rotation();
    const auto [a, b] = bridge;
    remove_edge(rot, a, b);
    step("bridge", {p.to_input[static_cast<std::size_t>(a)], p.to_input[static_cast<std::size_t>(b)]}, "");
    const PlanarGraph cut = PlanarGraph::from_rotation(rot);
    const auto labels = component_labels(cut);
    std::vector<int> side_a, side_b;
    for (int v = 0; v < g.vertex_count(); ++v)
      (labels[static_cast<std::size_t>(v)] == labels[static_cast<std::size_t>(a)] ? side_a : side_b).push_back(v);
    const auto col_a = color(restrict_rotation(rot, side_a, p.to_input));
    const auto col_b = color(restrict_rotation(rot, side_b, p.to_input));

    std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < side_a.size(); ++i) out[static_cast<std::size_t>(side_a[i])] = col_a[i];
    std::vector<int> raw(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < side_b.size(); ++i) raw[static_cast<std::size_t>(side_b[i])] = col_b[i];

    std::array<int, kPaletteSize + 1> perm{};
    std::iota(perm.begin(), perm.end(), 0);
    do {
      auto pc = [&](int v) { return perm[static_cast<std::size_t>(raw[static_cast<std::size_t>(v)])]; };
      bool ok = pc(b) != out[static_cast<std::size_t>(a)];
      for (int w : rot[static_cast<std::size_t>(a)]) ok = ok && pc(b) != out[static_cast<std::size_t>(w)];
      for (int w : rot[static_cast<std::size_t>(b)]) ok = ok && pc(w) != out[static_cast<std::size_t>(a)];
      if (ok) {
        for (int v : side_b) out[static_cast<std::size_t>(v)] = pc(v);
        return out;
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    throw error(errc::certification_failed, "no color permutation joins the bridge sides");
  }

  std::vector<int> color_cubic(const Piece& p) {
    const PlanarGraph& g = p.graph;
    const bool three = is_three_connected(g);
    if (three)
      if (auto c = light_pair_route(p)) return *c;
    if (auto c = triangle_route(p)) return *c;
    if (opt_.mode == ColorMode::Decomposition)
      throw error(errc::no_decomposition, "no decomposition route succeeded on a " + std::to_string(g.vertex_count()) +
                                              "-vertex piece" + (three ? "" : " (not 3-connected)"));
    return oracle(p, three ? "no route succeeded" : "2-connected piece with a 2-cut");
  }

  // Try each (r0, kind) on `host`, whose vertices map to g (`host_to_g`); blue `extra` vertices of
  // g are added after the decomposition is found.
  std::optional<std::vector<int>> try_specs(const Piece& p, const std::string& route, const PlanarGraph& host,
                                            const CycleRef& outer, const std::vector<int>& r0s, std::optional<Edge> removed) {
    const PlanarGraph& g = p.graph;
    for (int r0 : r0s)
      for (ForbiddenKind kind : {ForbiddenKind::Four, ForbiddenKind::Right, ForbiddenKind::Left}) {
        RouteAttempt att{route, p.to_input[static_cast<std::size_t>(r0)], kind, ""};
        try {
          const BoundarySpec spec = BoundarySpec::with_r0(outer, r0, kind);
          const RBColoring pre = initial_precoloring(host, spec);
          const auto report = check_conditions(host, spec, pre, opt_.solve.cycle_bound);
          if (!report.all_pass()) throw error(errc::precondition_failed, report.failures());
          auto cert = search_decomposition(host, spec, pre, opt_.solve);
          if (!cert) throw error(errc::no_decomposition, "search exhausted");
          auto colors = combine(g, *cert, removed);
          att.outcome = "ok";
          out_.attempts.push_back(att);
          std::vector<int> to_input = p.to_input;
          out_.certificates.push_back({host, spec, std::move(*cert), std::move(to_input), removed});
          out_.used_decomposition = true;
          step(route, {att.r0}, std::string("r0 ") + to_string(kind));
          return colors;
        } catch (const error& e) {
          att.outcome = e.what();
          out_.attempts.push_back(att);
        }
      }
    return std::nullopt;
  }

  // Blue: certificate colors, with removed-edge ends made blue; red: 4-coloring of the red
  // square-graph of g in colors 4..7.
  std::vector<int> combine(const PlanarGraph& g, const DecompositionCertificate& cert, std::optional<Edge> removed) {
    const int n = g.vertex_count();
    RBColoring rb = cert.rb;
    std::vector<int> blue(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) blue[static_cast<std::size_t>(v)] = cert.blue3[v];
    if (removed) {
      const SimpleGraph sq = square(g);
      for (int v : {removed->second, removed->first}) {
        rb.set(v, Mark::Blue);
        std::array<bool, 4> used{};
        for (int w : sq.neighbors(v))
          if (rb.is_blue(w) && blue[static_cast<std::size_t>(w)] > 0) used[static_cast<std::size_t>(blue[static_cast<std::size_t>(w)])] = true;
        blue[static_cast<std::size_t>(v)] = 0;
        for (int c = kFirstBlueColor; c < kFirstRedColor; ++c)
          if (!used[static_cast<std::size_t>(c)]) {
            blue[static_cast<std::size_t>(v)] = c;
            break;
          }
      }
      if (blue[static_cast<std::size_t>(removed->first)] == 0 || blue[static_cast<std::size_t>(removed->second)] == 0) {
        const auto bsq = blue_square_graph(g, rb);
        const auto c3 = find_coloring(bsq.graph, 3, opt_.color_node_limit);
        if (!c3) throw error(errc::unsat3, "blue square-graph with the removed edge restored is not 3-colorable");
        for (std::size_t i = 0; i < bsq.to_host.size(); ++i) blue[static_cast<std::size_t>(bsq.to_host[i])] = kFirstBlueColor + (*c3)[i];
      }
    }
    const auto rsq = red_square_graph(g, rb);
    const auto c4 = find_coloring(rsq.graph, 4, opt_.color_node_limit);
    if (!c4) throw error(errc::unsat4, "red square-graph is not 4-colorable");
    std::vector<int> out = blue;
    for (std::size_t i = 0; i < rsq.to_host.size(); ++i) out[static_cast<std::size_t>(rsq.to_host[i])] = kFirstRedColor + (*c4)[i];
    PaletteColoring pal(n);
    for (int v = 0; v < n; ++v) pal.set(v, out[static_cast<std::size_t>(v)]);
    if (const auto bad = find_square_conflict(g, pal)) throw error(errc::certification_failed, bad->reason);
    return out;
  }

  // Delete the shared edge xy of a light face pair; the merged face becomes C and r0 ranges
  // over the C-neighbors of x and y.
  std::optional<std::vector<int>> light_pair_route(const Piece& p) {
    const PlanarGraph& g = p.graph;
    LightFacePair lp;
    try {
      lp = light_face_pair(g);
    } catch (const error& e) {
      out_.attempts.push_back({"light-pair", -1, ForbiddenKind::Four, e.what()});
      return std::nullopt;
    }
    const auto [x, y] = lp.shared;
    auto rot = g.rotation();
    remove_edge(rot, x, y);
    const PlanarGraph h = PlanarGraph::from_rotation(rot);
    const Dart d = h.dart(x, h.neighbors(x)[0]);
    const Dart d2 = h.dart(h.neighbors(x)[0], x);
    // The merged face is the one through both x and y.
    CycleRef outer;
    for (Dart s : {d, d2}) {
      auto vs = h.face_vertices(h.faces()[static_cast<std::size_t>(h.face_of(s))]);
      if (std::find(vs.begin(), vs.end(), y) != vs.end()) {
        outer.vertices = vs;
        break;
      }
    }
    if (outer.vertices.empty()) return std::nullopt;
    std::vector<int> r0s;
    for (int v : {x, y})
      for (int w : h.neighbors(v)) r0s.push_back(w);
    return try_specs(p, "light-pair", h, outer, r0s, Edge{x, y});
  }

  std::optional<std::vector<int>> triangle_route(const Piece& p) {
    const PlanarGraph& g = p.graph;
    for (const Face& f : g.faces()) {
      if (f.length() != 3) continue;
      const CycleRef outer{g.face_vertices(f)};
      if (auto c = try_specs(p, "triangle", g, outer, outer.vertices, std::nullopt)) return c;
    }
    return std::nullopt;
  }

  const PipelineOptions& opt_;
  ColorResult& out_;
};

}  // namespace detail

/// Proper coloring of G^2 with at most seven colors, with the route taken and every
/// decomposition certificate used. The result is verified before it is returned.
inline ColorResult seven_color_detailed(const PlanarGraph& g, const PipelineOptions& opt = {}) {
  if (g.max_degree() > 3) throw error(errc::input_violation, "maximum degree exceeds 3");
  ColorResult out;
  detail::Piece whole{g, {}};
  whole.to_input.resize(static_cast<std::size_t>(g.vertex_count()));
  std::iota(whole.to_input.begin(), whole.to_input.end(), 0);
  detail::SevenColorer colorer(opt, out);
  const auto colors = colorer.color(whole);
  out.coloring = PaletteColoring(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out.coloring.set(v, colors[static_cast<std::size_t>(v)]);
  if (const auto bad = find_square_conflict(g, out.coloring))
    throw error(errc::certification_failed, "pipeline output rejected: " + bad->reason);
  return out;
}

inline PaletteColoring seven_color(const PlanarGraph& g, const PipelineOptions& opt = {}) {
  return seven_color_detailed(g, opt).coloring;
}

}  // namespace wegner7
