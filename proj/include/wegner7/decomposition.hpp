#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wegner7/coloring.hpp"
#include "wegner7/error.hpp"
#include "wegner7/planar_graph.hpp"
#include "wegner7/precolor.hpp"

namespace wegner7 {

struct SolveOptions {
  std::uint64_t node_limit = 10'000'000;
  int cycle_bound = kDefaultCycleBound;
};

/// Conclusions (i)-(iii) re-evaluated from the marks and blue colors alone.
struct DecompositionChecks {
  bool extends_precoloring = false;
  bool no_red_facial_4path = false;  // (i)
  bool blue_proper = false;          // (ii)
  bool r0_prime_rule_applies = false;
  bool r0_prime_red = true;  // (iii), vacuous unless the rule applies
  std::vector<RedFacialPath> red_paths;
  std::optional<Edge> blue_conflict;

  bool all() const { return extends_precoloring && no_red_facial_4path && blue_proper && r0_prime_red; }
};

struct DecompositionCertificate {
  RBColoring rb;
  PaletteColoring blue3;
  DecompositionChecks checks;
  std::uint64_t nodes = 0;
};

/// Whether conclusion (iii) constrains this spec: r0 is left/right-forbidden and r0' has no
/// outer neighbor besides r0. Returns r0' in that case.
inline std::optional<int> r0_prime_must_be_red(const BoundaryView& view) {
  if (!view.spec().r0_turn_restricted()) return std::nullopt;
  const auto rp = view.r0_prime();
  if (rp && view.outer_neighbor_count(*rp) == 1) return rp;
  return std::nullopt;
}

inline DecompositionChecks certify(const PlanarGraph& g, const BoundarySpec& spec, const RBColoring& pre,
                                   const RBColoring& rb, const PaletteColoring& blue3) {
  const BoundaryView view(g, spec);
  DecompositionChecks out;
  const int n = g.vertex_count();

  out.extends_precoloring = rb.size() == n && pre.size() == n && blue3.size() == n;
  for (int v = 0; v < n && out.extends_precoloring; ++v)
    if (rb[v] == Mark::Uncolored || (pre[v] != Mark::Uncolored && pre[v] != rb[v])) out.extends_precoloring = false;
  if (!out.extends_precoloring) return out;

  out.red_paths = red_facial_4paths(g, rb, &spec);
  out.no_red_facial_4path = out.red_paths.empty();

  out.blue_proper = true;
  for (int v = 0; v < n; ++v) {
    const bool blue = rb.is_blue(v);
    const bool in_range = blue3[v] >= kFirstBlueColor && blue3[v] < kFirstRedColor;
    if (blue != in_range || (!blue && blue3[v] != 0)) {
      out.blue_proper = false;
      out.blue_conflict = Edge{v, v};
    }
  }
  if (out.blue_proper) {
    const auto blue = blue_square_graph(g, rb);
    for (auto [a, b] : blue.graph.edges()) {
      const int u = blue.to_host[static_cast<std::size_t>(a)], v = blue.to_host[static_cast<std::size_t>(b)];
      if (blue3[u] == blue3[v]) {
        out.blue_proper = false;
        out.blue_conflict = Edge{u, v};
        break;
      }
    }
  }

  if (const auto rp = r0_prime_must_be_red(view)) {
    out.r0_prime_rule_applies = true;
    out.r0_prime_red = rb.is_red(*rp);
  }
  return out;
}

namespace detail {

// Search over the values red (0) and blue 1..3 for every vertex not fixed red, with forward
// checking on the blue-square adjacency and on red facial paths that may not be all red.
class DecompositionSearch {
 public:
  DecompositionSearch(const PlanarGraph& g, const BoundarySpec& spec, const RBColoring& pre, const SolveOptions& opt)
      : g_(g), view_(g, spec), pre_(pre), opt_(opt), sq_(square(g)) {
    const int n = g.vertex_count();
    value_.assign(static_cast<std::size_t>(n), -1);
    domain_.assign(static_cast<std::size_t>(n), kAll);
    tuples_of_.assign(static_cast<std::size_t>(n), {});

    for (auto& p : facial_paths(g, 4))
      if (view_.interior_edge(p[0], p[1]) && view_.interior_edge(p[1], p[2]) && view_.interior_edge(p[2], p[3])) add_tuple(std::move(p));
    if (spec.r0_turn_restricted()) {
      const int r0 = *spec.r0();
      if (const auto rp = view_.r0_prime(); rp && g.degree(*rp) == 3) {
        const Turn banned = spec.special->kind == ForbiddenKind::Right ? Turn::Right : Turn::Left;
        for (int a : g.neighbors(*rp))
          if (a != r0 && turn_direction(g, r0, *rp, a) == banned) add_tuple({r0, *rp, a});
      }
    }

    for (int v = 0; v < n; ++v) {
      if (pre[v] == Mark::Blue) domain_[static_cast<std::size_t>(v)] = kBlue;
      if (pre[v] == Mark::Red) domain_[static_cast<std::size_t>(v)] = kRed;
    }
    if (const auto rp = r0_prime_must_be_red(view_)) domain_[static_cast<std::size_t>(*rp)] &= kRed;

    // Breadth-first from C, nearest first, ties by index.
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
      if (view_.on_outer(v)) {
        dist[static_cast<std::size_t>(v)] = 0;
        queue.push_back(v);
      }
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int w : g.neighbors(queue[h]))
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(queue[h])] + 1;
          queue.push_back(w);
        }
    for (int v = 0; v < n; ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const int da = dist[static_cast<std::size_t>(a)] < 0 ? n : dist[static_cast<std::size_t>(a)];
      const int db = dist[static_cast<std::size_t>(b)] < 0 ? n : dist[static_cast<std::size_t>(b)];
      return da < db;
    });
  }

  std::optional<DecompositionCertificate> run() {
    for (int v = 0; v < g_.vertex_count(); ++v) {
      const auto d = domain_[static_cast<std::size_t>(v)];
      if (d == 0) return std::nullopt;
      if (d == kRed && !assign(v, 0)) return std::nullopt;
    }
    if (!search(0, 0)) return std::nullopt;
    DecompositionCertificate cert;
    const int n = g_.vertex_count();
    cert.rb = RBColoring(n);
    cert.blue3 = PaletteColoring(n);
    for (int v = 0; v < n; ++v) {
      const int val = value_[static_cast<std::size_t>(v)];
      cert.rb.set(v, val == 0 ? Mark::Red : Mark::Blue);
      if (val > 0) cert.blue3.set(v, kFirstBlueColor + val - 1);
    }
    cert.nodes = nodes_;
    cert.checks = certify(g_, view_.spec(), pre_, cert.rb, cert.blue3);
    if (!cert.checks.all()) throw error(errc::certification_failed, "decomposition search produced an uncertifiable coloring");
    return cert;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::uint8_t kRed = 1, kBlue = 0b1110, kAll = 0b1111;

  void add_tuple(std::vector<int> t) {
    const int id = static_cast<int>(tuples_.size());
    for (int v : t) tuples_of_[static_cast<std::size_t>(v)].push_back(id);
    tuples_.push_back(std::move(t));
  }

  bool restrict(int v, std::uint8_t keep) {
    auto& d = domain_[static_cast<std::size_t>(v)];
    if ((d & keep) == d) return true;
    trail_.emplace_back(v, d);
    d &= keep;
    return d != 0;
  }

  bool assign(int v, int val) {
    value_[static_cast<std::size_t>(v)] = val;
    if (val > 0) {
      const auto bit = static_cast<std::uint8_t>(1u << val);
      for (int w : sq_.neighbors(v)) {
        if (value_[static_cast<std::size_t>(w)] == val) return false;
        if (value_[static_cast<std::size_t>(w)] < 0 && !restrict(w, static_cast<std::uint8_t>(~bit))) return false;
      }
      return true;
    }
    for (int id : tuples_of_[static_cast<std::size_t>(v)]) {
      int open = -1, open_count = 0;
      bool blocked = false;
      for (int u : tuples_[static_cast<std::size_t>(id)]) {
        const int x = value_[static_cast<std::size_t>(u)];
        if (x > 0) blocked = true;
        else if (x < 0) {
          open = u;
          ++open_count;
        }
      }
      if (blocked) continue;
      if (open_count == 0) return false;
      if (open_count == 1 && !restrict(open, kBlue)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [v, d] = trail_.back();
      trail_.pop_back();
      domain_[static_cast<std::size_t>(v)] = d;
    }
  }

  bool search(std::size_t pos, int max_blue) {
    while (pos < order_.size() && value_[static_cast<std::size_t>(order_[pos])] >= 0) ++pos;
    if (pos == order_.size()) return true;
    const int v = order_[pos];
    const auto dom = domain_[static_cast<std::size_t>(v)];
    const int top = std::min(3, max_blue + 1);
    for (int val = 0; val <= top; ++val) {
      if (!(dom & (1u << val))) continue;
      if (++nodes_ > opt_.node_limit)
        throw error(errc::budget_exceeded, "decomposition search exceeded " + std::to_string(opt_.node_limit) + " nodes");
      const std::size_t mark = trail_.size();
      if (assign(v, val) && search(pos + 1, std::max(max_blue, val))) return true;
      value_[static_cast<std::size_t>(v)] = -1;
      undo(mark);
    }
    return false;
  }

  const PlanarGraph& g_;
  BoundaryView view_;
  const RBColoring& pre_;
  SolveOptions opt_;
  SimpleGraph sq_;
  std::vector<int> value_;
  std::vector<std::uint8_t> domain_;
  std::vector<std::vector<int>> tuples_;
  std::vector<std::vector<int>> tuples_of_;
  std::vector<int> order_;
  std::vector<std::pair<int, std::uint8_t>> trail_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Searches for a red/blue extension of `pre` satisfying (i)-(iii) without checking the
/// boundary conditions first. Returns nullopt when the search space is exhausted.
inline std::optional<DecompositionCertificate> search_decomposition(const PlanarGraph& g, const BoundarySpec& spec,
                                                                    const RBColoring& pre, const SolveOptions& opt = {}) {
  if (pre.size() != g.vertex_count()) throw error(errc::input_violation, "precoloring size does not match the graph");
  return detail::DecompositionSearch(g, spec, pre, opt).run();
}

/// Extends `pre` to a certified red/blue coloring. The boundary conditions must hold;
/// failure to find an extension afterwards is reported as no_decomposition.
inline DecompositionCertificate solve_decomposition(const PlanarGraph& g, const BoundarySpec& spec, const RBColoring& pre,
                                                    const SolveOptions& opt = {}) {
  const auto report = check_conditions(g, spec, pre, opt.cycle_bound);
  if (!report.all_pass()) throw error(errc::precondition_failed, "boundary conditions fail: " + report.failures());
  auto cert = search_decomposition(g, spec, pre, opt);
  if (!cert) throw error(errc::no_decomposition, "no red/blue extension satisfies the conclusions for graph " + graph_hash(g));
  return std::move(*cert);
}

inline DecompositionCertificate solve_decomposition(const PlanarGraph& g, const BoundarySpec& spec, const SolveOptions& opt = {}) {
  return solve_decomposition(g, spec, initial_precoloring(g, spec), opt);
}

}  // namespace wegner7
