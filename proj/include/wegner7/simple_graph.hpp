#pragma once

#include <algorithm>
#include <concepts>
#include <ranges>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wegner7/error.hpp"

namespace wegner7 {

/// Anything exposing a vertex count and per-vertex neighbor ranges.
template <class G>
concept AdjacencyGraph = requires(const G& g, int v) {
  { g.vertex_count() } -> std::convertible_to<int>;
  { g.neighbors(v) } -> std::ranges::range;
};

using Edge = std::pair<int, int>;

/// Undirected graph without loops or parallel edges. Neighbor lists are kept sorted.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw error(errc::input_violation, "negative vertex count");
  }

  static SimpleGraph from_edges(int n, std::span<const Edge> edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edges_; }

  /// Returns false when the edge already exists.
  bool add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw error(errc::input_violation, "loop at vertex " + std::to_string(u));
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
    return true;
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
  }

  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  int max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const {
    const auto n = static_cast<long long>(vertex_count());
    return static_cast<long long>(edges_) == n * (n - 1) / 2;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw error(errc::input_violation, "vertex " + std::to_string(v) + " out of range");
  }

  std::vector<std::vector<int>> adj_;
  int edges_ = 0;
};

/// A subgraph on a vertex subset, relabelled 0..k-1; `to_host[i]` is the original id.
struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<int> to_host;
};

inline InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  InducedSubgraph out{SimpleGraph(static_cast<int>(vertices.size())), {}};
  out.to_host.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i])) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
    }
  return out;
}

template <AdjacencyGraph G>
SimpleGraph to_simple(const G& g) {
  SimpleGraph out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v))
      if (v < w) out.add_edge(v, w);
  return out;
}

/// G plus every pair at distance exactly two.
template <AdjacencyGraph G>
SimpleGraph square(const G& g) {
  SimpleGraph out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> nb;
    for (int w : g.neighbors(v)) nb.push_back(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (v < nb[i]) out.add_edge(v, nb[i]);
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (nb[i] != nb[j]) out.add_edge(nb[i], nb[j]);
    }
  }
  return out;
}

/// Vertices of G labelled by connected component, components numbered in order of least vertex.
template <AdjacencyGraph G>
std::vector<int> component_labels(const G& g, int* count = nullptr) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return label;
}

template <AdjacencyGraph G>
bool is_connected(const G& g) {
  int c = 0;
  component_labels(g, &c);
  return c <= 1;
}

/// Decodes one graph6 line (an optional ">>graph6<<" header is accepted).
inline SimpleGraph read_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw error(errc::parse_error, "graph6: truncated input");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw error(errc::parse_error, "graph6: byte out of range at offset " + std::to_string(pos - 1));
    return c - 63;
  };
  long long n = next();
  if (n == 63) {
    n = 0;
    int first = next();
    if (first == 63) {
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = first;
      for (int i = 0; i < 2; ++i) n = (n << 6) | next();
    }
  }
  if (n > (1 << 20)) throw error(errc::parse_error, "graph6: vertex count too large");
  SimpleGraph g(static_cast<int>(n));
  int bits_left = 0;
  int word = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1) g.add_edge(i, j);
    }
  if (pos != text.size()) throw error(errc::parse_error, "graph6: trailing bytes");
  return g;
}

template <AdjacencyGraph G>
std::string write_graph6(const G& g) {
  const SimpleGraph s = to_simple(g);
  const long long n = s.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int word = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (s.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((word << (6 - bits)) + 63));
  return out;
}

/// FNV-1a over the vertex count and sorted edge list; independent of any embedding.
template <AdjacencyGraph G>
std::string graph_hash(const G& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  const SimpleGraph s = to_simple(g);
  mix(static_cast<std::uint64_t>(s.vertex_count()));
  for (auto [u, v] : s.edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 15];
    h >>= 4;
  }
  return out;
}

}  // namespace wegner7
