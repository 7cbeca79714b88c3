#pragma once

// Slow reference implementations used only by tests. None of these call the library's
// algorithms; they work on plain adjacency data.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace brute {

using Adj = std::vector<std::vector<int>>;
using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList edges_of(const Adj& adj) {
  EdgeList out;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for (int v : adj[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

/// Face lengths of a rotation system, with next(u->v) = v->(entry after u in rot[v]).
inline std::vector<int> face_lengths(const Adj& rot) {
  std::set<std::pair<int, int>> used;
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(rot.size()); ++u)
    for (int v : rot[static_cast<std::size_t>(u)]) {
      if (used.count({u, v})) continue;
      int a = u, b = v, len = 0;
      while (!used.count({a, b})) {
        used.insert({a, b});
        ++len;
        const auto& r = rot[static_cast<std::size_t>(b)];
        const auto pos = static_cast<std::size_t>(std::find(r.begin(), r.end(), a) - r.begin());
        const int c = r[(pos + 1) % r.size()];
        a = b;
        b = c;
      }
      out.push_back(len);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Square of a graph by checking all pairs for a common neighbor.
inline Adj square(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  Adj out(static_cast<std::size_t>(n));
  auto adjacent = [&](int a, int b) {
    const auto& r = adj[static_cast<std::size_t>(a)];
    return std::find(r.begin(), r.end(), b) != r.end();
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      bool near = adjacent(a, b);
      for (int c = 0; c < n && !near; ++c) near = adjacent(a, c) && adjacent(c, b);
      if (near) out[static_cast<std::size_t>(a)].push_back(b);
    }
  return out;
}

/// Cycle counts by length, from every edge subset that forms one connected 2-regular graph.
inline std::map<int, int> cycle_counts_by_subsets(const Adj& adj) {
  const auto es = edges_of(adj);
  const int m = static_cast<int>(es.size());
  const int n = static_cast<int>(adj.size());
  std::map<int, int> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    int k = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      ++k;
      const auto [u, v] = es[static_cast<std::size_t>(i)];
      if (++deg[static_cast<std::size_t>(u)] > 2 || ++deg[static_cast<std::size_t>(v)] > 2) ok = false;
      parent[static_cast<std::size_t>(find(u))] = find(v);
    }
    if (!ok || k < 3) continue;
    int root = -1;
    for (int v = 0; v < n && ok; ++v) {
      if (deg[static_cast<std::size_t>(v)] == 0) continue;
      if (deg[static_cast<std::size_t>(v)] != 2) ok = false;
      else if (root < 0) root = find(v);
      else if (find(v) != root) ok = false;
    }
    if (ok) ++out[k];
  }
  return out;
}

/// Whether some assignment of k colors is proper, by trying all k^n of them.
inline bool colorable(const Adj& adj, int k) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  while (true) {
    bool proper = true;
    for (int u = 0; u < n && proper; ++u)
      for (int v : adj[static_cast<std::size_t>(u)])
        if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) proper = false;
    if (proper) return true;
    int i = 0;
    while (i < n && ++c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

inline int chromatic_number(const Adj& adj) {
  int k = 0;
  while (!colorable(adj, k)) ++k;
  return k;
}

namespace detail {

inline bool is_k5(const EdgeList& es, int n) { return n == 5 && es.size() == 10; }

inline bool is_k33(const EdgeList& es, int n) {
  if (n != 6 || es.size() != 9) return false;
  // Bipartite with both sides of size 3.
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 3) continue;
    bool ok = true;
    for (auto [u, v] : es) ok = ok && (((mask >> u) & 1) != ((mask >> v) & 1));
    if (ok) return true;
  }
  return false;
}

// Removes isolated and degree-1 vertices, suppresses degree-2 vertices; relabels.
inline std::pair<EdgeList, int> reduce(EdgeList es, int n) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : es) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int v = 0; v < n && !changed; ++v) {
      const auto& a = adj[static_cast<std::size_t>(v)];
      if (a.size() == 1) {
        es.erase(std::remove_if(es.begin(), es.end(), [&](auto e) { return e.first == v || e.second == v; }), es.end());
        changed = true;
      } else if (a.size() == 2 && a[0] != a[1]) {
        const int x = std::min(a[0], a[1]), y = std::max(a[0], a[1]);
        const bool exists = std::find(es.begin(), es.end(), std::make_pair(x, y)) != es.end();
        es.erase(std::remove_if(es.begin(), es.end(), [&](auto e) { return e.first == v || e.second == v; }), es.end());
        if (!exists) es.emplace_back(x, y);
        changed = true;
      }
    }
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int k = 0;
  for (auto [u, v] : es) {
    if (label[static_cast<std::size_t>(u)] < 0) label[static_cast<std::size_t>(u)] = k++;
    if (label[static_cast<std::size_t>(v)] < 0) label[static_cast<std::size_t>(v)] = k++;
  }
  for (auto& [u, v] : es) {
    u = label[static_cast<std::size_t>(u)];
    v = label[static_cast<std::size_t>(v)];
    if (u > v) std::swap(u, v);
  }
  std::sort(es.begin(), es.end());
  return {es, k};
}

inline bool nonplanar(const EdgeList& in, int n_in, std::map<EdgeList, bool>& memo) {
  auto [es, n] = reduce(in, n_in);
  if (n <= 4) return false;
  if (static_cast<int>(es.size()) > 3 * n - 6) return true;
  if (const auto it = memo.find(es); it != memo.end()) return it->second;
  bool result = is_k5(es, n) || is_k33(es, n);
  for (std::size_t i = 0; i < es.size() && !result; ++i) {
    EdgeList smaller = es;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    result = nonplanar(smaller, n, memo);
  }
  memo[es] = result;
  return result;
}

}  // namespace detail

/// Planarity by searching for a K5 or K3,3 topological minor through edge deletions.
/// Exponential; meant for graphs with at most about ten vertices.
inline bool planar(const Adj& adj) {
  std::map<EdgeList, bool> memo;
  return !detail::nonplanar(edges_of(adj), static_cast<int>(adj.size()), memo);
}

/// Every necklace of length len over {0..k-1} (one representative per rotation class),
/// generated by the Fredricksen-Kessler-Maiorana algorithm.
inline std::vector<std::vector<int>> necklaces(int len, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(len) + 1, 0);
  auto gen = [&](auto&& self, int t, int p) -> void {
    if (t > len) {
      if (len % p == 0) out.emplace_back(a.begin() + 1, a.end());
      return;
    }
    a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
    self(self, t + 1, p);
    for (int j = a[static_cast<std::size_t>(t - p)] + 1; j < k; ++j) {
      a[static_cast<std::size_t>(t)] = j;
      self(self, t + 1, t);
    }
  };
  gen(gen, 1, 1);
  return out;
}

/// Dangerous by residue: length 1 mod 3 with one non-blue vertex, or 2 mod 3 with two.
inline bool dangerous_by_residue(int len, int non_blue) {
  return (len % 3 == 1 && non_blue == 1) || (len % 3 == 2 && non_blue == 2);
}

}  // namespace brute
