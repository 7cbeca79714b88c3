#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "wegner7/simple_graph.hpp"

namespace wegner7 {

/// Planarity of an abstract graph (Boyer-Myrvold edge addition).
template <AdjacencyGraph G>
bool is_planar(const G& h) {
  const int n = h.vertex_count();
  if (n <= 4) return true;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(static_cast<std::size_t>(n));
  long long edges = 0;
  for (int v = 0; v < n; ++v)
    for (int w : h.neighbors(v))
      if (v < w) {
        boost::add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(w), bg);
        ++edges;
      }
  if (edges > 3LL * n - 6) return false;
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace wegner7
