#include <catch_amalgamated.hpp>

#include <random>

#include "support/brute.hpp"
#include "support/graphs.hpp"
#include "wegner7/wegner7.hpp"

using namespace wegner7;
using fixtures::adjacency;

namespace {

std::vector<int> face_lengths(const PlanarGraph& g) {
  std::vector<int> out;
  for (const auto& f : g.faces()) out.push_back(static_cast<int>(f.length()));
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("simple graph basics", "[graph-core]") {
  SimpleGraph g(4);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), error);
  CHECK_THROWS_AS(g.add_edge(0, 7), error);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  CHECK(fixtures::complete(5).is_complete());
}

TEST_CASE("graph6 round trip", "[graph-core]") {
  CHECK(read_graph6("Bw") == SimpleGraph::from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const SimpleGraph g = random_graph(1 + i % 20, 0.3, rng);
    CHECK(read_graph6(write_graph6(g)) == g);
  }
  const SimpleGraph p = fixtures::petersen();
  CHECK(read_graph6(write_graph6(p)) == p);
  CHECK_THROWS_AS(read_graph6("B"), error);
}

TEST_CASE("rotation validation", "[graph-core]") {
  CHECK_THROWS_MATCHES(from_rotation({{1}, {}}), error, Catch::Matchers::Predicate<const error&>([](const error& e) {
                         return e.code() == errc::asymmetric_rotation;
                       }));
  CHECK_THROWS_MATCHES(from_rotation({{1, 2, 3, 4}, {0}, {0}, {0}, {0}}), error,
                       Catch::Matchers::Predicate<const error&>([](const error& e) { return e.code() == errc::input_violation; }));
  CHECK_THROWS_AS(from_rotation({{1, 1}, {0, 0}}), error);
  CHECK_THROWS_AS(from_rotation({{0}}), error);
}

TEST_CASE("K4 rotation systems: exactly the four-face ones are accepted", "[graph-core]") {
  // Each vertex of K4 has two cyclic orders; 16 systems in total.
  const std::vector<std::vector<int>> base{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  int accepted = 0;
  for (int mask = 0; mask < 16; ++mask) {
    auto rot = base;
    for (int v = 0; v < 4; ++v)
      if ((mask >> v) & 1) std::swap(rot[static_cast<std::size_t>(v)][1], rot[static_cast<std::size_t>(v)][2]);
    const auto lengths = brute::face_lengths(rot);
    if (lengths.size() == 4) {
      const PlanarGraph g = from_rotation(rot);
      CHECK(face_lengths(g) == lengths);
      ++accepted;
    } else {
      CHECK_THROWS_MATCHES(from_rotation(rot), error, Catch::Matchers::Predicate<const error&>([](const error& e) {
                             return e.code() == errc::euler_violation;
                           }));
    }
  }
  CHECK(accepted == 2);
}

TEST_CASE("faces agree with an independent tracer", "[graph-core]") {
  for (int i = 0; i < 30; ++i) {
    const PlanarGraph g = random_cubic_planar(4 + 2 * (i % 8), static_cast<std::uint64_t>(i));
    CHECK(face_lengths(g) == brute::face_lengths(g.rotation()));
    CHECK(g.vertex_count() - g.edge_count() + static_cast<int>(g.faces().size()) == 2);
  }
  CHECK(face_lengths(fixtures::cube()) == std::vector<int>(6, 4));
  CHECK(face_lengths(fixtures::dodecahedron()) == std::vector<int>(12, 5));
  CHECK(face_lengths(fixtures::cycle_graph(5)) == std::vector<int>{5, 5});
}

TEST_CASE("isolated vertices and several components satisfy Euler per component", "[graph-core]") {
  const PlanarGraph g = from_rotation({{}, {2, 3}, {3, 1}, {1, 2}});
  CHECK(g.faces().size() == 2);
}

TEST_CASE("turn direction and facial paths", "[graph-core]") {
  const PlanarGraph g = prism();
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v))
      for (int w : g.neighbors(v)) {
        if (u == w) continue;
        const Turn t = turn_direction(g, u, v, w);
        CHECK((t == Turn::Right) == (g.rotation_successor(v, u) == w));
        CHECK((t == Turn::Left) == (g.rotation_predecessor(v, u) == w));
        const int path[] = {u, v, w};
        CHECK(is_facial_path(g, path));
      }
  const int not_facial[] = {0, 1, 4, 5};
  CHECK_FALSE(is_facial_path(g, not_facial));
  CHECK_THROWS_AS(turn_direction(g, 0, 1, 0), error);
  CHECK_THROWS_AS(turn_direction(g, 0, 4, 5), error);
  const PlanarGraph c5 = fixtures::cycle_graph(5);
  CHECK_THROWS_MATCHES(turn_direction(c5, 0, 1, 2), error, Catch::Matchers::Predicate<const error&>([](const error& e) {
                         return e.code() == errc::degree_too_low;
                       }));
}

TEST_CASE("every facial walk segment is a facial path", "[graph-core]") {
  const PlanarGraph g = random_cubic_planar(12, 3);
  for (const auto& f : g.faces()) {
    const auto vs = g.face_vertices(f);
    if (vs.size() < 4) continue;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const int path[] = {vs[i], vs[(i + 1) % vs.size()], vs[(i + 2) % vs.size()], vs[(i + 3) % vs.size()]};
      CHECK(is_facial_path(g, path));
      const int rev[] = {path[3], path[2], path[1], path[0]};
      CHECK(is_facial_path(g, rev));
    }
  }
}

TEST_CASE("square matches pairwise distance check", "[graph-core]") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const SimpleGraph g = random_graph(3 + i % 10, 0.25, rng);
    const auto sq = adjacency(square(g));
    auto ref = brute::square(adjacency(g));
    for (auto& r : ref) std::sort(r.begin(), r.end());
    CHECK(sq == ref);
  }
  CHECK(square(fixtures::cycle_graph(5)).is_complete());
  CHECK(square(fixtures::petersen()).is_complete());
  CHECK(square(prism_gadget()).edges().size() == 21);
}

TEST_CASE("planarity agrees with a Kuratowski minor search", "[graph-core]") {
  std::mt19937 rng(5);
  int planar = 0, nonplanar = 0;
  for (int i = 0; i < 120; ++i) {
    const SimpleGraph g = random_graph(5 + i % 4, 0.45 + 0.05 * (i % 5), rng);
    const bool expect = brute::planar(adjacency(g));
    CHECK(is_planar(g) == expect);
    (expect ? planar : nonplanar)++;
  }
  CHECK(planar > 10);
  CHECK(nonplanar > 10);
  CHECK_FALSE(is_planar(fixtures::complete(5)));
  CHECK_FALSE(is_planar(SimpleGraph::from_edges(6, std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})));
  CHECK_FALSE(is_planar(fixtures::petersen()));
  CHECK(is_planar(square(fixtures::cycle_graph(6))));
}

TEST_CASE("connectivity measures", "[graph-core]") {
  CHECK(is_three_connected(k4()));
  CHECK(is_three_connected(fixtures::cube()));
  CHECK_FALSE(is_three_connected(prism_gadget()));
  CHECK(bridges(wegner_tight()) == std::vector<Edge>{{6, 13}});
  CHECK(bridges(fixtures::cube()).empty());
  CHECK(cyclically_4_edge_connected(k4()));
  CHECK(cyclically_4_edge_connected(fixtures::dodecahedron()));
  CHECK(cyclically_4_edge_connected(fixtures::cube()));
  CHECK_FALSE(cyclically_4_edge_connected(prism()));
  CHECK_THROWS_AS(cyclically_4_edge_connected(prism_gadget()), error);
}

TEST_CASE("light face pairs", "[graph-core]") {
  CHECK(light_face_pair(fixtures::cube()).total() == 8);
  CHECK(light_face_pair(fixtures::dodecahedron()).total() == 10);
  CHECK(light_face_pair(k4()).total() == 6);
  for (int i = 0; i < 40; ++i) CHECK(light_face_pair(random_cubic_planar(8 + 2 * (i % 5), 100 + static_cast<std::uint64_t>(i))).total() <= 11);
}

TEST_CASE("cycle enumeration matches edge-subset enumeration", "[graph-core]") {
  auto counts = [](const std::vector<CycleRef>& cs) {
    std::map<int, int> out;
    for (const auto& c : cs) ++out[static_cast<int>(c.length())];
    return out;
  };
  CHECK(counts(enumerate_cycles(k4(), 4)) == std::map<int, int>{{3, 4}, {4, 3}});
  CHECK(enumerate_cycles(fixtures::cycle_graph(5), 5).size() == 1);
  CHECK(counts(enumerate_cycles(prism(), 6)) == brute::cycle_counts_by_subsets(adjacency(prism())));
  for (int i = 0; i < 8; ++i) {
    const PlanarGraph g = random_cubic_planar(6 + 2 * (i % 4), 40 + static_cast<std::uint64_t>(i));
    const auto cs = enumerate_cycles(g, g.vertex_count());
    CHECK(counts(cs) == brute::cycle_counts_by_subsets(adjacency(g)));
    for (const auto& c : cs) {
      CHECK(is_cycle_of(g, c));
      CHECK(canonical_cycle(c) == c);
    }
  }
  CHECK_THROWS_AS(enumerate_cycles(fixtures::dodecahedron(), 20, 10), error);
}

TEST_CASE("graph hash is label-sensitive and stable", "[graph-core]") {
  CHECK(graph_hash(prism()) == graph_hash(to_simple(prism())));
  CHECK(graph_hash(prism()) != graph_hash(prism_gadget()));
  CHECK(graph_hash(k4()).size() == 16);
}
