#include <catch_amalgamated.hpp>

#include "support/brute.hpp"
#include "support/graphs.hpp"
#include "wegner7/wegner7.hpp"

using namespace wegner7;

namespace {

std::vector<int> degree_sequence(const PlanarGraph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Isomorphism by trying every vertex permutation; fine for seven vertices.
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size()) return false;
  std::vector<int> p(static_cast<std::size_t>(a.vertex_count()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) ok = ok && b.has_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("prism gadget", "[generators]") {
  const auto g = prism_gadget();
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 10);
  CHECK(degree_sequence(g) == std::vector<int>{2, 3, 3, 3, 3, 3, 3});
  CHECK(square(g).is_complete());
  CHECK(brute::face_lengths(g.rotation()) == std::vector<int>{3, 3, 4, 5, 5});
}

TEST_CASE("subdividing any non-triangle prism edge gives the same graph", "[generators]") {
  const auto p = to_simple(prism());
  std::vector<SimpleGraph> variants;
  for (auto [u, v] : p.edges()) {
    bool in_triangle = false;
    for (int w = 0; w < 6; ++w) in_triangle = in_triangle || (p.has_edge(u, w) && p.has_edge(v, w));
    if (in_triangle) continue;
    std::vector<Edge> es;
    for (auto e : p.edges())
      if (e != Edge{u, v}) es.push_back(e);
    es.push_back({u, 6});
    es.push_back({v, 6});
    variants.push_back(SimpleGraph::from_edges(7, es));
  }
  REQUIRE(variants.size() == 3);
  for (const auto& s : variants) CHECK(isomorphic(s, to_simple(prism_gadget())));
}

TEST_CASE("tight example", "[generators]") {
  const auto g = wegner_tight();
  CHECK(g.vertex_count() == 14);
  CHECK(g.is_cubic());
  CHECK(is_planar(to_simple(g)));
  CHECK(g.has_edge(6, 13));
}

TEST_CASE("random cubic planar graphs", "[generators]") {
  CHECK(to_simple(random_cubic_planar(4, 99)) == to_simple(k4()));
  for (int n = 6; n <= 20; n += 2)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = random_cubic_planar(n, seed);
      CHECK(g.vertex_count() == n);
      CHECK(g.is_cubic());
      CHECK(is_three_connected(g));
      CHECK(is_planar(to_simple(g)));
    }
  CHECK(write_rot(random_cubic_planar(16, 42)) == write_rot(random_cubic_planar(16, 42)));
  CHECK_THROWS_MATCHES(random_cubic_planar(7, 1), error,
                       Catch::Matchers::Predicate<const error&>([](const error& e) { return e.code() == errc::bad_n; }));
  CHECK_THROWS_AS(random_cubic_planar(2, 1), error);
}

TEST_CASE("corpus", "[generators]") {
  CorpusSpec spec;
  spec.count = 30;
  spec.seed = 5;
  const auto a = corpus(spec);
  const auto b = corpus(spec);
  REQUIRE(a.size() == 30);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(write_rot(a[i].graph) == write_rot(b[i].graph));
    CHECK(a[i].meta.three_connected);
    CHECK(a[i].meta.light_k1 + a[i].meta.light_k2 <= 11);
  }
  CHECK(a.front().id == "c000-n8");
  spec.include_tight = true;
  const auto c = corpus(spec);
  CHECK(c.size() == 31);
  CHECK(c.back().id == "tight-n14");
  CHECK(to_json(c.back().meta)["cubic"] == true);
}
