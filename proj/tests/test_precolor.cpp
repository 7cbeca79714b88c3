#include <catch_amalgamated.hpp>

#include <random>

#include "support/brute.hpp"
#include "support/graphs.hpp"
#include "wegner7/wegner7.hpp"

using namespace wegner7;

namespace {

RBColoring marks_on_cycle(int n, const std::vector<int>& m) {
  RBColoring rb(n);
  for (int v = 0; v < n; ++v) rb.set(v, m[static_cast<std::size_t>(v)] == 0 ? Mark::Blue : m[static_cast<std::size_t>(v)] == 1 ? Mark::Red : Mark::Uncolored);
  return rb;
}

CycleRef whole_cycle(int n) {
  CycleRef c;
  for (int i = 0; i < n; ++i) c.vertices.push_back(i);
  return c;
}

RBColoring all(int n, Mark m) {
  RBColoring rb(n);
  for (int v = 0; v < n; ++v) rb.set(v, m);
  return rb;
}

}  // namespace

TEST_CASE("forbidden cycle examples", "[precolor]") {
  const auto c4 = fixtures::cycle_graph(4), c5 = fixtures::cycle_graph(5), c6 = fixtures::cycle_graph(6);
  CHECK(is_forbidden_cycle(c4, all(4, Mark::Blue), whole_cycle(4)));
  CHECK_FALSE(is_forbidden_cycle(c6, all(6, Mark::Blue), whole_cycle(6)));
  auto rb = all(5, Mark::Blue);
  rb.set(2, Mark::Red);
  CHECK(is_forbidden_cycle(c5, rb, whole_cycle(5)));
  rb.set(2, Mark::Uncolored);
  CHECK(is_forbidden_cycle(c5, rb, whole_cycle(5)));
}

TEST_CASE("dangerous cycle examples", "[precolor]") {
  const auto c4 = fixtures::cycle_graph(4), c5 = fixtures::cycle_graph(5), c6 = fixtures::cycle_graph(6);
  auto rb4 = all(4, Mark::Blue);
  rb4.set(1, Mark::Red);
  CHECK(is_dangerous_cycle(c4, rb4, whole_cycle(4)));
  auto rb5 = all(5, Mark::Blue);
  rb5.set(0, Mark::Red);
  rb5.set(3, Mark::Uncolored);
  CHECK(is_dangerous_cycle(c5, rb5, whole_cycle(5)));
  for (const auto& m : brute::necklaces(6, 3)) CHECK_FALSE(is_dangerous_cycle(c6, marks_on_cycle(6, m), whole_cycle(6)));
  CHECK_FALSE(is_dangerous_cycle(c4, all(4, Mark::Blue), whole_cycle(4)));
}

TEST_CASE("dangerous definition matches the residue rule on short cycles", "[precolor]") {
  for (int len = 3; len <= 9; ++len) {
    const auto g = fixtures::cycle_graph(len);
    for (const auto& m : brute::necklaces(len, 3)) {
      const auto rb = marks_on_cycle(len, m);
      const int non_blue = static_cast<int>(std::count_if(m.begin(), m.end(), [](int x) { return x != 0; }));
      CHECK(is_dangerous_cycle(g, rb, whole_cycle(len)) == brute::dangerous_by_residue(len, non_blue));
    }
  }
}

TEST_CASE("forbidden cycles leave blue vertices without a 3-coloring of the cycle square", "[precolor]") {
  for (int len = 3; len <= 11; ++len) {
    const auto g = fixtures::cycle_graph(len);
    const auto sq = fixtures::adjacency(square(g));
    for (const auto& m : brute::necklaces(len, 2)) {
      const auto rb = marks_on_cycle(len, m);
      if (!is_forbidden_cycle(g, rb, whole_cycle(len))) continue;
      std::vector<int> blue;
      for (int v = 0; v < len; ++v)
        if (rb.is_blue(v)) blue.push_back(v);
      brute::Adj sub(blue.size());
      for (std::size_t i = 0; i < blue.size(); ++i)
        for (std::size_t j = 0; j < blue.size(); ++j) {
          const auto& r = sq[static_cast<std::size_t>(blue[i])];
          if (std::find(r.begin(), r.end(), blue[j]) != r.end()) sub[i].push_back(static_cast<int>(j));
        }
      CHECK_FALSE(brute::colorable(sub, 3));
    }
  }
}

TEST_CASE("flipping a non-blue vertex of a dangerous cycle gives a forbidden cycle", "[precolor]") {
  for (int len = 3; len <= 10; ++len) {
    const auto g = fixtures::cycle_graph(len);
    for (const auto& m : brute::necklaces(len, 3)) {
      auto rb = marks_on_cycle(len, m);
      if (!is_dangerous_cycle(g, rb, whole_cycle(len))) continue;
      for (int v = 0; v < len; ++v) {
        if (rb.is_blue(v)) continue;
        auto flipped = rb;
        flipped.set(v, Mark::Blue);
        CHECK(is_forbidden_cycle(g, flipped, whole_cycle(len)));
      }
    }
  }
}

TEST_CASE("scan_cycles", "[precolor]") {
  const auto cube = fixtures::cube();
  CHECK(scan_cycles(cube, all(8, Mark::Red)).empty());
  auto rb = all(8, Mark::Red);
  for (int v = 4; v < 8; ++v) rb.set(v, Mark::Blue);
  const auto found = scan_cycles(cube, rb);
  const auto forbidden = std::count_if(found.begin(), found.end(), [](const auto& f) { return f.defect == CycleDefect::Forbidden; });
  CHECK(forbidden == 1);

  std::mt19937 rng(3);
  for (int i = 0; i < 15; ++i) {
    const auto g = random_cubic_planar(6 + 2 * (i % 4), 70 + static_cast<std::uint64_t>(i));
    RBColoring m(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) m.set(v, static_cast<Mark>(rng() % 3));
    std::set<std::pair<std::vector<int>, int>> expect, got;
    for (const auto& c : all_cycles(g, 12)) {
      if (is_forbidden_cycle(g, m, c)) expect.insert({c.vertices, 0});
      else if (is_dangerous_cycle(g, m, c)) expect.insert({c.vertices, 1});
    }
    for (const auto& f : scan_cycles(g, m)) got.insert({f.cycle.vertices, f.defect == CycleDefect::Forbidden ? 0 : 1});
    CHECK(got == expect);
  }
}

TEST_CASE("boundary view rejects bad boundary configurations", "[precolor]") {
  const auto cube = fixtures::cube();
  CHECK_THROWS_MATCHES(BoundaryView(cube, BoundarySpec::with_r0(CycleRef{{0, 1, 5, 6, 7, 4}}, 0, ForbiddenKind::Four)), error,
                       Catch::Matchers::Predicate<const error&>([](const error& e) { return e.code() == errc::spec_mismatch; }));
  CHECK_THROWS_AS(BoundaryView(cube, BoundarySpec::with_r0(CycleRef{{0, 1, 2, 3}}, 5, ForbiddenKind::Four)), error);
  CHECK_THROWS_AS(BoundaryView(cube, BoundarySpec::with_r0(CycleRef{{0, 1, 2}}, 0, ForbiddenKind::Four)), error);
  CHECK_NOTHROW(BoundaryView(cube, BoundarySpec::with_r0(CycleRef{{3, 2, 1, 0}}, 0, ForbiddenKind::Four)));
}

TEST_CASE("conditions on the gadget with a five-face as C", "[precolor]") {
  const auto g = prism_gadget();
  const CycleRef c{{0, 6, 3, 4, 1}};
  for (int r0 : {0, 3, 4, 1})
    for (auto kind : {ForbiddenKind::Four, ForbiddenKind::Right, ForbiddenKind::Left}) {
      const auto spec = BoundarySpec::with_r0(c, r0, kind);
      const auto report = check_conditions(g, spec, initial_precoloring(g, spec));
      CHECK(report.all_pass());
    }
  const auto spec = BoundarySpec::with_r0(c, 6, ForbiddenKind::Four);
  const auto report = check_conditions(g, spec, initial_precoloring(g, spec));
  CHECK_FALSE(report.condition(6).pass);
  CHECK(report.condition(6).witness.vertices == std::vector<int>{6});
  const auto j = to_json(report);
  CHECK(j.size() == 9);
  CHECK(j[5]["condition"] == "c6");
  CHECK(j[5]["pass"] == false);
}

TEST_CASE("conditions report cycles and boundary colors", "[precolor]") {
  const auto cube = fixtures::cube();
  const auto spec = BoundarySpec::with_r0(CycleRef{{0, 1, 2, 3}}, 0, ForbiddenKind::Four);
  auto rb = initial_precoloring(cube, spec);
  CHECK(rb.is_blue(5));
  CHECK(rb.is_blue(6));
  CHECK(rb.is_blue(7));
  CHECK(rb[4] == Mark::Uncolored);
  // 4-5-6-7 has one non-blue vertex: dangerous.
  auto report = check_conditions(cube, spec, rb);
  CHECK_FALSE(report.condition(8).pass);
  auto w = report.condition(8).witness.vertices;
  std::sort(w.begin(), w.end());
  CHECK(w == std::vector<int>{4, 5, 6, 7});

  rb.set(4, Mark::Blue);
  report = check_conditions(cube, spec, rb);
  CHECK_FALSE(report.condition(8).pass);
  CHECK(report.condition(8).detail.starts_with("forbidden"));
  CHECK_FALSE(report.condition(7).pass);

  auto two_blue = initial_precoloring(cube, spec);
  two_blue.set(1, Mark::Blue);
  two_blue.set(2, Mark::Blue);
  CHECK_FALSE(check_conditions(cube, spec, two_blue).condition(3).pass);

  const auto none = BoundarySpec{CycleRef{{0, 1, 2, 3}}, std::nullopt};
  const auto r2 = check_conditions(cube, none, all(8, Mark::Red));
  CHECK_FALSE(r2.condition(5).pass);
}

TEST_CASE("red facial 4-paths", "[precolor]") {
  const auto g = prism_gadget();
  const auto spec = BoundarySpec::with_r0(CycleRef{{0, 6, 3, 4, 1}}, 0, ForbiddenKind::Four);
  auto rb = all(7, Mark::Red);
  rb.set(2, Mark::Blue);
  rb.set(5, Mark::Blue);
  CHECK(red_facial_4paths(g, rb, &spec).empty());

  const auto cube = fixtures::cube();
  auto cb = all(8, Mark::Blue);
  CHECK(red_facial_4paths(cube, cb).empty());
  for (int v : {4, 5, 6, 7}) cb.set(v, Mark::Red);
  // The inner square is a face; each of its four 4-paths is red.
  CHECK(red_facial_4paths(cube, cb).size() == 4);
  cb.set(7, Mark::Blue);
  CHECK(red_facial_4paths(cube, cb).empty());
  // Face 0-1-5-4 turns fully red.
  cb.set(0, Mark::Red);
  cb.set(1, Mark::Red);
  CHECK(red_facial_4paths(cube, cb).size() == 4);
}

TEST_CASE("turn-restricted r0 forbids only the matching sharp turn", "[precolor]") {
  const auto cube = fixtures::cube();
  const CycleRef c{{0, 1, 2, 3}};
  const int r0 = 0, rp = 4;
  for (auto kind : {ForbiddenKind::Right, ForbiddenKind::Left}) {
    const auto spec = BoundarySpec::with_r0(c, r0, kind);
    const Turn banned = kind == ForbiddenKind::Right ? Turn::Right : Turn::Left;
    for (int a : {5, 7}) {
      auto rb = all(8, Mark::Blue);
      for (int v : {0, 1, 2, 3}) rb.set(v, Mark::Red);
      rb.set(rp, Mark::Red);
      rb.set(a, Mark::Red);
      const auto paths = red_facial_4paths(cube, rb, &spec);
      const bool flagged = std::any_of(paths.begin(), paths.end(), [](const auto& p) { return p.kind == RedFacialPath::Kind::ThreePathAtR0; });
      CHECK(flagged == (turn_direction(cube, r0, rp, a) == banned));
    }
    // Four-forbidden never flags 3-paths.
    const auto four = BoundarySpec::with_r0(c, r0, ForbiddenKind::Four);
    auto rb = all(8, Mark::Red);
    for (const auto& p : red_facial_4paths(cube, rb, &four)) CHECK(p.kind == RedFacialPath::Kind::FourPath);
  }
}

TEST_CASE("class square-graphs", "[precolor]") {
  const auto g = prism_gadget();
  CHECK(blue_square_graph(g, all(7, Mark::Blue)).graph == square(g));
  CHECK(red_square_graph(g, all(7, Mark::Blue)).graph.vertex_count() == 0);
  const auto c6 = fixtures::cycle_graph(6);
  RBColoring alt(6);
  for (int v = 0; v < 6; ++v) alt.set(v, v % 2 ? Mark::Red : Mark::Blue);
  const auto blue = blue_square_graph(c6, alt);
  CHECK(blue.graph.vertex_count() == 3);
  CHECK(blue.graph.is_complete());
  CHECK(blue.to_host == std::vector<int>{0, 2, 4});
}
