#include <doctest.h>

#include <optional>

#include "arcrigid/model.hpp"
#include "arcrigid/pca.hpp"

using namespace arcrigid;

namespace {

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("interval reconstruction examples") {
  auto m = reconstruct_interval(path(3), LinearOrder::identity(3));
  CHECK(m.intervals() == std::vector<Endpoints>{{1, 3}, {2, 5}, {4, 6}});
  CHECK(reconstruct_interval(Graph(1), LinearOrder::identity(1)).intervals() ==
        std::vector<Endpoints>{{1, 2}});
  try {
    reconstruct_interval(cycle(4), LinearOrder::identity(4));
    FAIL("C4 has no proper interval model");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRealizable);
  }
}

TEST_CASE("arc reconstruction of C5") {
  const auto g = cycle(5);
  const auto m = reconstruct_arc(g, CircularOrder::identity(5));
  CHECK(m.arc(0).a == 1);
  CHECK(model_to_graph(m) == g);
  CHECK(is_proper(m));
  CHECK(geometric_order(m) == CircularOrder::identity(5));
  // Not a geometric order: 0 2 1 3 4 breaks the arc for N[0].
  CHECK_THROWS_AS(reconstruct_arc(g, CircularOrder({0, 2, 1, 3, 4})), Error);
}

TEST_CASE("two universal vertices are refused") {
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  try {
    reconstruct_arc(k3, CircularOrder::identity(3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyUniversalVertices);
  }
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(SharpArcModel({{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(ArcModel(3, {{1, 4}}), Error);
  CHECK_NOTHROW(SharpArcModel({{1, 3}, {2, 4}}));
}

TEST_CASE("sharpen keeps the graph and separates endpoints") {
  // Shared endpoints, one arc wrapping.
  ArcModel m(4, {{1, 2}, {2, 3}, {3, 1}, {4, 4}});
  const auto s = sharpen(m);
  CHECK(s.points() == 8);
  CHECK(model_to_graph(s) == model_to_graph(m));
  IntervalModel im(3, {{1, 2}, {2, 3}, {2, 2}});
  const auto si = sharpen(im);
  CHECK(model_to_graph(si) == model_to_graph(im));
}

TEST_CASE("random proper arc models round-trip through reconstruction") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 2 + seed % 15;
    const auto gen = gen_random_pca(n, 0.2 + 0.1 * (seed % 8), seed);
    CAPTURE(seed);
    REQUIRE(is_proper(gen.model));
    if (universal_vertices(gen.graph).count() >= 2) continue;
    const auto order = geometric_order(gen.model);
    const auto rebuilt = reconstruct_arc(gen.graph, order);
    CHECK(models_equal_up_to_symmetry(gen.model, rebuilt, false));
    CHECK(models_equal_up_to_symmetry(reflected(gen.model), rebuilt));
  }
}

TEST_CASE("random proper interval models round-trip through reconstruction") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 1 + seed % 20;
    if (n < 2) continue;
    const auto gen = gen_random_proper_interval(n, 0.1 + 0.1 * (seed % 9), seed);
    CAPTURE(seed);
    REQUIRE(is_proper(gen.model));
    const auto rebuilt = reconstruct_interval(gen.graph, geometric_order(gen.model));
    CHECK(rebuilt == gen.model);
  }
}

TEST_CASE("symmetry of models") {
  SharpArcModel m({{1, 3}, {2, 5}, {4, 6}});
  CHECK(models_equal_up_to_symmetry(m, rotated(m, 3)));
  CHECK(models_equal_up_to_symmetry(m, reflected(m)));
  CHECK(reflected(reflected(m)) == m);
  SharpIntervalModel i({{1, 3}, {2, 5}, {4, 6}});
  CHECK(models_equal_up_to_symmetry(i, reflected(i)) == true);
  CHECK(models_equal_up_to_symmetry(i, reflected(i), false) == (reflected(i) == i));
}

TEST_CASE("orientations of random proper models") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 3 + seed % 12;
    const auto gen = gen_random_pca(n, 0.3 + 0.1 * (seed % 7), seed);
    CAPTURE(seed);
    std::optional<Orientation> od;
    try {
      od = round_orientation(gen.model);
    } catch (const Error& e) {
      // Only two universal arcs that together cover the circle are ambiguous.
      CHECK(e.kind() == ErrorKind::AmbiguousDirection);
      CHECK(universal_vertices(gen.graph).count() >= 2);
      continue;
    }
    const auto& d = *od;
    CHECK(d.complete());
    CHECK(round_orientation(reflected(gen.model)) == d.reversed());
    if (universal_vertices(gen.graph).empty()) {
      CHECK(is_round_enumeration(d, geometric_order(gen.model)));
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto gen = gen_random_proper_interval(2 + seed % 12, 0.4, seed);
    const auto d = straight_orientation(gen.model);
    CHECK(d.complete());
    CHECK(is_straight_enumeration(d, geometric_order(gen.model)));
    CHECK(straight_orientation(reflected(gen.model)) == d.reversed());
  }
}

TEST_CASE("orientation editing") {
  Orientation d(path(3));
  CHECK_FALSE(d.complete());
  d.direct(0, 1);
  d.direct(2, 1);
  CHECK(d.complete());
  CHECK(d.in_neighbors(1).count() == 2);
  CHECK_THROWS_AS(d.direct(0, 2), Error);
}
