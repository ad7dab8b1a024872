#include <doctest.h>

#include <set>

#include "arcrigid/graph.hpp"
#include "arcrigid/pca.hpp"
#include "random_instances.hpp"
#include "test_support.hpp"

using namespace arcrigid;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

std::set<VertexSet> edge_set(const Hypergraph& h) {
  return {h.edges().begin(), h.edges().end()};
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.closed_neighborhood(1).count() == 3);
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("complement of C5 is C5 and has an odd cycle") {
  const auto co = complement_graph(cycle(5));
  for (Vertex v = 0; v < 5; ++v) CHECK(co.degree(v) == 2);
  CHECK(is_connected(co));
  const auto bp = bipartition(co);
  CHECK_FALSE(bp.bipartite);
  CHECK(bp.odd_cycle.size() % 2 == 1);
}

TEST_CASE("bipartition witnesses are valid on random graphs") {
  testgen::Rng rng(5);
  for (int iter = 0; iter < 500; ++iter) {
    const auto g = testgen::random_graph(rng, 3 + iter % 8, 0.3);
    const auto bp = bipartition(g);
    if (bp.bipartite) {
      for (auto [u, v] : g.edges()) CHECK(bp.side[u] != bp.side[v]);
    } else {
      const auto& c = bp.odd_cycle;
      REQUIRE(c.size() % 2 == 1);
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));
    }
  }
}

TEST_CASE("neighborhood hypergraphs") {
  Graph k2(2, {{0, 1}});
  auto nk = closed_neighborhood_hypergraph(k2);
  CHECK(nk.hypergraph.edge_count() == 1);
  CHECK(nk.edge_of_vertex == std::vector<std::size_t>{0, 0});

  const auto fig = gen_fig_example();
  const auto nf = closed_neighborhood_hypergraph(fig).hypergraph;
  CHECK(nf.edge_count() == 6);
  const auto a = *fig.find("a");
  CHECK(fig.closed_neighborhood(a) == testsupport::set_of(fig.labels(), "a b c y z"));
  CHECK(fig.closed_neighborhood(a).count() == 5);
  CHECK(is_twin_free(fig));
}

TEST_CASE("open neighbourhoods of the complement are the complemented closed ones") {
  testgen::Rng rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const auto g = testgen::random_graph(rng, 2 + iter % 9, 0.5);
    const auto lhs = open_neighborhood_hypergraph(complement_graph(g)).hypergraph;
    const auto rhs = complement_hypergraph(closed_neighborhood_hypergraph(g).hypergraph);
    CHECK(edge_set(lhs) == edge_set(rhs));
  }
}

TEST_CASE("twin classes and components") {
  Graph g(4, {{0, 1}, {2, 3}});
  CHECK(twin_classes(g).size() == 2);
  CHECK_FALSE(is_twin_free(g));
  CHECK(connected_components(g).size() == 2);
  CHECK(is_twin_free(cycle(5)));
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(universal_vertices(star).indices() == std::vector<Vertex>{0});
  CHECK(is_bipartite(star));
}
