#include <doctest.h>

#include <map>

#include "arcrigid/pca.hpp"
#include "naive_oracle.hpp"
#include "pca_oracle.hpp"
#include "random_instances.hpp"
#include "test_support.hpp"

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

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

naive::Seq as_seq(const std::vector<Vertex>& vs) { return {vs.begin(), vs.end()}; }

naive::Hyper closed_naive(const Graph& g) {
  return naive::from_library(closed_neighborhood_hypergraph(g).hypergraph);
}

const std::unordered_set<naive::EdgeMask>& proper_arc_graphs(int n) {
  static std::map<int, std::unordered_set<naive::EdgeMask>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, naive::proper_graphs(n, true)).first;
  return it->second;
}

const std::unordered_set<naive::EdgeMask>& proper_interval_graphs(int n) {
  static std::map<int, std::unordered_set<naive::EdgeMask>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, naive::proper_graphs(n, false)).first;
  return it->second;
}

// Twin-free connected PCA graphs from the random model generator.
std::vector<Graph> pca_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed0) {
  std::vector<Graph> out;
  for (std::uint64_t seed = seed0; out.size() < count; ++seed) {
    const std::size_t n = 4 + seed % (max_n - 3);
    auto gen = gen_random_pca(n, 0.3 + 0.1 * (seed % 8), seed, {.twin_free = true});
    if (gen.graph.size() >= 4 && is_connected(gen.graph)) out.push_back(std::move(gen.graph));
  }
  return out;
}

}  // namespace

TEST_CASE("half graphs") {
  CHECK(gen_half_graph(1).edge_count() == 1);
  const auto h3 = gen_half_graph(3);
  CHECK(h3.size() == 6);
  CHECK(h3.edge_count() == 6);
  const auto g3 = gen_half_graph_complement(3);
  CHECK(is_twin_free(g3));
  CHECK(is_connected(g3));
  CHECK(recognize_pca(g3).is_pca);
}

TEST_CASE("G_k family") {
  for (std::size_t k = 2; k <= 6; ++k) {
    CAPTURE(k);
    const auto gk = gen_gk(k);
    const std::size_t n = 3 * k - 1;
    REQUIRE(gk.graph.size() == n);
    CHECK(model_to_graph(gk.model) == gk.graph);
    CHECK(is_proper(gk.model));
    std::size_t high = 0;
    for (Vertex v = 0; v < n; ++v) high += gk.graph.degree(v) + 2 == n;
    CHECK(high == k);
    CHECK(is_twin_free(gk.graph));
    CHECK(is_connected(gk.graph));
    CHECK_FALSE(is_bipartite(complement_graph(gk.graph)));
    CHECK(recognize_pca(gk.graph).is_pca);
    CHECK(theorem_ovconn_check(gk.graph));
  }
  const auto g2 = gen_gk(2).graph;
  CHECK(g2.edge_count() == 10 - 5);
  for (auto [x, y] : {std::pair{"v1", "u1"}, {"v2", "u2"}, {"w1", "u1"}, {"w1", "u2"}, {"u1", "u2"}}) {
    CHECK_FALSE(g2.adjacent(*g2.find(x), *g2.find(y)));
  }
  // u_1 w_1 u_2 w_2 .. u_k closes an odd cycle in the complement.
  const auto g4 = gen_gk(4).graph;
  const auto co = complement_graph(g4);
  const char* cyc[] = {"u1", "w1", "u2", "w2", "u3", "w3", "u4"};
  for (int i = 0; i < 7; ++i) {
    CHECK(co.adjacent(*g4.find(cyc[i]), *g4.find(cyc[(i + 1) % 7])));
  }
}

TEST_CASE("figure example") {
  const auto g = gen_fig_example();
  CHECK_FALSE(is_bipartite(complement_graph(g)));
  CHECK(is_twin_free(g));
  const auto rec = recognize_pca(g);
  REQUIRE(rec.is_pca);
  CHECK(strict_connectedness_of_neighborhoods(g));
  CHECK(theorem_ovconn_check(g));
  const auto h = closed_neighborhood_hypergraph(g).hypergraph;
  // N[a] is alone in its strict overlap component.
  const auto comps = relation_components(h, EdgeRelation::StrictOverlap);
  CHECK(comps.components.size() > 1);
  CHECK(naive::arc_classes(closed_naive(g), false).size() == 1);
  const auto report = check_structural_lemmas(g, *rec.tight_order);
  CHECK(report.all_passed());
}

TEST_CASE("recognition examples") {
  CHECK(recognize_proper_interval(path(4)).is_pi);
  CHECK_FALSE(recognize_proper_interval(cycle(4)).is_pi);
  CHECK(recognize_proper_interval(complete(5)).is_pi);
  CHECK(recognize_pca(cycle(4)).is_pca);
  CHECK(recognize_pca(complement_graph(cycle(4))).is_pca);
  CHECK(recognize_pca(Graph(1)).is_pca);
  // The claw K_{1,3} is not PCA.
  CHECK_FALSE(recognize_pca(Graph(4, {{0, 1}, {0, 2}, {0, 3}})).is_pca);
  CHECK_THROWS_AS(recognize_pca(Graph(0)), Error);
}

TEST_CASE("recognition agrees with brute-force models") {
  testgen::Rng rng(17);
  int positive = 0;
  for (int iter = 0; iter < 1500; ++iter) {
    const std::size_t n = 1 + iter % 7;
    const auto g = testgen::random_graph(rng, n, 0.3 + 0.1 * (iter % 6));
    CAPTURE(iter);
    const bool pca = naive::in_family(g, proper_arc_graphs(static_cast<int>(n)));
    const auto rec = recognize_pca(g);
    CHECK(rec.is_pca == pca);
    if (rec.is_pca) {
      ++positive;
      CHECK(naive::circular_valid(closed_naive(g), as_seq(rec.tight_order->sequence()), true));
    }
    const bool pi = naive::in_family(g, proper_interval_graphs(static_cast<int>(n)));
    const auto rp = recognize_proper_interval(g);
    CHECK(rp.is_pi == pi);
    if (rp.is_pi) CHECK(naive::linear_valid(closed_naive(g), as_seq(rp.tight_order->sequence()), true));
  }
  CHECK(positive > 300);
}

TEST_CASE("random PCA generator") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 40;
    const auto a = gen_random_pca(n, 0.5, seed);
    const auto b = gen_random_pca(n, 0.5, seed);
    CHECK(a.graph == b.graph);
    CHECK(a.model == b.model);
    CHECK(a.graph.size() == n);
    CHECK(is_proper(a.model));
    CHECK(recognize_pca(a.graph).is_pca);
    const auto t = gen_random_pca(n, 0.5, seed, {.twin_free = true});
    CHECK(is_twin_free(t.graph));
    CHECK(model_to_graph(t.model) == t.graph);
  }
  CHECK(gen_random_pca(64, 0.3, 1).graph.size() == 64);
  CHECK_THROWS_AS(gen_random_pca(1, 0.5, 1), Error);
  CHECK_THROWS_AS(gen_random_pca(5, 0.0, 1), Error);
}

TEST_CASE("structural lemmas hold for every arc ordering") {
  const auto corpus = pca_corpus(500, 8, 100);
  int checked = 0;
  for (const auto& g : corpus) {
    if (is_bipartite(complement_graph(g))) {
      CHECK_THROWS_AS(check_structural_lemmas(g, *recognize_pca(g).tight_order), Error);
      continue;
    }
    CHECK(universal_vertices(g).empty());
    CHECK(strict_connectedness_of_neighborhoods(g));
    CHECK(theorem_ovconn_check(g));
    for (const auto& seq : naive::arc_classes(closed_naive(g), false)) {
      std::vector<Vertex> vs(seq.begin(), seq.end());
      const auto report = check_structural_lemmas(g, CircularOrder(vs));
      for (const auto& c : report.checks) {
        if (!c.passed) FAIL_CHECK(c.name << ": " << c.counterexample);
      }
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("structural lemma preconditions") {
  const auto g3 = gen_half_graph_complement(3);
  try {
    check_structural_lemmas(g3, *recognize_pca(g3).tight_order);
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
  const auto gk = gen_gk(3);
  auto seq = geometric_order(gk.model).sequence();
  std::swap(seq[0], seq[2]);
  try {
    check_structural_lemmas(gk.graph, CircularOrder(seq));
    FAIL("expected NotAnArcOrdering");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnArcOrdering);
  }
  CHECK(check_structural_lemmas(gk.graph, geometric_order(gk.model)).all_passed());
}

TEST_CASE("neighbourhood arcs") {
  const auto g = cycle(6);
  const auto na = neighborhood_arcs(g, CircularOrder::identity(6));
  CHECK(na.minus[0] == 5);
  CHECK(na.plus[0] == 1);
  CHECK(na.minus[3] == 2);
  CHECK_THROWS_AS(neighborhood_arcs(complete(4), CircularOrder::identity(4)), Error);
}

TEST_CASE("strict connectedness") {
  CHECK_FALSE(strict_connectedness_of_neighborhoods(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(strict_connectedness_of_neighborhoods(cycle(5)));
}

TEST_CASE("nrigid verdicts match enumeration") {
  CHECK(nrigid_verdict(Graph(2, {{0, 1}})).kind == NrigidCase::SmallInstance);
  CHECK_THROWS_AS(nrigid_verdict(Graph(4, {{0, 1}, {2, 3}})), Error);

  const auto g3 = nrigid_verdict(gen_half_graph_complement(3));
  CHECK(g3.kind == NrigidCase::BipartiteConnectedComplement);
  CHECK(g3.tight_orders.size() == 2);
  CHECK(g3.oracle_tight_classes == 2u);
  CHECK(g3.oracle_all_classes > g3.oracle_tight_classes);

  std::map<NrigidCase, int> seen;
  for (const auto& g : pca_corpus(300, 8, 900)) {
    const auto v = nrigid_verdict(g);
    ++seen[v.kind];
    REQUIRE(v.oracle_all_classes);
    const auto tight = naive::arc_classes(closed_naive(g), true).size();
    const auto all = naive::arc_classes(closed_naive(g), false).size();
    CHECK(*v.oracle_tight_classes == tight);
    CHECK(*v.oracle_all_classes == all);
    if (v.claimed_all_classes) CHECK(*v.claimed_all_classes == all);
    if (v.claimed_tight_classes) CHECK(*v.claimed_tight_classes == tight);
    for (const auto& o : v.tight_orders) {
      CHECK(naive::circular_valid(closed_naive(g), as_seq(o.sequence()), true));
    }
    if (v.tight_orders.size() == 2) {
      CHECK_FALSE(orders_equal_up_to_symmetry(v.tight_orders[0], v.tight_orders[1]));
    }
  }
  CHECK(seen[NrigidCase::NonBipartiteComplement] > 20);
  CHECK(seen[NrigidCase::BipartiteConnectedComplement] > 5);
}
