#include <doctest.h>

#include "arcrigid/io.hpp"
#include "arcrigid/pca.hpp"
#include "random_instances.hpp"

using namespace arcrigid;

namespace {

void check_parse_error(std::string_view text, std::size_t line, std::size_t column,
                       void (*parse)(std::string_view)) {
  try {
    parse(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("hypergraph document") {
  const auto h = parse_hypergraph("# example\nvertices: a b c d\nedge: a b\n\nedge: b c d  # tail\n");
  CHECK(h.size() == 4);
  CHECK(h.edge_count() == 2);
  CHECK(h.edges()[1].count() == 3);
  CHECK(parse_hypergraph(emit_hypergraph(h)) == h);
  // The empty hyperedge survives a round trip.
  const auto e = parse_hypergraph("vertices: a b\nedge:\n");
  CHECK(e.has_empty_edge());
  CHECK(parse_hypergraph(emit_hypergraph(e)) == e);
}

TEST_CASE("parse errors carry positions") {
  auto hyper = [](std::string_view t) { parse_hypergraph(t); };
  auto graph = [](std::string_view t) { parse_graph(t); };
  auto model = [](std::string_view t) { parse_model(t); };
  auto order = [](std::string_view t) { parse_order(t); };
  check_parse_error("vertices: a b\nedge: a x\n", 2, 9, hyper);
  check_parse_error("vertices: a b\nedges: a b\n", 2, 1, hyper);
  check_parse_error("vertices: a a\n", 1, 13, hyper);
  check_parse_error("", 1, 1, hyper);
  check_parse_error("vertices: a b c\nedge: a b c\n", 2, 11, graph);
  check_parse_error("vertices: a b\nedge: a a\n", 2, 9, graph);
  check_parse_error("n: 2\narc a 1 x\narc b 2 4\n", 2, 9, model);
  check_parse_error("n: 2\narc a 1 3\ninterval b 2 4\n", 3, 1, model);
  check_parse_error("n: 3\narc a 1 3\narc b 2 4\n", 3, 1, model);
  check_parse_error("cyclic: a b\n", 1, 1, order);
  check_parse_error("linear: a b a\n", 1, 13, order);
}

TEST_CASE("model documents") {
  const auto m = std::get<SharpIntervalModel>(parse_model("n: 3\ninterval a 1 3\ninterval b 2 5\ninterval c 4 6\n"));
  CHECK(m.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(std::get<SharpIntervalModel>(parse_model(emit_model(m))) == m);
  try {
    parse_model("n: 2\narc a 1 2\narc b 2 4\n");
    FAIL("expected MalformedModel");
  } catch (const ParseError&) {
    FAIL("not a syntax problem");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedModel);
  }
}

TEST_CASE("order documents") {
  const auto doc = parse_order("circular: c a b\n");
  CHECK(doc.circular);
  CHECK(resolve_order(doc, {"a", "b", "c"}) == std::vector<Vertex>{2, 0, 1});
  CHECK_THROWS_AS(resolve_order(doc, {"a", "b"}), Error);
  CHECK_THROWS_AS(resolve_order(doc, {"a", "b", "d"}), Error);
  CHECK(emit_order(CircularOrder({2, 0, 1}), {"a", "b", "c"}) == "circular: c a b\n");
  CHECK(emit_order(LinearOrder({1, 0}), {"a", "b"}) == "linear: b a\n");
}

TEST_CASE("orientation documents") {
  const auto d = parse_orientation("vertices: a b c\nedge: a b\nedge: b c\ndir: a b\ndir: c b\n");
  CHECK(d.has_arc(0, 1));
  CHECK(d.has_arc(2, 1));
  CHECK(parse_orientation(emit_orientation(d)) == d);
  CHECK_THROWS_AS(parse_orientation("vertices: a b\nedge: a b\n"), ParseError);
  CHECK_THROWS_AS(parse_orientation("vertices: a b\nedge: a b\ndir: a b\ndir: b a\n"), ParseError);
  CHECK(to_dot(d).find("\"a\" -> \"b\"") != std::string::npos);
  CHECK(to_dot(d.graph()).find("\"b\" -- \"c\"") != std::string::npos);
}

TEST_CASE("emit then parse is the identity on random documents") {
  testgen::Rng rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + iter % 12;
    const auto h = testgen::random_any(rng, n, iter % 6);
    CHECK(parse_hypergraph(emit_hypergraph(h)) == h);
    const auto g = testgen::random_graph(rng, n, 0.4);
    CHECK(parse_graph(emit_graph(g)) == g);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto gen = gen_random_pca(2 + seed % 20, 0.4, seed);
    CHECK(std::get<SharpArcModel>(parse_model(emit_model(gen.model))) == gen.model);
    const auto order = geometric_order(gen.model);
    const auto doc = parse_order(emit_order(order, gen.graph.labels()));
    CHECK(CircularOrder(resolve_order(doc, gen.graph.labels())) == order);
    if (universal_vertices(gen.graph).count() < 2) {
      const auto d = round_orientation(gen.model);
      CHECK(parse_orientation(emit_orientation(d)) == d);
    }
  }
}

TEST_CASE("labels that cannot be written are refused") {
  Graph g(std::vector<std::string>{"a b", "c"});
  CHECK_THROWS_AS(emit_graph(g), Error);
}
