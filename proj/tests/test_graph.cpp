#include <doctest.h>

#include "ffree/error.hpp"
#include "ffree/graph.hpp"
#include "helpers.hpp"

using namespace ffree;

TEST_CASE("pair_index follows the colex formula") {
  CHECK(pair_index(0, 1, 4).index == 0);
  CHECK(pair_index(1, 2, 4).index == 2);
  CHECK(pair_index(0, 3, 4).index == 3);
  CHECK_THROWS_AS(pair_index(2, 2, 4), Error);
  CHECK_THROWS_AS(pair_index(3, 1, 4), Error);
  CHECK_THROWS_AS(pair_index(1, 4, 4), Error);
}

TEST_CASE("pair_index round trip for n up to 64") {
  for (Vertex n = 2; n <= 64; ++n) {
    std::uint64_t expected = 0;
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        const EdgeId id = pair_index(u, v, n);
        REQUIRE(id.index == expected++);
        REQUIRE(pair_of(id) == Edge{u, v});
      }
    }
    REQUIRE(expected == pair_count(n));
  }
}

TEST_CASE("pair_of survives large indices") {
  for (Vertex v : {1000u, 65535u, 100000u}) {
    for (Vertex u : {0u, 1u, v / 2, v - 1}) {
      CHECK(pair_of(EdgeId{std::uint64_t{v} * (v - 1) / 2 + u}) == Edge{u, v});
    }
  }
}

TEST_CASE("parse_pattern grammar") {
  const PatternGraph tri = parse_pattern("0-1 1-2 0-2");
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(parse_pattern("triangle") == tri);
  CHECK(parse_pattern("TRIANGLE") == tri);
  CHECK(parse_pattern("0-1,1-2, 2-0") == tri);

  const PatternGraph f = parse_pattern("n=4 0-1");
  CHECK(f.vertex_count() == 4);
  CHECK(f.edges() == std::vector<Edge>{{0, 1}});

  CHECK(parse_pattern("K4").edge_count() == 6);
  CHECK(parse_pattern("K5").edge_count() == 10);
  CHECK(parse_pattern("C4").edge_count() == 4);
  CHECK(parse_pattern("C5").vertex_count() == 5);
  CHECK(parse_pattern("P3").edge_count() == 2);
  CHECK(parse_pattern("P4").edge_count() == 3);
  const PatternGraph petersen = parse_pattern("petersen");
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);
  for (Vertex d : petersen.degrees()) CHECK(d == 3);
}

TEST_CASE("parse_pattern reports positions") {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_pattern(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  CHECK(position_of("0-1 1-1") == 4);
  CHECK(position_of("0-1 x") == 4);
  CHECK(position_of("n=2 0-2") == 0);
  CHECK(position_of("0-1 1-") != std::string_view::npos);
  CHECK(position_of("hexagon") == 0);
  CHECK(parse_pattern("").vertex_count() == 0);
}

TEST_CASE("pattern text round trip") {
  for (const std::string& name : preset_names()) {
    const PatternGraph f = parse_pattern(name);
    CHECK(parse_pattern(to_pattern_string(f)) == f);
  }
  for (const char* text : {"n=4 0-1", "n=3", "0-1", "n=7 2-5 0-6"}) {
    const PatternGraph f = parse_pattern(text);
    CHECK(parse_pattern(to_pattern_string(f)) == f);
  }
  CHECK(to_pattern_string(parse_pattern("n=4 0-1")) == "n=4 0-1");
}

TEST_CASE("pattern construction normalizes") {
  const PatternGraph f(3, {{2, 1}, {1, 2}, {0, 1}});
  CHECK(f.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(PatternGraph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(PatternGraph(3, {{0, 3}}), Error);
}

TEST_CASE("complement") {
  CHECK(complement(LabeledGraph(3)) == testing_util::from_pattern(parse_pattern("triangle")));
  CHECK(complement(LabeledGraph::complete(4)) == LabeledGraph(4));
  for (Vertex n : {1u, 2u, 7u, 11u, 64u, 65u, 90u}) {
    LabeledGraph g(n);
    for (std::uint64_t i = 0; i < g.pair_count(); i += 3) g.set_edge(EdgeId{i});
    const LabeledGraph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.edge_count() + c.edge_count() == pair_count(n));
    CHECK_FALSE(g.shares_edge_with(c));
  }
}

TEST_CASE("induced_subgraph") {
  const Vertex s012[] = {0, 1, 2};
  CHECK(induced_subgraph(parse_pattern("K4"), s012) == parse_pattern("triangle"));
  const Vertex s01[] = {0, 1};
  CHECK(induced_subgraph(parse_pattern("triangle"), s01) == parse_pattern("0-1"));
  const Vertex s02[] = {0, 2};
  const PatternGraph iso = induced_subgraph(parse_pattern("P3"), s02);
  CHECK(iso.vertex_count() == 2);
  CHECK(iso.edge_count() == 0);
  const Vertex bad[] = {0, 3};
  CHECK_THROWS_AS(induced_subgraph(parse_pattern("triangle"), bad), Error);
}

TEST_CASE("labeled graph set operations") {
  const LabeledGraph k4 = LabeledGraph::complete(4);
  const LabeledGraph tri(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.is_subgraph_of(k4));
  CHECK_FALSE(k4.is_subgraph_of(tri));
  CHECK(k4.shared_edge_count(tri) == 3);
  CHECK(k4.minus(tri).edge_count() == 3);
  CHECK_THROWS_AS(k4.shared_edge_count(LabeledGraph(5)), Error);
  CHECK(LabeledGraph::from_edge_ids(4, tri.edge_ids()) == tri);
  CHECK(tri.has_edge(2, 0));
  CHECK_FALSE(tri.has_edge(0, 3));
  CHECK(strip_isolated(parse_pattern("n=5 1-3")) == parse_pattern("0-1"));
  CHECK(to_pattern(tri) == parse_pattern("n=4 0-1 1-2 0-2"));
}
