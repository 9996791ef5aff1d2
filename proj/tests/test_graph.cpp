#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matchlat/corpus.hpp"
#include "matchlat/graph.hpp"
#include "matchlat/io.hpp"
#include "support.hpp"

using namespace matchlat;

TEST_CASE("construction rejects malformed edge lists") {
  CHECK_THROWS_AS(MultiGraph(3, {{0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(MultiGraph(3, {{0, 0, 1}, {0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(MultiGraph(3, {{0, 0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(MultiGraph(65, {}), std::invalid_argument);
}

TEST_CASE("edges are kept in id order and parallel edges stay distinct") {
  MultiGraph g(2, {{5, 0, 1}, {2, 1, 0}});
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edge(0).id == 2);
  CHECK(g.edge(1).id == 5);
  CHECK(g.index_at(5) == 1);
  CHECK_FALSE(g.index_of(3).has_value());
  CHECK_THROWS_AS(g.index_at(3), std::out_of_range);
  CHECK(g.degree(0) == 2);
}

TEST_CASE("boundary and inside") {
  const MultiGraph g = prism_graph();
  const VertexSet x{0, 1, 2};
  CHECK(g.boundary_ids(x) == std::vector<EdgeId>{6, 7, 8});
  CHECK(g.ids_of(g.inside(x)) == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("canonical shore order: size first, then vertex lists") {
  CHECK(shore_less(VertexSet{0, 5, 6}, VertexSet{0, 1, 2, 3, 4}));
  CHECK(shore_less(VertexSet{0, 1, 6}, VertexSet{0, 2, 3}));
  CHECK_FALSE(shore_less(VertexSet{0, 2, 3}, VertexSet{0, 2, 3}));
}

TEST_CASE("contract_shore renumbers kept vertices and keeps edge ids") {
  const MultiGraph g = prism_graph();
  const Contraction c = contract_shore(g, VertexSet{3, 4, 5});
  CHECK(c.graph.vertex_count() == 4);
  CHECK(c.contraction_vertex == 3);
  CHECK(c.origin[0] == VertexSet{3});
  CHECK(c.origin[3] == VertexSet{0, 1, 2});
  CHECK(c.graph.edge_ids() == std::vector<EdgeId>{3, 4, 5, 6, 7, 8});
  // The three cut edges now meet the contraction vertex.
  for (EdgeId id : {6, 7, 8}) {
    const Edge& e = c.graph.edge(c.graph.index_at(id));
    CHECK((e.u == 3 || e.v == 3));
  }
  CHECK_THROWS_AS(contract_shore(g, g.vertices()), std::invalid_argument);
  CHECK_THROWS_AS(contract_shore(g, VertexSet{}), std::invalid_argument);
}

TEST_CASE("quotient drops edges inside a class") {
  const MultiGraph g = cycle_graph(6);
  std::vector<int> cls{0, 0, 1, 1, 2, 2};
  const Quotient q = quotient(g, cls, 3);
  CHECK(q.graph.edge_count() == 3);
  CHECK(q.origin[1] == VertexSet{2, 3});
}

TEST_CASE("bipartition, connectivity, girth") {
  CHECK(is_bipartite(cube_graph()));
  CHECK(is_bipartite(complete_bipartite(3, 3)));
  CHECK_FALSE(is_bipartite(complete_graph(4)));
  CHECK(girth(petersen_graph()) == 5);
  CHECK(girth(prism_graph()) == 3);
  CHECK(girth(corpus_graph("petersen-parallel").graph) == 2);
  CHECK_FALSE(girth(MultiGraph(3, {{0, 0, 1}, {1, 1, 2}})).has_value());
  CHECK(is_connected(petersen_graph()));
  CHECK_FALSE(is_connected(MultiGraph(4, {{0, 0, 1}, {1, 2, 3}})));
}

TEST_CASE("components_minus orders components by least vertex") {
  const auto parts = components_minus(cycle_graph(6), VertexSet{0, 3});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet{1, 2});
  CHECK(parts[1] == VertexSet{4, 5});
}

TEST_CASE("Petersen recognition ignores multiplicities and relabelling") {
  CHECK(is_petersen(petersen_graph()));
  CHECK(is_petersen(corpus_graph("petersen-parallel").graph));
  CHECK_FALSE(is_petersen(cube_graph()));
  // Relabel v -> 9 - v.
  const MultiGraph pete = petersen_graph();
  std::vector<Edge> edges;
  for (const auto& e : pete.edges()) edges.push_back({e.id, 9 - e.u, 9 - e.v});
  CHECK(is_petersen(MultiGraph(10, edges)));
  CHECK(find_isomorphism(petersen_graph(), MultiGraph(10, edges)).has_value());
}

TEST_CASE("five-cycle enumeration agrees with the brute-force count") {
  for (const auto& g : corpus()) {
    CAPTURE(g.name);
    CHECK(static_cast<int>(five_cycles(g.graph).size()) ==
          oracle::five_cycle_count(g.graph.vertex_count(), support::pairs_of(g.graph)));
  }
  CHECK(five_cycles(petersen_graph()).size() == 12);
}

TEST_CASE("simplify keeps the lowest id of each parallel class") {
  const auto s = simplify(corpus_graph("double-prism").graph);
  CHECK(s.graph.edge_count() == 9);
  CHECK(s.classes.at(6) == std::vector<EdgeId>{6, 9});
}

TEST_CASE("graph files round-trip") {
  for (const auto& g : corpus()) {
    CAPTURE(g.name);
    CHECK(parse_graph_file(emit_graph_file(g)) == g);
  }
  CHECK_THROWS_AS(parse_graph_file("{"), PreconditionViolated);
  CHECK_THROWS_AS(parse_graph_file(R"({"name":"x","vertex_count":2,"edges":[{"id":1,"u":0,"v":1}]})"),
                  PreconditionViolated);
  CHECK_THROWS_AS(parse_graph_file(R"({"name":"x","vertex_count":2,"edges":[{"id":0,"u":0,"v":0}]})"),
                  PreconditionViolated);
  CHECK_THROWS_AS(parse_graph_file(R"({"name":"x","vertex_count":2,"edges":[{"id":0,"u":0,"v":2}]})"),
                  PreconditionViolated);
}
