#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matchlat/corpus.hpp"
#include "matchlat/errors.hpp"
#include "matchlat/polytope.hpp"
#include "support.hpp"

using namespace matchlat;

TEST_CASE("dimension agrees with the rank oracle") {
  for (const auto& g : corpus()) {
    CAPTURE(g.name);
    CHECK(polytope_dim(g.graph) == oracle::bareiss_rank(support::matching_rows(g.graph)) - 1);
  }
}

TEST_CASE("construction requires a matching-covered graph") {
  CHECK_THROWS_AS(MatchingPolytope(MultiGraph(4, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}})), PreconditionViolated);
}

TEST_CASE("Petersen facets and codimension-two faces") {
  MatchingPolytope p(petersen_graph());
  CHECK(p.dim() == 5);
  const auto facets = p.facets();
  REQUIRE(facets.size() == 6);
  for (const auto& f : facets) {
    CHECK_FALSE(f.edge_exposed());
    const auto shores = f.exposing_shores();
    REQUIRE(shores.size() == 1);
    // Each facet cut is a 5-cycle pair: both shores induce 5-cycles.
    const VertexSet x = shores.front();
    CHECK(x.size() == 5);
    CHECK(petersen_graph().inside(x).count() == 5);
    CHECK(petersen_graph().inside(x.complement(10)).count() == 5);
  }
  const auto ridges = p.codim2_faces(facets);
  CHECK(ridges.size() == 15);
  for (const auto& r : ridges) CHECK(r.edge_exposed());
}

TEST_CASE("prism cuts") {
  MatchingPolytope p(prism_graph());
  const CutClass triangle = p.classify_cut(VertexSet{0, 1, 2});
  CHECK_FALSE(triangle.is_tight);
  CHECK(triangle.is_separating);
  CHECK(triangle.is_facet_defining);
  CHECK(triangle.face.dim == 2);
  CHECK_THROWS_AS(p.classify_cut(VertexSet{0, 1}), PreconditionViolated);
  CHECK_THROWS_AS(p.classify_cut(VertexSet{0}), PreconditionViolated);
  CHECK_THROWS_AS(p.classify_cut(VertexSet{0, 9}), PreconditionViolated);
  CHECK(p.odd_shores().size() == 10);
}

TEST_CASE("tight cuts of the spliced graphs") {
  MatchingPolytope p(corpus_graph("brick-plus-pendant-square").graph);
  CHECK(p.classify_cut(VertexSet{0, 1, 2}).is_tight);
}

TEST_CASE("canonical shores honour the vertex cap") {
  const MultiGraph g = corpus_graph("pete-k4-splice").graph;
  CHECK_THROWS_AS(canonical_odd_shores(g, ScanOptions{12}), CapExceeded);
  const auto shores = canonical_odd_shores(g);
  CHECK(std::is_sorted(shores.begin(), shores.end(), shore_less));
  for (VertexSet x : shores) {
    CHECK(x.contains(0));
    CHECK(x.size() % 2 == 1);
    CHECK(x.size() >= 3);
    CHECK(x.size() <= 11);
  }
}

TEST_CASE("BvN recognition") {
  CHECK(is_bvn(complete_graph(4)).is_bvn);
  CHECK(is_bvn(cube_graph()).is_bvn);
  const auto prism = is_bvn(prism_graph());
  CHECK_FALSE(prism.is_bvn);
  REQUIRE(prism.witness.has_value());
  CHECK(prism.witness->shore == VertexSet{0, 1, 2});
  CHECK_FALSE(is_bvn(petersen_graph()).is_bvn);
}

TEST_CASE("equivalent cuts") {
  const MultiGraph g = corpus_graph("prism-c4-splice").graph;
  // The triangle cut and its extension through the square are equivalent.
  CHECK(cuts_equivalent(g, VertexSet{0, 1, 2}, VertexSet{0, 1, 2}));
  CHECK_FALSE(cuts_equivalent(prism_graph(), VertexSet{0, 1, 2}, VertexSet{0, 1, 3}));
}

TEST_CASE("uncrossing on a crossing pair") {
  const MultiGraph g = corpus_graph("prism-c4-splice").graph;
  MatchingPolytope p(g);
  int crossing = 0;
  const auto shores = p.odd_shores();
  for (VertexSet a : shores) {
    for (VertexSet b : shores) {
      if ((a & b).size() % 2 == 0 || !((a - b).size() && (b - a).size() && (a | b).complement(8).size())) continue;
      const BitSet both = p.cut_members(a) & p.cut_members(b);
      if (!p.covers_all_edges(p.cut_members(a)) || !p.covers_all_edges(p.cut_members(b))) continue;
      if (!both.any() || !p.covers_all_edges(both)) continue;
      const UncrossReport r = uncross(g, a, b);
      CHECK(r.no_edge_condition);
      CHECK(r.identity_holds);
      CHECK(r.violating_matchings.empty());
      ++crossing;
    }
  }
  CHECK(crossing > 0);
  CHECK_THROWS_AS(uncross(g, VertexSet{0, 1, 2}, VertexSet{0, 1, 2, 3, 4}), PreconditionViolated);
}
