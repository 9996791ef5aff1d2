#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "matchlat/corpus.hpp"
#include "matchlat/decomposition.hpp"
#include "matchlat/errors.hpp"
#include "support.hpp"

using namespace matchlat;

namespace {

struct Expected {
  int bricks;
  int braces;
  int petersen;
};

const std::map<std::string, Expected>& table() {
  static const std::map<std::string, Expected> t = {
      {"k4", {1, 0, 0}},
      {"c6", {0, 2, 0}},
      {"k33", {0, 1, 0}},
      {"cube", {0, 1, 0}},
      {"prism", {1, 0, 0}},
      {"double-prism", {1, 0, 0}},
      {"petersen", {1, 0, 1}},
      {"petersen-parallel", {1, 0, 1}},
      {"brick-plus-pendant-square", {1, 1, 0}},
      {"prism-c4-splice", {1, 1, 0}},
      {"pete-c4-splice", {1, 1, 1}},
      {"pete-k4-splice", {2, 1, 1}},
      {"pete-k4-bricksplice", {1, 0, 0}},
  };
  return t;
}

}  // namespace

TEST_CASE("brick and brace counts of the corpus") {
  for (const auto& g : corpus()) {
    CAPTURE(g.name);
    const auto tree = tight_cut_decomposition(g.graph);
    const Expected& e = table().at(g.name);
    CHECK(tree.brick_count() == e.bricks);
    CHECK(tree.petersen_count() == e.petersen);
    CHECK(is_petersen_free(g.graph) == (e.petersen == 0));
    CHECK(is_near_brick(g.graph) == (e.bricks == 1));
    CHECK(tree.brace_count() == e.braces);
  }
}

TEST_CASE("brick counts match the rank oracle through the dimension formula") {
  for (const auto& g : corpus()) {
    CAPTURE(g.name);
    const int d = oracle::bareiss_rank(support::matching_rows(g.graph)) - 1;
    CHECK(brick_count(g.graph) == g.graph.edge_count() - g.graph.vertex_count() + 1 - d);
  }
}

TEST_CASE("seeded decompositions agree on the brick list") {
  for (const char* name : {"pete-k4-splice", "pete-c4-splice", "prism-c4-splice", "c6"}) {
    const MultiGraph g = corpus_graph(name).graph;
    const auto base = tight_cut_decomposition(g);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const auto tree = tight_cut_decomposition(g, {{}, seed});
      CHECK(tree.brick_count() == base.brick_count());
      CHECK(tree.petersen_count() == base.petersen_count());
    }
  }
}

TEST_CASE("node provenance maps back to root edges") {
  const MultiGraph g = corpus_graph("pete-k4-splice").graph;
  const auto tree = tight_cut_decomposition(g);
  for (const auto& node : tree.nodes) {
    for (const auto& [local, root] : node.provenance) {
      CHECK(node.graph.index_of(local).has_value());
      CHECK(g.index_of(root).has_value());
    }
    VertexSet covered;
    for (VertexSet o : node.origin) {
      CHECK((covered & o).empty());
      covered = covered | o;
    }
    CHECK(covered == g.vertices());
  }
}

TEST_CASE("Petersen bricks and parity sets") {
  const auto tree = tight_cut_decomposition(corpus_graph("petersen-parallel").graph);
  const auto bricks = petersen_bricks(tree);
  REQUIRE(bricks.size() == 1);
  CHECK(bricks[0].cycles.size() == 12);
  const auto sets = canonical_parity_sets(tree);
  REQUIRE(sets.size() == 1);
  // The least 5-cycle is the outer one; with 0-1 doubled its parity set has six edges.
  CHECK(sets[0] == std::vector<EdgeId>{0, 1, 2, 3, 4, 15});

  // Every matching meets every parity set an even number of times.
  const MultiGraph g = corpus_graph("petersen-parallel").graph;
  for (const auto& cycle : bricks[0].cycles) {
    const auto a = parity_set(tree, bricks[0], cycle);
    const BitSet set = g.edge_set(a);
    for (const auto& m : enumerate_perfect_matchings(g)) CHECK(m.meets(set) % 2 == 0);
  }
}

TEST_CASE("barriers of tight cuts in near-bricks") {
  const MultiGraph g = corpus_graph("prism-c4-splice").graph;
  const Barrier b = barrier_of_tight_cut(g, VertexSet{0, 1, 2, 3, 4});
  CHECK(b.barrier.size() == 2);
  CHECK(g.inside(b.barrier).none());
  CHECK(b.components.size() == 2);
  CHECK_THROWS_AS(barrier_of_tight_cut(prism_graph(), VertexSet{0, 1, 2}), PreconditionViolated);
  const MultiGraph two = corpus_graph("pete-k4-splice").graph;
  MatchingPolytope p(two);
  for (VertexSet x : p.odd_shores()) {
    if (!p.classify_cut(x).is_tight) continue;
    CHECK_THROWS_AS(barrier_of_tight_cut(two, x), PreconditionViolated);
    break;
  }
}
