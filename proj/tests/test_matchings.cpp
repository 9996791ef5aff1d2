#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "matchlat/corpus.hpp"
#include "matchlat/matchings.hpp"
#include "support.hpp"

using namespace matchlat;

TEST_CASE("matching counts agree with the subset oracle") {
  auto graphs = corpus();
  for (std::uint64_t seed = 1; seed <= 6; ++seed) graphs.push_back(random_graph(seed, 8 + 2 * static_cast<int>(seed % 3)));
  for (const auto& g : graphs) {
    CAPTURE(g.name);
    const auto ms = enumerate_perfect_matchings(g.graph);
    const auto expected = oracle::perfect_matchings(g.graph.vertex_count(), support::pairs_of(g.graph));
    CHECK(ms.size() == expected.size());
    CHECK(count_perfect_matchings(g.graph) == expected.size());
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    for (const auto& m : ms) CHECK(is_perfect_matching(g.graph, m.edges));
  }
}

TEST_CASE("bipartite counts agree with the permanent") {
  const MultiGraph g = complete_bipartite(4, 4);
  oracle::Mat a(4, std::vector<std::int64_t>(4, 1));
  CHECK(count_perfect_matchings(g) == static_cast<std::size_t>(oracle::permanent(a)));
  const MultiGraph cube = cube_graph();
  // Sides by parity of popcount.
  std::vector<int> even, odd;
  for (int v = 0; v < 8; ++v) (std::popcount(static_cast<unsigned>(v)) % 2 ? odd : even).push_back(v);
  oracle::Mat b(4, std::vector<std::int64_t>(4, 0));
  for (const auto& e : cube.edges()) {
    const int u = std::popcount(static_cast<unsigned>(e.u)) % 2 ? e.v : e.u;
    const int w = u == e.u ? e.v : e.u;
    const auto i = std::find(even.begin(), even.end(), u) - even.begin();
    const auto j = std::find(odd.begin(), odd.end(), w) - odd.begin();
    b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1;
  }
  CHECK(count_perfect_matchings(cube) == static_cast<std::size_t>(oracle::permanent(b)));
}

TEST_CASE("every Petersen edge lies in exactly two perfect matchings") {
  const MultiGraph g = petersen_graph();
  const auto ms = enumerate_perfect_matchings(g);
  REQUIRE(ms.size() == 6);
  for (int e = 0; e < g.edge_count(); ++e) {
    int n = 0;
    for (const auto& m : ms) n += m.incidence.test(static_cast<std::size_t>(e));
    CHECK(n == 2);
  }
}

TEST_CASE("matching coverage diagnoses each failure") {
  for (const auto& g : corpus()) CHECK(is_matching_covered(g.graph));
  // A path on four vertices: the middle edge is in no perfect matching.
  const auto path = matching_coverage(MultiGraph(4, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}}));
  CHECK_FALSE(path.matching_covered);
  CHECK(path.has_perfect_matching);
  CHECK(path.uncovered == std::vector<EdgeId>{1});
  const auto split = matching_coverage(MultiGraph(4, {{0, 0, 1}, {1, 2, 3}}));
  CHECK_FALSE(split.connected);
  CHECK_FALSE(matching_coverage(MultiGraph(3, {{0, 0, 1}, {1, 1, 2}})).has_perfect_matching);
}

TEST_CASE("restricted enumeration and first matching") {
  const MultiGraph g = prism_graph();
  BitSet allowed = BitSet::full(9);
  allowed.reset(static_cast<std::size_t>(g.index_at(6)));
  const auto ms = enumerate_perfect_matchings(g, allowed);
  for (const auto& m : ms) CHECK(std::find(m.edges.begin(), m.edges.end(), 6) == m.edges.end());
  const auto first = first_perfect_matching(g, allowed);
  REQUIRE(first.has_value());
  CHECK(*first == ms.front());
}

TEST_CASE("extend_across_cut completes a contraction matching") {
  const MultiGraph g = corpus_graph("pete-c4-splice").graph;
  const VertexSet kept = VertexSet::all(9);  // the Petersen survivors
  const Contraction c = contract_shore(g, kept);
  for (const auto& inner : enumerate_perfect_matchings(c.graph)) {
    const PerfectMatching full = extend_across_cut(g, kept, inner.edges);
    CHECK(is_perfect_matching(g, full.edges));
    for (EdgeId id : inner.edges) CHECK(std::find(full.edges.begin(), full.edges.end(), id) != full.edges.end());
  }
}

TEST_CASE("IDP decomposition of sums of random matchings") {
  std::mt19937_64 rng(99);
  for (const char* name : {"k4", "k33", "cube", "c6"}) {
    const MultiGraph g = corpus_graph(name).graph;
    const auto ms = enumerate_perfect_matchings(g);
    for (int k = 1; k <= 4; ++k) {
      EdgeVector x(static_cast<std::size_t>(g.edge_count()), 0);
      for (int i = 0; i < k; ++i) {
        const auto& m = ms[rng() % ms.size()];
        for (auto idx : m.incidence.indices()) x[idx] += 1;
      }
      const auto parts = idp_decompose(g, x, k);
      REQUIRE(parts.size() == static_cast<std::size_t>(k));
      EdgeVector sum(x.size(), 0);
      for (const auto& m : parts)
        for (auto idx : m.incidence.indices()) sum[idx] += 1;
      CHECK(sum == x);
    }
  }
}
