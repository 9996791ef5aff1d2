#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matchlat/basis.hpp"
#include "matchlat/corpus.hpp"
#include "matchlat/decomposition.hpp"
#include "matchlat/errors.hpp"
#include "support.hpp"

using namespace matchlat;

namespace {

Merge prism_merge(std::optional<int> pin = std::nullopt) {
  const MultiGraph g = prism_graph();
  const VertexSet x{0, 1, 2};
  const Basis b1 = greedy_basis(MatchingPolytope(contract_shore(g, x.complement(6)).graph));
  const Basis b2 = greedy_basis(MatchingPolytope(contract_shore(g, x).graph));
  return merge_bases(g, x, b1, b2, pin);
}

std::string reason_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PreconditionViolated& e) {
    return e.reason();
  }
  return "";
}

}  // namespace

TEST_CASE("greedy basis spans the polytope") {
  for (const auto& g : corpus()) {
    MatchingPolytope p(g.graph);
    const Basis b = greedy_basis(p);
    CHECK(static_cast<int>(b.size()) == p.dim() + 1);
    CHECK(oracle::bareiss_rank(support::to_mat(b.matrix())) == p.dim() + 1);
  }
}

TEST_CASE("merging across the prism's triangle cut") {
  const Merge m = prism_merge();
  const MultiGraph& g = m.merged.graph;
  CHECK(m.first.size() == 3);
  CHECK(m.second.size() == 3);
  CHECK(m.merged.size() == 3 + 3 - 3);
  CHECK(m.slots.size() == m.merged.size());
  const BitSet cut = g.boundary(m.shore);
  for (const auto& z : m.merged.elements) {
    CHECK(is_perfect_matching(g, z.edges));
    CHECK(z.meets(cut) == 1);
  }
  CHECK(oracle::bareiss_rank(support::to_mat(m.merged.matrix())) == 3);
}

TEST_CASE("a pinned element is composed exactly once") {
  for (int pin = 0; pin < 3; ++pin) {
    CAPTURE(pin);
    Merge m;
    const std::string reason = reason_of([&] { m = prism_merge(pin); });
    if (!reason.empty()) {
      CHECK(reason == "pin");
      continue;
    }
    int uses = 0;
    for (const auto& s : m.slots) uses += s.first == pin;
    CHECK(uses == 1);
    REQUIRE(m.pinned.has_value());
    CHECK(m.slots[static_cast<std::size_t>(*m.pinned)].first == pin);
    CHECK(*m.pinned != 0);
  }
}

TEST_CASE("merge preconditions") {
  const MultiGraph g = prism_graph();
  const VertexSet x{0, 1, 2};
  const Basis b1 = greedy_basis(MatchingPolytope(contract_shore(g, x.complement(6)).graph));
  CHECK(reason_of([&] { merge_bases(g, x, b1, Basis{g, {}, BasisKind::linear}); }) == "bad_basis");
  const Basis b2 = greedy_basis(MatchingPolytope(contract_shore(g, x).graph));
  CHECK(reason_of([&] { merge_bases(g, x, b1, b2, 7); }) == "pin");
  MatchingPolytope p(g);
  for (VertexSet y : p.odd_shores()) {
    if (p.classify_cut(y).is_separating) continue;
    CHECK(reason_of([&] { merge_bases(g, y, b1, b1); }) == "not_separating");
    break;
  }
}

TEST_CASE("coefficient transfer reproduces the composition") {
  const Merge m = prism_merge();
  const RatVector alpha{Rational(1, 2), Rational(-3), Rational(2, 7)};
  // β chosen so x and y agree on the cut: solve for β from x's cut values.
  const MultiGraph& g1 = m.first.graph;
  const MultiGraph& g2 = m.second.graph;
  RatVector x(static_cast<std::size_t>(g1.edge_count()), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (auto e : m.first.elements[i].incidence.indices()) x[e] += alpha[i];
  RatMatrix a(static_cast<std::size_t>(g2.edge_count()), m.second.size());
  RatVector rhs;
  std::vector<std::size_t> rows;
  RatMatrix cut_rows(0, m.second.size());
  for (const auto& block : m.blocks) {
    RatVector row;
    for (const auto& el : m.second.elements)
      row.emplace_back(el.incidence.test(static_cast<std::size_t>(g2.index_at(block.edge))) ? 1 : 0);
    cut_rows.append_row(row);
    rhs.push_back(x[static_cast<std::size_t>(g1.index_at(block.edge))]);
  }
  const auto beta = solve(cut_rows, rhs);
  REQUIRE(beta.has_value());
  const RatVector lambda = merge_coefficients(m, alpha, *beta);
  CHECK(lambda.size() == m.merged.size());

  // Integer in, integer out.
  const RatVector ia{Rational(2), Rational(-1), Rational(5)};
  RatVector ix(static_cast<std::size_t>(g1.edge_count()), 0);
  for (std::size_t i = 0; i < ia.size(); ++i)
    for (auto e : m.first.elements[i].incidence.indices()) ix[e] += ia[i];
  RatVector irhs;
  for (const auto& block : m.blocks) irhs.push_back(ix[static_cast<std::size_t>(g1.index_at(block.edge))]);
  const auto ib = solve(cut_rows, irhs);
  REQUIRE(ib.has_value());
  for (const auto& v : *ib) REQUIRE(v.get_den() == 1);
  for (const auto& v : merge_coefficients(m, ia, *ib)) CHECK(v.get_den() == 1);

  CHECK(reason_of([&] { merge_coefficients(m, alpha, RatVector{1, 0, 0}); }) == "cut_disagreement");
}

TEST_CASE("near-brick Petersen bases") {
  for (const char* name : {"petersen", "petersen-parallel", "pete-c4-splice"}) {
    CAPTURE(name);
    const MultiGraph g = corpus_graph(name).graph;
    const PetersenBasis b = near_brick_petersen_basis(g);
    MatchingPolytope p(g);
    REQUIRE(static_cast<int>(b.matchings.size()) == p.dim() + 1);
    const BitSet d = g.edge_set(b.cut);
    CHECK(b.matchings[0].meets(d) == 5);
    BitSet used(static_cast<std::size_t>(g.edge_count()));
    for (std::size_t i = 1; i < b.matchings.size(); ++i) {
      CHECK(b.matchings[i].meets(d) == 1);
      used |= b.matchings[i].incidence;
    }
    CHECK(used == BitSet::full(used.size()));
    CHECK(oracle::bareiss_rank(support::to_mat(support::matching_matrix(b.matchings, g.edge_count()))) == p.dim() + 1);
  }
  CHECK(reason_of([] { near_brick_petersen_basis(prism_graph()); }) == "not_petersen_brick");
  CHECK(reason_of([] { near_brick_petersen_basis(corpus_graph("pete-k4-splice").graph); }) == "not_near_brick");
}

TEST_CASE("intersection pairs and their preconditions") {
  for (const char* name : {"prism", "double-prism", "prism-c4-splice", "pete-k4-bricksplice"}) {
    CAPTURE(name);
    const MultiGraph g = corpus_graph(name).graph;
    const IntersectionPair pair = find_intersection_pair(g);
    CHECK(pair.matching.meets(pair.cut.boundary) == 3);
    const CutClass c = classify_cut(g, pair.cut.shore);
    CHECK(c.is_separating);
    CHECK(c.is_facet_defining);
  }
  CHECK(reason_of([] { find_intersection_pair(complete_graph(4)); }) == "bvn");
  CHECK(reason_of([] { find_intersection_pair(petersen_graph()); }) == "petersen_brick");
  CHECK(reason_of([] { find_intersection_pair(cube_graph()); }) == "not_near_brick");
}

TEST_CASE("cut adjustment moves off a Petersen-brick contraction") {
  const MultiGraph g = corpus_graph("pete-k4-bricksplice").graph;
  MatchingPolytope p(g);
  const VertexSet k4_side{9, 10, 11};
  REQUIRE_FALSE(is_petersen_free(contract_shore(g, k4_side.complement(12)).graph));
  const auto adjusted = adjust_petersen_cut(p, k4_side);
  REQUIRE(adjusted.has_value());
  const VertexSet y = adjusted->cut.shore;
  CHECK(adjusted->matching.meets(g.boundary(y)) == 3);
  const CutClass c = p.classify_cut(y);
  CHECK(c.is_separating);
  CHECK(c.is_facet_defining);
  CHECK(is_petersen_free(contract_shore(g, y).graph));
  CHECK(is_petersen_free(contract_shore(g, y.complement(12)).graph));
}

TEST_CASE("integral bases pass the maximal-minor oracle") {
  for (const auto& g : corpus()) {
    if (!is_petersen_free(g.graph)) continue;
    CAPTURE(g.name);
    const IntegralBasisResult r = integral_basis(g.graph);
    CHECK(r.basis.kind == BasisKind::integral);
    CHECK(oracle::integral_rows(support::to_mat(r.basis.matrix())));
  }
  CHECK(reason_of([] { integral_basis(petersen_graph()); }) == "petersen_brick");
}

TEST_CASE("lattice bases generate the matching lattice") {
  for (const auto& g : corpus()) {
    CAPTURE(g.name);
    const LatticeBasisResult r = lattice_basis(g.graph);
    MatchingPolytope p(g.graph);
    CHECK(static_cast<int>(r.basis.size()) == p.dim() + 1);
    CHECK(hnf(r.basis.matrix()) == hnf(support::matching_matrix(p.matchings(), g.graph.edge_count())));
  }
}

TEST_CASE("lattice characterisation") {
  const LatticeReport pete = characterize_lattice(petersen_graph());
  CHECK(pete.index == 2);
  CHECK(pete.index_log2 == 1);
  CHECK(pete.equality);
  CHECK(pete.doubling);
  CHECK(pete.parity_sets.size() == 1);
  // Independent index: gcd of maximal minors of the six matching vectors.
  CHECK(oracle::minor_gcd(support::matching_rows(petersen_graph()), 6) == 2);

  for (const char* name : {"prism", "k33", "cube", "pete-k4-bricksplice"}) {
    CAPTURE(name);
    const LatticeReport r = characterize_lattice(corpus_graph(name).graph);
    CHECK(r.index == 1);
    CHECK(r.equality);
    CHECK(r.parity_sets.empty());
  }
}

TEST_CASE("parity sublattice of an explicit set") {
  const MultiGraph g = petersen_graph();
  const IntMatrix all = support::matching_matrix(enumerate_perfect_matchings(g), g.edge_count());
  const Lattice sat = saturation(all);
  const Lattice par = parity_sublattice(g, sat, {{0, 1, 2, 3, 4}});
  CHECK(par == hnf(all));
  CHECK(lattice_index(par, sat) == Integer(2));
}
