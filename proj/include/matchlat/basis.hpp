#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchlat/decomposition.hpp"
#include "matchlat/linalg.hpp"
#include "matchlat/matchings.hpp"
#include "matchlat/polytope.hpp"

namespace matchlat {

enum class BasisKind { linear, lattice, integral };
std::string to_string(BasisKind kind);

/// Perfect matchings of `graph` whose incidence vectors are independent.
struct Basis {
  MultiGraph graph;
  std::vector<PerfectMatching> elements;
  BasisKind kind = BasisKind::linear;

  std::size_t size() const { return elements.size(); }
  IntMatrix matrix() const;
};

/// Lexicographically first matchings (in enumeration order) that raise the rank.
Basis greedy_basis(const MatchingPolytope& p);

/// Element `first` of the G/X basis composed with element `second` of the
/// G/X̄ basis through `cut_edge`.
struct MergeSlot {
  EdgeId cut_edge = -1;
  int first = -1;
  int second = -1;
};

/// Index sets I_e, J_e for one cut edge, in the order used, and the position
/// of the edge's first composed element in the merged basis.
struct MergeBlock {
  EdgeId edge = -1;
  std::vector<int> first;   // I_e
  std::vector<int> second;  // J_e
  std::size_t offset = 0;
};

struct Merge {
  VertexSet shore;   // X
  Basis first;       // over G/X
  Basis second;      // over G/X̄
  Basis merged;      // over G, a basis of lin(P(G; δ(X)))
  std::vector<MergeSlot> slots;  // parallel to merged.elements
  std::vector<MergeBlock> blocks;
  std::optional<int> pinned;     // index of z* in merged
};

/// The merger B1 ⊙ B2 along the separating cut δ(X). b1 lives on G/X =
/// contract_shore(g, V∖X), b2 on G/X̄ = contract_shore(g, X); elements are
/// matched by edge id. Cut edges are visited in id order and I_e, J_e in
/// basis order, except that a pinned element of b1 is never placed first.
/// Throws PreconditionViolated(not_separating | bad_basis | pin).
Merge merge_bases(const MultiGraph& g, VertexSet x, const Basis& b1, const Basis& b2,
                  std::optional<int> pin = std::nullopt);

/// Coefficients over merge.merged reproducing x ⊙ y, where x = Σ α_i b1_i and
/// y = Σ β_j b2_j. Throws PreconditionViolated("cut_disagreement") if x, y
/// differ on a cut edge.
RatVector merge_coefficients(const Merge& merge, const RatVector& alpha, const RatVector& beta);
/// x ⊙ y over the edge indices of the merged graph.
RatVector compose_vectors(const Merge& merge, const RatVector& x, const RatVector& y);

/// M_0, M_1, ..., M_d for a near-brick whose brick is a Petersen brick:
/// |M_0 ∩ δ(Y)| = 5, |M_i ∩ δ(Y)| = 1, and M_1..M_d cover every edge.
struct PetersenBasis {
  std::vector<PerfectMatching> matchings;  // M_0 first
  VertexSet shore;                          // Y, in root vertices
  std::vector<EdgeId> cut;                  // δ(Y)
};
/// `y` picks the 5-cycle shore; by default the brick's least 5-cycle.
/// Throws PreconditionViolated(not_near_brick | not_petersen_brick | not_a_petersen_cycle).
PetersenBasis near_brick_petersen_basis(const MultiGraph& g, std::optional<VertexSet> y = std::nullopt,
                                        ScanOptions options = {});

struct IntersectionPair {
  PerfectMatching matching;
  Cut cut;
};

/// First (cut, matching) in canonical order with |M ∩ C| = 3 and C separating
/// facet-defining. Throws PreconditionViolated(not_near_brick |
/// petersen_brick | bvn), or TheoremFalsified if the scan comes up empty.
IntersectionPair find_intersection_pair(const MultiGraph& g, ScanOptions options = {});

/// For a separating facet-defining cut δ(X) of a brick whose contraction has a
/// Petersen brick: shrinks X to a minimal tight shore of that contraction, then
/// looks for a 5-cycle shore Y inside it whose cut is separating
/// facet-defining, has Petersen-free contractions and meets some matching
/// three times. nullopt if no such Y turns up.
std::optional<IntersectionPair> adjust_petersen_cut(const MatchingPolytope& p, VertexSet x);

/// Counters describing which branches the integral-basis induction took.
struct IntegralTrace {
  int bvn_bases = 0;
  int subset_searches = 0;
  int tight_merges = 0;
  int brick_steps = 0;
  int adjusted_cuts = 0;
  int cut_fallbacks = 0;
};

struct IntegralBasisResult {
  Basis basis;
  IntegralTrace trace;
};
/// Throws PreconditionViolated("petersen_brick") if g has a Petersen brick.
IntegralBasisResult integral_basis(const MultiGraph& g, ScanOptions options = {});

struct LatticeBasisResult {
  Basis basis;
  std::vector<std::vector<EdgeId>> parity_sets;
};
LatticeBasisResult lattice_basis(const MultiGraph& g, ScanOptions options = {});

struct LatticeReport {
  Lattice lattice;     // L, generated by all perfect matchings
  Lattice saturated;   // L̄ = lin(P) ∩ Z^E
  Lattice parity;      // L̄ ∩ {x : x(A_i) even}
  std::vector<std::vector<EdgeId>> parity_sets;
  int petersen_bricks = 0;
  Integer index;       // [L̄ : L]
  std::optional<int> index_log2;
  bool equality = false;
  bool doubling = false;  // 2x ∈ L for every basis vector x of L̄
};
/// Throws TheoremFalsified if L differs from the parity lattice, or if some
/// 2x falls outside L while a Petersen brick is present.
LatticeReport characterize_lattice(const MultiGraph& g, ScanOptions options = {});

/// L̄ ∩ {x : x(A) even for every A in parity_sets}; each A is a set of edge ids.
Lattice parity_sublattice(const MultiGraph& g, const Lattice& saturated,
                          const std::vector<std::vector<EdgeId>>& parity_sets);

}  // namespace matchlat
