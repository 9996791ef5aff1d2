#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "matchlat/graph.hpp"
#include "matchlat/linalg.hpp"

namespace matchlat {

/// A perfect matching, held both as sorted edge ids and as an incidence set
/// over the owning graph's edge indices.
struct PerfectMatching {
  std::vector<EdgeId> edges;
  BitSet incidence;

  static PerfectMatching from_ids(const MultiGraph& g, std::vector<EdgeId> ids);
  static PerfectMatching from_indices(const MultiGraph& g, std::span<const int> indices);

  IntVector vector() const;
  std::size_t meets(const BitSet& edge_set) const { return incidence.and_count(edge_set); }

  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) { return a.edges == b.edges; }
  friend auto operator<=>(const PerfectMatching& a, const PerfectMatching& b) { return a.edges <=> b.edges; }
};

/// Integer value per edge, indexed by edge index.
using EdgeVector = IntVector;

bool is_perfect_matching(const MultiGraph& g, std::span<const EdgeId> ids);

/// Calls `visit` with the edge indices of every perfect matching using only
/// `allowed` edges, in backtracking order (least uncovered vertex first).
/// Stops early when `visit` returns false.
void visit_perfect_matchings(const MultiGraph& g, const BitSet& allowed,
                             const std::function<bool(std::span<const int>)>& visit);

/// All perfect matchings, sorted lexicographically by edge-id tuple.
std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g);
std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g, const BitSet& allowed);
std::size_t count_perfect_matchings(const MultiGraph& g);

/// Lexicographically least perfect matching inside `allowed`.
std::optional<PerfectMatching> first_perfect_matching(const MultiGraph& g, const BitSet& allowed);

struct MatchingCoverage {
  bool matching_covered = false;
  bool connected = false;
  bool has_perfect_matching = false;
  std::vector<EdgeId> uncovered;
};
MatchingCoverage matching_coverage(const MultiGraph& g);
inline bool is_matching_covered(const MultiGraph& g) { return matching_coverage(g).matching_covered; }

/// Completes `inner`, a perfect matching of contract_shore(g, kept), to a
/// perfect matching of g; the other side is filled with the lexicographically
/// least completion through inner's cut edge. Throws PreconditionViolated if
/// no completion exists (the cut is not separating).
PerfectMatching extend_across_cut(const MultiGraph& g, VertexSet kept, std::span<const EdgeId> inner);

/// Writes x, a non-negative integer vector with x(δ(v)) = k everywhere, as a
/// sum of k perfect matchings of the BvN graph g.
std::vector<PerfectMatching> idp_decompose(const MultiGraph& g, const EdgeVector& x, int k);

}  // namespace matchlat
