#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchlat/graph.hpp"
#include "matchlat/polytope.hpp"

namespace matchlat {

enum class LeafLabel { brick, brace, petersen_brick };
std::string to_string(LeafLabel label);

/// One node of a tight cut decomposition. Internal nodes carry the tight cut
/// they were split along; `shore_child` is node/X̄ (the shore kept) and
/// `other_child` is node/X.
struct DecompNode {
  MultiGraph graph;
  std::vector<VertexSet> origin;          // root vertices behind each node vertex
  std::map<EdgeId, EdgeId> provenance;    // node edge id -> root edge id
  std::optional<Cut> cut;
  int shore_child = -1;
  int other_child = -1;
  std::optional<LeafLabel> label;

  bool is_leaf() const { return label.has_value(); }
};

struct DecompTree {
  std::vector<DecompNode> nodes;  // nodes[0] is the root

  std::vector<int> leaves() const;
  int brick_count() const;
  int brace_count() const;
  int petersen_count() const;
};

/// First tight cut in canonical shore order.
std::optional<Cut> find_tight_cut(const MatchingPolytope& p);
std::optional<Cut> find_tight_cut(const MultiGraph& g, ScanOptions options = {});

/// All tight cuts in canonical shore order.
std::vector<Cut> tight_cuts(const MatchingPolytope& p);

struct DecompositionOptions {
  ScanOptions scan;
  /// When set, each split uses a tight cut drawn uniformly from all tight cuts.
  std::optional<std::uint64_t> seed;
  /// Compare each node's brick count against its polytope dimension.
  bool check_dimension = true;
};

/// Throws TheoremFalsified if the brick count disagrees with the one implied
/// by dim P(G) = |E| - |V| + 1 - b(G).
DecompTree tight_cut_decomposition(const MultiGraph& g, DecompositionOptions options = {});

int brick_count(const MultiGraph& g, ScanOptions options = {});
bool is_near_brick(const MultiGraph& g, ScanOptions options = {});
bool is_petersen_free(const MultiGraph& g, ScanOptions options = {});

/// A Petersen-brick leaf with its 5-cycles lifted to root edge ids (one
/// lowest-id representative per cycle edge), sorted lexicographically.
struct PetersenBrick {
  int node = -1;
  std::vector<FiveCycle> cycles;
};
std::vector<PetersenBrick> petersen_bricks(const DecompTree& tree);
std::vector<PetersenBrick> petersen_bricks(const MultiGraph& g, ScanOptions options = {});

/// Edge set of a leaf 5-cycle closed under parallel edges of the leaf, as
/// root edge ids. Taking whole parallel classes keeps x(A) even on the
/// matching lattice; a single representative would not once parallels exist.
std::vector<EdgeId> parity_set(const DecompTree& tree, const PetersenBrick& brick, const FiveCycle& cycle);

/// Canonical parity set per Petersen brick: built from each brick's least
/// 5-cycle. Ordered by leaf.
std::vector<std::vector<EdgeId>> canonical_parity_sets(const DecompTree& tree);

struct Barrier {
  VertexSet barrier;
  VertexSet big_component;  // the shore side that stays connected
  std::vector<VertexSet> components;
};

/// For a tight cut δ(X) of a near-brick where one contraction is bipartite.
/// Throws PreconditionViolated(not_near_brick | not_tight | no_bipartite_side).
Barrier barrier_of_tight_cut(const MultiGraph& g, VertexSet x, ScanOptions options = {});

}  // namespace matchlat
