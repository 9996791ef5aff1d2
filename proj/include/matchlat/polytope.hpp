#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "matchlat/graph.hpp"
#include "matchlat/matchings.hpp"

namespace matchlat {

inline constexpr int kDefaultVertexCap = 16;

struct ScanOptions {
  /// Exhaustive shore scans refuse graphs above this many vertices.
  int max_vertices = kDefaultVertexCap;
};

/// Something exposing a face: x_e >= 0 for an edge, x(δ(X)) >= 1 for a cut,
/// or the intersection of two facets (by facet index).
struct FaceExposer {
  enum class Kind { edge, cut, intersection };
  Kind kind;
  EdgeId edge = -1;
  VertexSet shore;
  std::pair<int, int> facets{-1, -1};

  static FaceExposer of_edge(EdgeId e) { return {Kind::edge, e, {}, {}}; }
  static FaceExposer of_cut(VertexSet x) { return {Kind::cut, -1, x, {}}; }
  static FaceExposer of_facets(int a, int b) { return {Kind::intersection, -1, {}, {a, b}}; }
};

/// A face of P(G), held as the set of perfect matchings (by index into the
/// polytope's matching list) lying on it. dim is -1 for the empty face.
struct Face {
  std::vector<FaceExposer> exposers;
  BitSet members;
  int dim = -1;

  bool edge_exposed() const;
  std::vector<EdgeId> exposing_edges() const;
  std::vector<VertexSet> exposing_shores() const;
};

struct CutClass {
  Cut cut;
  bool is_tight = false;
  bool is_separating = false;
  bool is_facet_defining = false;
  Face face;
};

/// V-representation of the perfect matching polytope of a matching-covered
/// graph. Face dimensions are cached by member set; the cache is guarded, so a
/// shared instance may be queried from several threads.
class MatchingPolytope {
 public:
  /// Throws PreconditionViolated("not_matching_covered") otherwise.
  explicit MatchingPolytope(MultiGraph g, ScanOptions options = {});

  const MultiGraph& graph() const { return graph_; }
  const std::vector<PerfectMatching>& matchings() const { return matchings_; }
  const ScanOptions& options() const { return options_; }
  int dim() const { return dim_; }
  std::size_t matching_count() const { return matchings_.size(); }

  /// Affine dimension of the convex hull of the given matchings.
  int face_dim(const BitSet& members) const;

  /// Matchings meeting δ(X) exactly once.
  BitSet cut_members(VertexSet x) const;
  /// Matchings avoiding edge index e.
  BitSet edge_members(int edge_index) const;
  /// |M ∩ δ(X)| for every matching M.
  std::vector<int> cut_intersections(VertexSet x) const;
  /// Whether the member matchings together use every edge.
  bool covers_all_edges(const BitSet& members) const;

  CutClass classify_cut(VertexSet x) const;

  /// Canonical odd shores X (vertex 0 ∈ X, 1 < |X| < |V|-1) in canonical order.
  /// Throws CapExceeded above the vertex cap.
  const std::vector<VertexSet>& odd_shores() const;

  std::vector<Face> facets() const;
  std::vector<Face> codim2_faces(const std::vector<Face>& facets) const;

 private:
  MultiGraph graph_;
  ScanOptions options_;
  std::vector<PerfectMatching> matchings_;
  std::vector<IntVector> vectors_;
  int dim_ = -1;
  mutable std::mutex mutex_;
  mutable std::unordered_map<BitSet, int, BitSetHash> dim_cache_;
  mutable std::optional<std::vector<VertexSet>> odd_shores_;
};

/// Canonical odd shores of an arbitrary graph with an even number of vertices.
std::vector<VertexSet> canonical_odd_shores(const MultiGraph& g, ScanOptions options = {});

int polytope_dim(const MultiGraph& g);
CutClass classify_cut(const MultiGraph& g, VertexSet x);

struct BvnResult {
  bool is_bvn = true;
  std::optional<Cut> witness;
};
BvnResult is_bvn(const MatchingPolytope& p);
BvnResult is_bvn(const MultiGraph& g, ScanOptions options = {});

std::vector<Face> enumerate_facets(const MultiGraph& g, ScanOptions options = {});
std::vector<Face> enumerate_codim2_faces(const MultiGraph& g, ScanOptions options = {});

bool cuts_equivalent(const MultiGraph& g, VertexSet x1, VertexSet x2);

struct UncrossReport {
  Cut intersection_cut;      // δ(X1 ∩ X2)
  Cut union_cut;             // δ(X1 ∪ X2)
  std::vector<EdgeId> difference_edges;  // edges between X1∖X2 and X2∖X1
  bool no_edge_condition = false;
  bool identity_holds = false;
  std::vector<int> violating_matchings;  // indices into the sorted matching list
};
/// Shores must cross and meet in an odd number of vertices.
UncrossReport uncross(const MultiGraph& g, VertexSet x1, VertexSet x2);

}  // namespace matchlat
