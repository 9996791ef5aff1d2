#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "matchlat/bitset.hpp"

namespace matchlat {

using EdgeId = int;

/// Graphs are limited to this many vertices so that vertex sets fit a word.
inline constexpr int kMaxGraphVertices = 64;

/// A set of vertices of one graph, stored as a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }
  static VertexSet of(std::span<const int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }
  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & all(n).bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> to_vector() const;

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical shore order: by size, then lexicographically by sorted vertex list.
bool shore_less(VertexSet a, VertexSet b);

struct Edge {
  EdgeId id;
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with stable edge identities. Edges are kept sorted by
/// id; "edge index" below always means the position in that order, and edge
/// vectors (incidence vectors, BitSets over edges) are indexed by it.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Throws std::invalid_argument on self-loops, duplicate ids, bad endpoints,
  /// or more than kMaxGraphVertices vertices.
  MultiGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }
  std::vector<EdgeId> edge_ids() const;

  std::optional<int> index_of(EdgeId id) const;
  /// Like index_of but throws std::out_of_range for unknown ids.
  int index_at(EdgeId id) const;

  /// Edge indices incident to v.
  std::span<const int> incident(int v) const { return incidence_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size()); }
  VertexSet vertices() const { return VertexSet::all(vertex_count_); }

  /// Edges with exactly one endpoint in x, as a BitSet over edge indices.
  BitSet boundary(VertexSet x) const;
  std::vector<EdgeId> boundary_ids(VertexSet x) const;
  /// Edges with both endpoints in x.
  BitSet inside(VertexSet x) const;

  /// Converts a BitSet over edge indices into sorted edge ids.
  std::vector<EdgeId> ids_of(const BitSet& edges) const;
  BitSet edge_set(std::span<const EdgeId> ids) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

/// An odd or even cut δ(X). The shore is canonical: the side containing vertex 0.
struct Cut {
  VertexSet shore;
  BitSet boundary;

  friend bool operator==(const Cut& a, const Cut& b) { return a.shore == b.shore; }
};

Cut make_cut(const MultiGraph& g, VertexSet x);

/// Result of collapsing groups of vertices. `origin[v]` is the set of input
/// vertices that new vertex v stands for.
struct Quotient {
  MultiGraph graph;
  std::vector<VertexSet> origin;
};

/// Maps vertex v of g to class_of[v] in [0, class_count). Edges inside a class
/// disappear; every other edge keeps its id.
Quotient quotient(const MultiGraph& g, std::span<const int> class_of, int class_count);

/// G/X̄: keeps the vertices of `keep` (renumbered in increasing order) and
/// collapses the complement into one new last vertex.
struct Contraction {
  MultiGraph graph;
  std::vector<VertexSet> origin;
  int contraction_vertex = -1;
};
Contraction contract_shore(const MultiGraph& g, VertexSet keep);

/// One representative per parallel class (the lowest id).
struct Simplification {
  MultiGraph graph;
  std::map<EdgeId, std::vector<EdgeId>> classes;  // representative -> all members
};
Simplification simplify(const MultiGraph& g);

/// Keeps only the edges in `keep` (a BitSet over edge indices); vertices stay.
MultiGraph restrict_edges(const MultiGraph& g, const BitSet& keep);

bool is_connected(const MultiGraph& g);
/// Side of a proper 2-colouring holding vertex 0 of each component, if bipartite.
std::optional<VertexSet> bipartition(const MultiGraph& g);
inline bool is_bipartite(const MultiGraph& g) { return bipartition(g).has_value(); }
/// Length of a shortest cycle; parallel edges count as 2-cycles. nullopt for forests.
std::optional<int> girth(const MultiGraph& g);
/// Connected components of g - s, ordered by least vertex.
std::vector<VertexSet> components_minus(const MultiGraph& g, VertexSet s);

/// Vertex bijection a -> b mapping edges onto edges, ignoring multiplicities.
std::optional<std::vector<int>> find_isomorphism(const MultiGraph& a, const MultiGraph& b);

/// The Petersen graph: outer cycle 0..4 (ids 0..4), spokes i~i+5 (ids 5..9),
/// inner pentagram 5-7-9-6-8 (ids 10..14).
MultiGraph petersen_graph();
bool is_petersen(const MultiGraph& g);

struct FiveCycle {
  std::vector<int> vertices;  // starts at the least vertex, second < last
  std::vector<EdgeId> edges;  // edge (v[i], v[i+1 mod 5]), lowest id among parallels
};
std::vector<FiveCycle> five_cycles(const MultiGraph& g);

}  // namespace matchlat
