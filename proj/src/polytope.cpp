#include "matchlat/polytope.hpp"

#include <algorithm>

#include "matchlat/errors.hpp"

namespace matchlat {

bool Face::edge_exposed() const {
  return std::any_of(exposers.begin(), exposers.end(),
                     [](const FaceExposer& x) { return x.kind == FaceExposer::Kind::edge; });
}

std::vector<EdgeId> Face::exposing_edges() const {
  std::vector<EdgeId> out;
  for (const auto& x : exposers)
    if (x.kind == FaceExposer::Kind::edge) out.push_back(x.edge);
  return out;
}

std::vector<VertexSet> Face::exposing_shores() const {
  std::vector<VertexSet> out;
  for (const auto& x : exposers)
    if (x.kind == FaceExposer::Kind::cut) out.push_back(x.shore);
  return out;
}

MatchingPolytope::MatchingPolytope(MultiGraph g, ScanOptions options)
    : graph_(std::move(g)), options_(options) {
  const auto coverage = matching_coverage(graph_);
  if (!coverage.matching_covered) {
    throw PreconditionViolated("not_matching_covered", "graph is not matching-covered");
  }
  matchings_ = enumerate_perfect_matchings(graph_);
  vectors_.reserve(matchings_.size());
  RowSpace space(static_cast<std::size_t>(graph_.edge_count()));
  for (const auto& m : matchings_) {
    vectors_.push_back(m.vector());
    space.add(vectors_.back());
  }
  // Every matching lies on x(δ(v)) = 1, so affine dimension is linear rank - 1.
  dim_ = static_cast<int>(space.rank()) - 1;
}

int MatchingPolytope::face_dim(const BitSet& members) const {
  if (members.none()) return -1;
  {
    std::lock_guard lock(mutex_);
    if (auto it = dim_cache_.find(members); it != dim_cache_.end()) return it->second;
  }
  RowSpace space(static_cast<std::size_t>(graph_.edge_count()));
  for (auto i : members.indices()) {
    space.add(vectors_[i]);
    if (static_cast<int>(space.rank()) == dim_ + 1) break;
  }
  const int dim = static_cast<int>(space.rank()) - 1;
  std::lock_guard lock(mutex_);
  dim_cache_.emplace(members, dim);
  return dim;
}

std::vector<int> MatchingPolytope::cut_intersections(VertexSet x) const {
  const BitSet cut = graph_.boundary(x);
  std::vector<int> out;
  out.reserve(matchings_.size());
  for (const auto& m : matchings_) out.push_back(static_cast<int>(m.meets(cut)));
  return out;
}

BitSet MatchingPolytope::cut_members(VertexSet x) const {
  const BitSet cut = graph_.boundary(x);
  BitSet out(matchings_.size());
  for (std::size_t i = 0; i < matchings_.size(); ++i)
    if (matchings_[i].meets(cut) == 1) out.set(i);
  return out;
}

BitSet MatchingPolytope::edge_members(int edge_index) const {
  BitSet out(matchings_.size());
  for (std::size_t i = 0; i < matchings_.size(); ++i)
    if (!matchings_[i].incidence.test(static_cast<std::size_t>(edge_index))) out.set(i);
  return out;
}

bool MatchingPolytope::covers_all_edges(const BitSet& members) const {
  BitSet used(static_cast<std::size_t>(graph_.edge_count()));
  for (auto i : members.indices()) used |= matchings_[i].incidence;
  return used == BitSet::full(used.size());
}

namespace {

void check_odd_shore(const MultiGraph& g, VertexSet x, const char* who) {
  const int n = g.vertex_count();
  if (!x.is_subset_of(g.vertices())) {
    throw PreconditionViolated("bad_shore", std::string(who) + ": shore has vertices outside the graph");
  }
  if (x.size() % 2 == 0) throw PreconditionViolated("even_shore", std::string(who) + ": shore must be odd");
  if (x.size() <= 1 || x.size() >= n - 1) {
    throw PreconditionViolated("trivial_shore", std::string(who) + ": need 1 < |X| < |V| - 1");
  }
}

}  // namespace

CutClass MatchingPolytope::classify_cut(VertexSet x) const {
  check_odd_shore(graph_, x, "classify_cut");
  CutClass out;
  out.cut = make_cut(graph_, x);
  out.face.members = cut_members(x);
  out.face.exposers.push_back(FaceExposer::of_cut(out.cut.shore));
  out.face.dim = face_dim(out.face.members);
  out.is_tight = out.face.members.count() == matchings_.size();
  out.is_separating = out.face.members.any() && covers_all_edges(out.face.members);
  out.is_facet_defining = out.face.dim == dim_ - 1;
  return out;
}

const std::vector<VertexSet>& MatchingPolytope::odd_shores() const {
  std::lock_guard lock(mutex_);
  if (!odd_shores_) odd_shores_ = canonical_odd_shores(graph_, options_);
  return *odd_shores_;
}

std::vector<Face> MatchingPolytope::facets() const {
  std::vector<Face> out;
  std::unordered_map<BitSet, std::size_t, BitSetHash> index;
  const std::size_t all = matchings_.size();
  auto offer = [&](const BitSet& members, FaceExposer exposer) {
    // A facet holds at least d affinely independent matchings and misses one.
    if (members.count() < static_cast<std::size_t>(std::max(dim_, 0)) || members.count() == all) return;
    if (auto it = index.find(members); it != index.end()) {
      out[it->second].exposers.push_back(exposer);
      return;
    }
    if (face_dim(members) != dim_ - 1) return;
    index.emplace(members, out.size());
    out.push_back(Face{{exposer}, members, dim_ - 1});
  };
  for (int e = 0; e < graph_.edge_count(); ++e) offer(edge_members(e), FaceExposer::of_edge(graph_.edge(e).id));
  for (VertexSet x : odd_shores()) offer(cut_members(x), FaceExposer::of_cut(x));
  return out;
}

std::vector<Face> MatchingPolytope::codim2_faces(const std::vector<Face>& facets) const {
  std::vector<Face> out;
  if (dim_ < 2) return out;
  std::unordered_map<BitSet, std::size_t, BitSetHash> index;
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      BitSet members = facets[a].members & facets[b].members;
      if (members.count() < static_cast<std::size_t>(dim_ - 1)) continue;
      auto exposer = FaceExposer::of_facets(static_cast<int>(a), static_cast<int>(b));
      if (auto it = index.find(members); it != index.end()) {
        out[it->second].exposers.push_back(exposer);
        continue;
      }
      if (face_dim(members) != dim_ - 2) continue;
      index.emplace(members, out.size());
      out.push_back(Face{{exposer}, std::move(members), dim_ - 2});
    }
  }
  for (int e = 0; e < graph_.edge_count(); ++e) {
    if (auto it = index.find(edge_members(e)); it != index.end()) {
      out[it->second].exposers.push_back(FaceExposer::of_edge(graph_.edge(e).id));
    }
  }
  return out;
}

std::vector<VertexSet> canonical_odd_shores(const MultiGraph& g, ScanOptions options) {
  const int n = g.vertex_count();
  if (n > options.max_vertices) throw CapExceeded(n, options.max_vertices);
  std::vector<VertexSet> out;
  if (n % 2 != 0) return out;
  // Shores of size s contain 0 plus s-1 of the vertices 1..n-1, listed in
  // lexicographic order of the sorted vertex list.
  for (int s = 3; s <= n - 3; s += 2) {
    const int k = s - 1;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      VertexSet x{0};
      for (int v : pick) x.insert(v);
      out.push_back(x);
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

int polytope_dim(const MultiGraph& g) { return MatchingPolytope(g).dim(); }

CutClass classify_cut(const MultiGraph& g, VertexSet x) { return MatchingPolytope(g).classify_cut(x); }

BvnResult is_bvn(const MatchingPolytope& p) {
  for (VertexSet x : p.odd_shores()) {
    const BitSet members = p.cut_members(x);
    if (members.none() || !p.covers_all_edges(members)) continue;
    if (p.face_dim(members) == p.dim() - 1) return {false, make_cut(p.graph(), x)};
  }
  return {};
}

BvnResult is_bvn(const MultiGraph& g, ScanOptions options) { return is_bvn(MatchingPolytope(g, options)); }

std::vector<Face> enumerate_facets(const MultiGraph& g, ScanOptions options) {
  return MatchingPolytope(g, options).facets();
}

std::vector<Face> enumerate_codim2_faces(const MultiGraph& g, ScanOptions options) {
  MatchingPolytope p(g, options);
  return p.codim2_faces(p.facets());
}

bool cuts_equivalent(const MultiGraph& g, VertexSet x1, VertexSet x2) {
  if (x1.size() % 2 == 0 || x2.size() % 2 == 0) {
    throw PreconditionViolated("even_shore", "cuts_equivalent: both cuts must be odd");
  }
  const BitSet c1 = g.boundary(x1);
  const BitSet c2 = g.boundary(x2);
  bool same = true;
  visit_perfect_matchings(g, BitSet::full(static_cast<std::size_t>(g.edge_count())), [&](std::span<const int> m) {
    int a = 0;
    int b = 0;
    for (int i : m) {
      a += c1.test(static_cast<std::size_t>(i));
      b += c2.test(static_cast<std::size_t>(i));
    }
    same = a == b;
    return same;
  });
  return same;
}

UncrossReport uncross(const MultiGraph& g, VertexSet x1, VertexSet x2) {
  const int n = g.vertex_count();
  const VertexSet v = g.vertices();
  if (!x1.is_subset_of(v) || !x2.is_subset_of(v)) {
    throw PreconditionViolated("bad_shore", "uncross: shore has vertices outside the graph");
  }
  const VertexSet i = x1 & x2;
  const VertexSet a = x1 - x2;
  const VertexSet b = x2 - x1;
  const VertexSet outside = (x1 | x2).complement(n);
  if (i.empty() || a.empty() || b.empty() || outside.empty()) {
    throw PreconditionViolated("not_crossing", "uncross: shores do not cross");
  }
  if (i.size() % 2 == 0) throw PreconditionViolated("even_intersection", "uncross: |X1 ∩ X2| must be odd");

  UncrossReport out;
  out.intersection_cut = make_cut(g, i);
  out.union_cut = make_cut(g, x1 | x2);
  for (const auto& e : g.edges()) {
    if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))) out.difference_edges.push_back(e.id);
  }
  out.no_edge_condition = out.difference_edges.empty();

  const BitSet c1 = g.boundary(x1);
  const BitSet c2 = g.boundary(x2);
  const auto matchings = enumerate_perfect_matchings(g);
  for (std::size_t k = 0; k < matchings.size(); ++k) {
    const auto& m = matchings[k];
    if (m.meets(c1) + m.meets(c2) != m.meets(out.intersection_cut.boundary) + m.meets(out.union_cut.boundary)) {
      out.violating_matchings.push_back(static_cast<int>(k));
    }
  }
  out.identity_holds = out.violating_matchings.empty();
  return out;
}

}  // namespace matchlat
