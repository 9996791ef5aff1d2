#include "matchlat/basis.hpp"

#include <algorithm>
#include <functional>

#include "matchlat/errors.hpp"
#include "matchlat/io.hpp"

namespace matchlat {

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::linear: return "linear";
    case BasisKind::lattice: return "lattice";
    case BasisKind::integral: return "integral";
  }
  return "?";
}

IntMatrix Basis::matrix() const {
  IntMatrix m(0, static_cast<std::size_t>(graph.edge_count()));
  for (const auto& e : elements) m.append_row(e.vector());
  return m;
}

namespace {

IntMatrix matrix_of(const MultiGraph& g, const std::vector<PerfectMatching>& ms) {
  IntMatrix m(0, static_cast<std::size_t>(g.edge_count()));
  for (const auto& e : ms) m.append_row(e.vector());
  return m;
}

bool is_integral_basis(const IntMatrix& m) { return lattice_equal(hnf(m), saturation(m)); }

Json basis_json(const std::vector<PerfectMatching>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(m.edges);
  return out;
}

PerfectMatching rehome(const MultiGraph& g, const PerfectMatching& m) {
  if (!is_perfect_matching(g, m.edges)) {
    throw PreconditionViolated("bad_basis", "basis element is not a perfect matching of the contraction");
  }
  return PerfectMatching::from_ids(g, m.edges);
}

BasisKind weaker(BasisKind a, BasisKind b) { return static_cast<int>(a) < static_cast<int>(b) ? a : b; }

// Visits k-subsets of {0..n-1} in lexicographic order until `visit` returns true.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > n || k < 0) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// First basis (greedy, then exhaustive over (d+1)-subsets) whose row lattice
// equals `target`.
std::optional<std::vector<PerfectMatching>> basis_with_lattice(const MatchingPolytope& p, const Lattice& target,
                                                               bool& searched) {
  Basis greedy = greedy_basis(p);
  if (lattice_equal(hnf(greedy.matrix()), target)) return greedy.elements;
  searched = true;
  const auto& ms = p.matchings();
  std::optional<std::vector<PerfectMatching>> found;
  for_each_subset(static_cast<int>(ms.size()), p.dim() + 1, [&](const std::vector<int>& pick) {
    RowSpace space(static_cast<std::size_t>(p.graph().edge_count()));
    std::vector<PerfectMatching> chosen;
    for (int i : pick) {
      if (!space.add(ms[static_cast<std::size_t>(i)].vector())) return false;
      chosen.push_back(ms[static_cast<std::size_t>(i)]);
    }
    if (!lattice_equal(hnf(matrix_of(p.graph(), chosen)), target)) return false;
    found = std::move(chosen);
    return true;
  });
  return found;
}

}  // namespace

Basis greedy_basis(const MatchingPolytope& p) {
  Basis out{p.graph(), {}, BasisKind::linear};
  RowSpace space(static_cast<std::size_t>(p.graph().edge_count()));
  for (const auto& m : p.matchings()) {
    if (space.add(m.vector())) out.elements.push_back(m);
    if (static_cast<int>(space.rank()) == p.dim() + 1) break;
  }
  return out;
}

Merge merge_bases(const MultiGraph& g, VertexSet x, const Basis& b1, const Basis& b2, std::optional<int> pin) {
  const int n = g.vertex_count();
  if (x.empty() || x == g.vertices() || !x.is_subset_of(g.vertices())) {
    throw PreconditionViolated("bad_shore", "merge_bases: shore must be a proper nonempty vertex subset");
  }
  Merge out;
  out.shore = x;
  const MultiGraph g1 = contract_shore(g, x.complement(n)).graph;
  const MultiGraph g2 = contract_shore(g, x).graph;
  if (!is_matching_covered(g1) || !is_matching_covered(g2)) {
    throw PreconditionViolated("not_separating", "merge_bases: cut is not separating");
  }

  auto adopt = [](const MultiGraph& side, const Basis& b, const char* which) {
    Basis out{side, {}, b.kind};
    for (const auto& m : b.elements) out.elements.push_back(rehome(side, m));
    MatchingPolytope p(side);
    RowSpace space(static_cast<std::size_t>(side.edge_count()));
    for (const auto& m : out.elements) {
      if (!space.add(m.vector())) {
        throw PreconditionViolated("bad_basis", std::string("merge_bases: ") + which + " basis is dependent");
      }
    }
    if (static_cast<int>(out.elements.size()) != p.dim() + 1) {
      throw PreconditionViolated("bad_basis", std::string("merge_bases: ") + which + " basis size differs from 1 + dim");
    }
    return out;
  };
  out.first = adopt(g1, b1, "first");
  out.second = adopt(g2, b2, "second");

  if (pin) {
    if (*pin < 0 || *pin >= static_cast<int>(out.first.size())) {
      throw PreconditionViolated("pin", "merge_bases: pin out of range");
    }
    BitSet used(static_cast<std::size_t>(g1.edge_count()));
    for (std::size_t i = 0; i < out.first.size(); ++i)
      if (static_cast<int>(i) != *pin) used |= out.first.elements[i].incidence;
    if (used != BitSet::full(used.size())) {
      throw PreconditionViolated("pin", "merge_bases: the unpinned elements miss an edge");
    }
  }

  const auto cut = g.boundary_ids(x);
  out.merged = Basis{g, {}, weaker(b1.kind, b2.kind)};
  for (EdgeId e : cut) {
    MergeBlock block{e, {}, {}, out.merged.elements.size()};
    const int i1 = g1.index_at(e);
    const int i2 = g2.index_at(e);
    for (std::size_t i = 0; i < out.first.size(); ++i)
      if (out.first.elements[i].incidence.test(static_cast<std::size_t>(i1))) block.first.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < out.second.size(); ++j)
      if (out.second.elements[j].incidence.test(static_cast<std::size_t>(i2))) block.second.push_back(static_cast<int>(j));
    if (block.first.empty() || block.second.empty()) {
      throw PreconditionViolated("bad_basis", "merge_bases: cut edge " + std::to_string(e) + " unused by a basis");
    }
    if (pin && block.first.front() == *pin) {
      if (block.first.size() < 2) throw PreconditionViolated("pin", "merge_bases: pinned element is alone on its cut edge");
      std::swap(block.first[0], block.first[1]);
    }
    auto compose = [&](int i, int j) {
      std::vector<EdgeId> ids = out.first.elements[static_cast<std::size_t>(i)].edges;
      for (EdgeId id : out.second.elements[static_cast<std::size_t>(j)].edges)
        if (id != e) ids.push_back(id);
      if (pin && i == *pin) out.pinned = static_cast<int>(out.merged.elements.size());
      out.merged.elements.push_back(PerfectMatching::from_ids(g, std::move(ids)));
      out.slots.push_back(MergeSlot{e, i, j});
    };
    for (int j : block.second) compose(block.first.front(), j);
    for (std::size_t t = 1; t < block.first.size(); ++t) compose(block.first[t], block.second.front());
    out.blocks.push_back(std::move(block));
  }

  const BitSet cut_set = g.boundary(x);
  RowSpace space(static_cast<std::size_t>(g.edge_count()));
  bool ok = out.merged.size() + cut.size() == out.first.size() + out.second.size();
  for (const auto& z : out.merged.elements) {
    ok = ok && is_perfect_matching(g, z.edges) && z.meets(cut_set) == 1;
    ok = ok && space.add(z.vector());
  }
  if (!ok) {
    Json cert;
    cert["graph"] = graph_json(g);
    cert["shore"] = shore_json(x);
    cert["first"] = basis_json(out.first.elements);
    cert["second"] = basis_json(out.second.elements);
    cert["merged"] = basis_json(out.merged.elements);
    throw TheoremFalsified("merged set is not an independent subset of the cut face of the expected size", std::move(cert));
  }
  return out;
}

namespace {

RatVector combination(const Basis& b, const RatVector& coefficients) {
  RatVector out(static_cast<std::size_t>(b.graph.edge_count()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (auto k : b.elements[i].incidence.indices()) out[k] += coefficients[i];
  return out;
}

}  // namespace

RatVector compose_vectors(const Merge& merge, const RatVector& x, const RatVector& y) {
  const MultiGraph& g = merge.merged.graph;
  RatVector out(static_cast<std::size_t>(g.edge_count()));
  for (int k = 0; k < g.edge_count(); ++k) {
    const EdgeId id = g.edge(k).id;
    if (auto i = merge.first.graph.index_of(id)) out[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(*i)];
    else out[static_cast<std::size_t>(k)] = y[static_cast<std::size_t>(merge.second.graph.index_at(id))];
  }
  return out;
}

RatVector merge_coefficients(const Merge& merge, const RatVector& alpha, const RatVector& beta) {
  if (alpha.size() != merge.first.size() || beta.size() != merge.second.size()) {
    throw PreconditionViolated("bad_coefficients", "merge_coefficients: coefficient count differs from basis size");
  }
  const RatVector x = combination(merge.first, alpha);
  const RatVector y = combination(merge.second, beta);
  for (const auto& block : merge.blocks) {
    if (x[static_cast<std::size_t>(merge.first.graph.index_at(block.edge))] !=
        y[static_cast<std::size_t>(merge.second.graph.index_at(block.edge))]) {
      throw PreconditionViolated("cut_disagreement",
                                 "merge_coefficients: x and y differ on cut edge " + std::to_string(block.edge));
    }
  }

  RatVector lambda(merge.merged.size());
  for (const auto& block : merge.blocks) {
    const auto& I = block.first;
    const auto& J = block.second;
    const std::size_t l = J.size();
    Rational head = alpha[static_cast<std::size_t>(I[0])];
    for (std::size_t t = 1; t < l; ++t) {
      lambda[block.offset + t] = beta[static_cast<std::size_t>(J[t])];
      head -= beta[static_cast<std::size_t>(J[t])];
    }
    lambda[block.offset] = head;
    for (std::size_t t = 1; t < I.size(); ++t) lambda[block.offset + l + t - 1] = alpha[static_cast<std::size_t>(I[t])];
  }

  if (combination(merge.merged, lambda) != compose_vectors(merge, x, y)) {
    Json cert;
    cert["graph"] = graph_json(merge.merged.graph);
    cert["shore"] = shore_json(merge.shore);
    throw TheoremFalsified("transferred coefficients do not reproduce the composition", std::move(cert));
  }
  return lambda;
}

namespace {

bool subtree_contains(const DecompTree& tree, int node, int target) {
  if (node == target) return true;
  const auto& n = tree.nodes[static_cast<std::size_t>(node)];
  if (n.is_leaf()) return false;
  return subtree_contains(tree, n.shore_child, target) || subtree_contains(tree, n.other_child, target);
}

// Basis of a Petersen-brick leaf: N_0 meets D five times, the rest once and
// together they cover every edge.
Basis petersen_leaf_basis(const MultiGraph& h, const BitSet& d) {
  MatchingPolytope p(h);
  const auto& ms = p.matchings();
  Basis out{h, {}, BasisKind::linear};
  RowSpace space(static_cast<std::size_t>(h.edge_count()));
  for (const auto& m : ms) {
    if (m.meets(d) == 5) {
      out.elements.push_back(m);
      space.add(m.vector());
      break;
    }
  }
  if (out.elements.empty()) throw TheoremFalsified("no perfect matching of the Petersen brick meets δ(Y) five times", {});
  BitSet covered(static_cast<std::size_t>(h.edge_count()));
  std::vector<char> used(ms.size(), 0);
  while (static_cast<int>(space.rank()) < p.dim() + 1) {
    std::optional<std::size_t> pick;
    std::optional<std::size_t> fallback;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (used[i] || ms[i].meets(d) != 1 || space.contains(ms[i].vector())) continue;
      if (!fallback) fallback = i;
      if (!ms[i].incidence.is_subset_of(covered)) {
        pick = i;
        break;
      }
    }
    if (!pick) pick = fallback;
    if (!pick) throw TheoremFalsified("Petersen brick basis ran out of matchings meeting δ(Y) once", {});
    used[*pick] = 1;
    space.add(ms[*pick].vector());
    covered |= ms[*pick].incidence;
    out.elements.push_back(ms[*pick]);
  }
  return out;
}

}  // namespace

PetersenBasis near_brick_petersen_basis(const MultiGraph& g, std::optional<VertexSet> y, ScanOptions options) {
  const DecompTree tree = tight_cut_decomposition(g, {options, std::nullopt});
  if (tree.brick_count() != 1) throw PreconditionViolated("not_near_brick", "graph is not a near-brick");
  if (tree.petersen_count() != 1) throw PreconditionViolated("not_petersen_brick", "the brick is not a Petersen brick");
  const PetersenBrick brick = petersen_bricks(tree).front();
  const DecompNode& leaf = tree.nodes[static_cast<std::size_t>(brick.node)];

  auto lift = [&](const FiveCycle& c) {
    VertexSet out;
    for (int v : c.vertices) out = out | leaf.origin[static_cast<std::size_t>(v)];
    return out;
  };
  std::optional<VertexSet> shore;
  std::optional<VertexSet> leaf_shore;
  for (const auto& c : brick.cycles) {
    const VertexSet s = lift(c);
    if (!y || s == *y || s == y->complement(g.vertex_count())) {
      shore = y ? *y : s;
      leaf_shore = VertexSet::of(c.vertices);
      break;
    }
  }
  if (!shore) throw PreconditionViolated("not_a_petersen_cycle", "shore is not a 5-cycle of the Petersen brick");

  const std::vector<EdgeId> cut = g.boundary_ids(*shore);
  {
    auto in_leaf = leaf.graph.boundary_ids(*leaf_shore);
    std::vector<EdgeId> lifted;
    for (EdgeId id : in_leaf) lifted.push_back(leaf.provenance.at(id));
    std::sort(lifted.begin(), lifted.end());
    if (lifted != cut) throw TheoremFalsified("lifted 5-cycle cut differs from the root cut", {{"graph", graph_json(g)}});
  }

  // Rebuilds the basis bottom-up along the path to the Petersen leaf; the
  // sibling of each path node is bipartite and takes any basis.
  std::function<std::pair<Basis, int>(int)> build = [&](int index) -> std::pair<Basis, int> {
    const DecompNode& node = tree.nodes[static_cast<std::size_t>(index)];
    if (node.is_leaf()) {
      BitSet d(static_cast<std::size_t>(node.graph.edge_count()));
      for (EdgeId id : cut)
        if (auto k = node.graph.index_of(id)) d.set(static_cast<std::size_t>(*k));
      return {petersen_leaf_basis(node.graph, d), 0};
    }
    const bool shore_side = subtree_contains(tree, node.shore_child, brick.node);
    const int inner = shore_side ? node.shore_child : node.other_child;
    const int outer = shore_side ? node.other_child : node.shore_child;
    auto [b1, pin] = build(inner);
    Basis b2 = greedy_basis(MatchingPolytope(tree.nodes[static_cast<std::size_t>(outer)].graph));
    // merge_bases wants b1 on node/X', i.e. X' is the side collapsed in `inner`.
    const VertexSet x = node.cut->shore;
    const VertexSet collapsed = shore_side ? x.complement(node.graph.vertex_count()) : x;
    Merge m = merge_bases(node.graph, collapsed, b1, b2, pin);
    return {std::move(m.merged), *m.pinned};
  };
  auto [basis, pin] = build(0);

  PetersenBasis out;
  out.shore = *shore;
  out.cut = cut;
  out.matchings.push_back(basis.elements[static_cast<std::size_t>(pin)]);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (static_cast<int>(i) != pin) out.matchings.push_back(basis.elements[i]);

  const BitSet d = g.edge_set(cut);
  MatchingPolytope p(g, options);
  RowSpace space(static_cast<std::size_t>(g.edge_count()));
  BitSet covered(static_cast<std::size_t>(g.edge_count()));
  bool ok = static_cast<int>(out.matchings.size()) == p.dim() + 1;
  for (std::size_t i = 0; i < out.matchings.size(); ++i) {
    ok = ok && space.add(out.matchings[i].vector());
    ok = ok && out.matchings[i].meets(d) == (i == 0 ? 5u : 1u);
    if (i > 0) covered |= out.matchings[i].incidence;
  }
  if (!ok || covered != BitSet::full(covered.size())) {
    Json cert;
    cert["graph"] = graph_json(g);
    cert["shore"] = shore_json(*shore);
    cert["matchings"] = basis_json(out.matchings);
    throw TheoremFalsified("Petersen near-brick basis lacks the stated intersection pattern", std::move(cert));
  }
  return out;
}

namespace {

bool separating_facet(const MatchingPolytope& p, VertexSet x, BitSet* members_out = nullptr) {
  BitSet members = p.cut_members(x);
  const bool ok = members.any() && p.covers_all_edges(members) && p.face_dim(members) == p.dim() - 1;
  if (members_out) *members_out = std::move(members);
  return ok;
}

std::optional<std::size_t> three_matching(const MatchingPolytope& p, VertexSet x) {
  const BitSet cut = p.graph().boundary(x);
  for (std::size_t i = 0; i < p.matching_count(); ++i)
    if (p.matchings()[i].meets(cut) == 3) return i;
  return std::nullopt;
}

bool sides_petersen_free(const MultiGraph& g, VertexSet x, ScanOptions options) {
  const int n = g.vertex_count();
  return is_petersen_free(contract_shore(g, x).graph, options) &&
         is_petersen_free(contract_shore(g, x.complement(n)).graph, options);
}

Json intersection_table(const MatchingPolytope& p) {
  Json table = Json::array();
  for (VertexSet x : p.odd_shores()) {
    if (!separating_facet(p, x)) continue;
    table.push_back(Json{{"shore", shore_json(x)}, {"intersections", p.cut_intersections(x)}});
  }
  return table;
}

}  // namespace

std::optional<IntersectionPair> adjust_petersen_cut(const MatchingPolytope& p, VertexSet x) {
  const MultiGraph& g = p.graph();
  const ScanOptions options = p.options();
  const int n = g.vertex_count();
  if (is_petersen_free(contract_shore(g, x).graph, options)) x = x.complement(n);
  if (is_petersen_free(contract_shore(g, x).graph, options)) return std::nullopt;

  Contraction side = contract_shore(g, x);
  if (!is_petersen(side.graph)) {
    std::optional<VertexSet> best;
    for (const Cut& c : tight_cuts(MatchingPolytope(side.graph, options))) {
      VertexSet s = c.shore.contains(side.contraction_vertex) ? c.shore.complement(side.graph.vertex_count()) : c.shore;
      VertexSet z;
      for (int v : s.to_vector()) z = z | side.origin[static_cast<std::size_t>(v)];
      if (!best || z.size() < best->size()) best = z;
    }
    if (!best) return std::nullopt;
    side = contract_shore(g, *best);
    if (!is_petersen(side.graph)) return std::nullopt;
  }

  for (const auto& cycle : five_cycles(side.graph)) {
    VertexSet y;
    bool inside = true;
    for (int v : cycle.vertices) {
      if (v == side.contraction_vertex) inside = false;
      else y = y | side.origin[static_cast<std::size_t>(v)];
    }
    if (!inside || !separating_facet(p, y) || !sides_petersen_free(g, y, options)) continue;
    if (auto i = three_matching(p, y)) return IntersectionPair{p.matchings()[*i], make_cut(g, y)};
  }
  return std::nullopt;
}

IntersectionPair find_intersection_pair(const MultiGraph& g, ScanOptions options) {
  MatchingPolytope p(g, options);
  const DecompTree tree = tight_cut_decomposition(g, {options, std::nullopt});
  if (tree.brick_count() != 1) throw PreconditionViolated("not_near_brick", "graph is not a near-brick");
  if (tree.petersen_count() > 0) throw PreconditionViolated("petersen_brick", "graph has a Petersen brick");
  if (is_bvn(p).is_bvn) throw PreconditionViolated("bvn", "graph is BvN");
  for (VertexSet x : p.odd_shores()) {
    if (!separating_facet(p, x)) continue;
    if (auto i = three_matching(p, x)) return {p.matchings()[*i], make_cut(g, x)};
  }
  Json cert;
  cert["graph"] = graph_json(g);
  cert["matchings"] = basis_json(p.matchings());
  cert["cuts"] = intersection_table(p);
  throw TheoremFalsified("no separating facet-defining cut meets a perfect matching three times", std::move(cert));
}

namespace {

class IntegralBuilder {
 public:
  IntegralBuilder(ScanOptions options, IntegralTrace& trace) : options_(options), trace_(trace) {}

  Basis build(const MultiGraph& g) {
    MatchingPolytope p(g, options_);
    if (is_bvn(p).is_bvn) return bvn_basis(p);
    const int n = g.vertex_count();
    if (auto tight = find_tight_cut(p)) {
      ++trace_.tight_merges;
      const VertexSet x = tight->shore;
      Basis b1 = build(contract_shore(g, x.complement(n)).graph);
      Basis b2 = build(contract_shore(g, x).graph);
      Basis out = merge_bases(g, x, b1, b2).merged;
      out.kind = BasisKind::integral;
      return out;
    }

    ++trace_.brick_steps;
    auto [x, matching] = brick_cut(p);
    Basis b1 = build(contract_shore(g, x.complement(n)).graph);
    Basis b2 = build(contract_shore(g, x).graph);
    Basis out = merge_bases(g, x, b1, b2).merged;
    out.elements.push_back(p.matchings()[matching]);
    out.kind = BasisKind::integral;
    if (!is_integral_basis(out.matrix())) {
      Json cert;
      cert["graph"] = graph_json(g);
      cert["shore"] = shore_json(x);
      cert["basis"] = basis_json(out.elements);
      throw TheoremFalsified("appending a 3-intersecting matching broke integrality", std::move(cert));
    }
    return out;
  }

 private:
  Basis bvn_basis(const MatchingPolytope& p) {
    ++trace_.bvn_bases;
    bool searched = false;
    IntMatrix all(0, static_cast<std::size_t>(p.graph().edge_count()));
    for (const auto& m : p.matchings()) all.append_row(m.vector());
    auto found = basis_with_lattice(p, saturation(all), searched);
    if (searched) ++trace_.subset_searches;
    if (!found) {
      Json cert;
      cert["graph"] = graph_json(p.graph());
      cert["matchings"] = basis_json(p.matchings());
      throw TheoremFalsified("BvN graph has no integral basis of perfect matchings", std::move(cert));
    }
    return Basis{p.graph(), std::move(*found), BasisKind::integral};
  }

  bool petersen_free_sides(const MultiGraph& g, VertexSet x) { return sides_petersen_free(g, x, options_); }

  // A separating facet-defining cut with Petersen-free contractions and a
  // perfect matching meeting it three times.
  std::pair<VertexSet, std::size_t> brick_cut(const MatchingPolytope& p) {
    const MultiGraph& g = p.graph();
    std::optional<std::pair<VertexSet, std::size_t>> first;
    for (VertexSet x : p.odd_shores()) {
      if (!separating_facet(p, x)) continue;
      if (auto i = three_matching(p, x)) {
        first = {x, *i};
        break;
      }
    }
    if (!first) {
      Json cert;
      cert["graph"] = graph_json(g);
      cert["cuts"] = intersection_table(p);
      throw TheoremFalsified("non-BvN brick without a 3-intersecting separating facet-defining cut", std::move(cert));
    }
    if (petersen_free_sides(g, first->first)) return *first;

    ++trace_.adjusted_cuts;
    if (auto adjusted = adjust_petersen_cut(p, first->first)) {
      const BitSet cut = g.boundary(adjusted->cut.shore);
      for (std::size_t i = 0; i < p.matching_count(); ++i)
        if (p.matchings()[i] == adjusted->matching && p.matchings()[i].meets(cut) == 3) return {adjusted->cut.shore, i};
    }

    ++trace_.cut_fallbacks;
    for (VertexSet x : p.odd_shores()) {
      if (!separating_facet(p, x) || !petersen_free_sides(g, x)) continue;
      if (auto i = three_matching(p, x)) return {x, *i};
    }
    Json cert;
    cert["graph"] = graph_json(g);
    cert["cuts"] = intersection_table(p);
    throw TheoremFalsified("no separating facet-defining cut with Petersen-free contractions meets a matching three times",
                           std::move(cert));
  }

  ScanOptions options_;
  IntegralTrace& trace_;
};

}  // namespace

IntegralBasisResult integral_basis(const MultiGraph& g, ScanOptions options) {
  MatchingPolytope p(g, options);
  if (tight_cut_decomposition(g, {options, std::nullopt}).petersen_count() > 0) {
    throw PreconditionViolated("petersen_brick", "integral_basis: graph has a Petersen brick");
  }
  IntegralBasisResult out;
  IntegralBuilder builder(options, out.trace);
  out.basis = builder.build(g);

  IntMatrix all = matrix_of(g, p.matchings());
  const IntMatrix b = out.basis.matrix();
  if (static_cast<int>(rank(b)) != p.dim() + 1 || static_cast<int>(b.rows()) != p.dim() + 1 ||
      !lattice_equal(hnf(b), saturation(all))) {
    Json cert;
    cert["graph"] = graph_json(g);
    cert["basis"] = basis_json(out.basis.elements);
    throw TheoremFalsified("integral basis post-check failed", std::move(cert));
  }
  return out;
}

LatticeBasisResult lattice_basis(const MultiGraph& g, ScanOptions options) {
  MatchingPolytope p(g, options);
  const DecompTree tree = tight_cut_decomposition(g, {options, std::nullopt});
  IntegralTrace trace;

  std::function<Basis(const MultiGraph&)> build = [&](const MultiGraph& h) -> Basis {
    if (is_petersen_free(h, options)) {
      IntegralBuilder builder(options, trace);
      Basis out = builder.build(h);
      out.kind = BasisKind::lattice;
      return out;
    }
    MatchingPolytope ph(h, options);
    if (auto tight = find_tight_cut(ph)) {
      const VertexSet x = tight->shore;
      const int n = h.vertex_count();
      Basis out = merge_bases(h, x, build(contract_shore(h, x.complement(n)).graph), build(contract_shore(h, x).graph)).merged;
      out.kind = BasisKind::lattice;
      return out;
    }
    bool searched = false;
    auto found = basis_with_lattice(ph, hnf(matrix_of(h, ph.matchings())), searched);
    if (!found) {
      Json cert;
      cert["graph"] = graph_json(h);
      throw TheoremFalsified("Petersen brick has no lattice basis of perfect matchings", std::move(cert));
    }
    return Basis{h, std::move(*found), BasisKind::lattice};
  };

  LatticeBasisResult out;
  out.basis = build(g);
  out.basis.kind = BasisKind::lattice;
  out.parity_sets = canonical_parity_sets(tree);

  const IntMatrix b = out.basis.matrix();
  if (static_cast<int>(rank(b)) != p.dim() + 1 || static_cast<int>(b.rows()) != p.dim() + 1 ||
      !lattice_equal(hnf(b), hnf(matrix_of(g, p.matchings())))) {
    Json cert;
    cert["graph"] = graph_json(g);
    cert["basis"] = basis_json(out.basis.elements);
    throw TheoremFalsified("lattice basis post-check failed", std::move(cert));
  }
  return out;
}

Lattice parity_sublattice(const MultiGraph& g, const Lattice& saturated,
                          const std::vector<std::vector<EdgeId>>& parity_sets) {
  if (parity_sets.empty()) return saturated;
  const IntMatrix& w = saturated.basis();
  const std::size_t r = w.rows();
  const std::size_t k = parity_sets.size();
  // Coefficient vectors c with c·(W 1_A) even for every A: the projection of
  // the kernel of [Sᵀ | -2I] onto its first r coordinates.
  IntMatrix system(k, r + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (EdgeId id : parity_sets[i]) {
      const auto col = static_cast<std::size_t>(g.index_at(id));
      for (std::size_t row = 0; row < r; ++row) system(i, row) += w(row, col);
    }
    system(i, r + i) = -2;
  }
  const IntMatrix kernel = integer_kernel(system);
  IntMatrix coefficients(kernel.rows(), r);
  for (std::size_t i = 0; i < kernel.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) coefficients(i, j) = kernel(i, j);
  return hnf(multiply(coefficients, w));
}

LatticeReport characterize_lattice(const MultiGraph& g, ScanOptions options) {
  MatchingPolytope p(g, options);
  const DecompTree tree = tight_cut_decomposition(g, {options, std::nullopt});
  const IntMatrix all = matrix_of(g, p.matchings());

  LatticeReport out;
  out.lattice = hnf(all);
  out.saturated = saturation(all);
  out.parity_sets = canonical_parity_sets(tree);
  out.petersen_bricks = tree.petersen_count();
  out.parity = parity_sublattice(g, out.saturated, out.parity_sets);
  out.index = *lattice_index(out.lattice, out.saturated);
  Integer power = 1;
  for (int e = 0; power <= out.index; ++e, power *= 2) {
    if (power == out.index) out.index_log2 = e;
  }
  out.equality = lattice_equal(out.lattice, out.parity);
  out.doubling = true;
  for (std::size_t r = 0; r < out.saturated.rank(); ++r) {
    IntVector twice = out.saturated.basis().row_vector(r);
    for (auto& v : twice) v *= 2;
    if (!lattice_member(out.lattice, twice)) out.doubling = false;
  }

  if (!out.equality || (out.petersen_bricks > 0 && !out.doubling)) {
    Json cert;
    cert["graph"] = graph_json(g);
    cert["parity_sets"] = out.parity_sets;
    cert["lattice"] = matrix_json(out.lattice.basis());
    cert["parity_lattice"] = matrix_json(out.parity.basis());
    cert["doubling"] = out.doubling;
    throw TheoremFalsified("matching lattice differs from the parity-constrained saturation", std::move(cert));
  }
  return out;
}

}  // namespace matchlat
