#include "matchlat/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>

#include "matchlat/decomposition.hpp"
#include "matchlat/errors.hpp"
#include "matchlat/linalg.hpp"

namespace matchlat {

std::string to_string(PropertyStatus status) {
  switch (status) {
    case PropertyStatus::pass: return "pass";
    case PropertyStatus::fail: return "fail";
    case PropertyStatus::skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = {
      "P-DIM",   "P-UNCROSS", "P-BVNCONTRACT", "P-BRICKCOUNT", "P-NEARBRICK",   "P-BARRIER",
      "P-FDILIFT", "P-EQUIV", "P-TRIPLE",      "P-LEMMA",      "P-LEMMA-COUNT", "P-2X",
  };
  return ids;
}

Json report_json(const PropertyReport& report) {
  Json j;
  j["property"] = report.property;
  j["graph"] = report.graph;
  j["status"] = to_string(report.status);
  j["applicable"] = report.applicable;
  j["certificate"] = report.certificate;
  return j;
}

namespace {

Json members_json(const BitSet& members) {
  Json out = Json::array();
  for (auto i : members.indices()) out.push_back(i);
  return out;
}

// Shared, lazily computed facts about one graph.
class Context {
 public:
  Context(const MultiGraph& g, ScanOptions options) : g_(g), options_(options), p_(g, options) {}

  const MultiGraph& graph() const { return g_; }
  const MatchingPolytope& polytope() const { return p_; }
  ScanOptions options() const { return options_; }
  int n() const { return g_.vertex_count(); }
  int d() const { return p_.dim(); }

  const std::vector<VertexSet>& shores() const { return p_.odd_shores(); }

  const BitSet& members(VertexSet x) {
    auto it = members_.find(x.bits());
    if (it == members_.end()) it = members_.emplace(x.bits(), p_.cut_members(x)).first;
    return it->second;
  }

  bool separating(VertexSet x) {
    const BitSet& m = members(x);
    return m.any() && p_.covers_all_edges(m);
  }
  bool tight(VertexSet x) { return members(x).count() == p_.matching_count(); }
  int face_dim(VertexSet x) { return p_.face_dim(members(x)); }
  bool facet_defining(VertexSet x) { return face_dim(x) == d() - 1; }

  std::vector<VertexSet> separating_shores() {
    std::vector<VertexSet> out;
    for (VertexSet x : shores())
      if (separating(x)) out.push_back(x);
    return out;
  }

  const DecompTree& tree() {
    if (!tree_) {
      DecompositionOptions o{options_, std::nullopt};
      o.check_dimension = false;
      tree_ = tight_cut_decomposition(g_, o);
    }
    return *tree_;
  }
  int bricks() { return tree().brick_count(); }
  bool near_brick() { return bricks() == 1; }
  bool brick() { return tree().nodes.size() == 1 && tree().nodes[0].label != LeafLabel::brace; }

  // b(G/X) and b(G/X̄).
  std::pair<int, int> contraction_bricks(VertexSet x) {
    auto it = contraction_bricks_.find(x.bits());
    if (it != contraction_bricks_.end()) return it->second;
    const std::pair<int, int> value{brick_count(contract_shore(g_, x.complement(n())).graph, options_),
                                    brick_count(contract_shore(g_, x).graph, options_)};
    contraction_bricks_.emplace(x.bits(), value);
    return value;
  }

  const std::vector<Face>& facets() {
    if (!facets_) facets_ = p_.facets();
    return *facets_;
  }
  const std::vector<Face>& codim2() {
    if (!codim2_) codim2_ = p_.codim2_faces(facets());
    return *codim2_;
  }

 private:
  const MultiGraph& g_;
  ScanOptions options_;
  MatchingPolytope p_;
  std::unordered_map<std::uint64_t, BitSet> members_;
  std::unordered_map<std::uint64_t, std::pair<int, int>> contraction_bricks_;
  std::optional<DecompTree> tree_;
  std::optional<std::vector<Face>> facets_;
  std::optional<std::vector<Face>> codim2_;
};

struct Outcome {
  bool applicable = true;
  bool pass = true;
  Json certificate = Json::object();

  // Records a violation; only the first few witnesses are kept.
  void fail(Json witness) {
    pass = false;
    auto& list = certificate["violations"];
    if (list.is_null()) list = Json::array();
    if (list.size() < 8) list.push_back(std::move(witness));
  }
};

Outcome check_dim(Context& c) {
  Outcome out;
  const auto& tree = c.tree();
  // Bricks below each node, children first.
  std::vector<int> below(tree.nodes.size(), 0);
  for (std::size_t i = tree.nodes.size(); i-- > 0;) {
    const auto& node = tree.nodes[i];
    if (node.is_leaf()) below[i] = node.label == LeafLabel::brace ? 0 : 1;
    else below[i] = below[static_cast<std::size_t>(node.shore_child)] + below[static_cast<std::size_t>(node.other_child)];
  }
  const MultiGraph& g = c.graph();
  out.certificate["edges"] = g.edge_count();
  out.certificate["vertices"] = g.vertex_count();
  out.certificate["bricks"] = below[0];
  out.certificate["formula"] = g.edge_count() - g.vertex_count() + 1 - below[0];
  out.certificate["rank_dim"] = c.d();
  out.certificate["nodes_checked"] = tree.nodes.size();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const MultiGraph& h = i == 0 ? g : tree.nodes[i].graph;
    const int dim = i == 0 ? c.d() : MatchingPolytope(h, c.options()).dim();
    const int formula = h.edge_count() - h.vertex_count() + 1 - below[i];
    if (dim != formula) out.fail({{"node", i}, {"graph", graph_json(h)}, {"dim", dim}, {"formula", formula}});
  }
  return out;
}

Outcome check_uncross(Context& c) {
  Outcome out;
  const auto sep = c.separating_shores();
  const int n = c.n();
  int pairs = 0;
  for (std::size_t a = 0; a < sep.size(); ++a) {
    for (std::size_t b = a + 1; b < sep.size(); ++b) {
      const VertexSet x1 = sep[a];
      VertexSet x2 = sep[b];
      if ((x1 & x2).size() % 2 == 0) x2 = x2.complement(n);
      const bool crossing = !(x1 & x2).empty() && !(x1 - x2).empty() && !(x2 - x1).empty() &&
                            !(x1 | x2).complement(n).empty();
      if (!crossing) continue;
      const BitSet both = c.members(x1) & c.members(x2);
      if (!both.any() || !c.polytope().covers_all_edges(both)) continue;
      ++pairs;
      const UncrossReport r = uncross(c.graph(), x1, x2);
      const BitSet via = c.polytope().cut_members(x1 & x2) & c.polytope().cut_members(x1 | x2);
      if (!r.no_edge_condition || !r.identity_holds || via != both) {
        out.fail({{"x1", shore_json(x1)},
                  {"x2", shore_json(x2)},
                  {"no_edge_condition", r.no_edge_condition},
                  {"identity_holds", r.identity_holds},
                  {"violating_matchings", r.violating_matchings},
                  {"face_members", members_json(both)},
                  {"uncrossed_members", members_json(via)}});
      }
    }
  }
  out.certificate["separating_cuts"] = sep.size();
  out.certificate["pairs_checked"] = pairs;
  return out;
}

Outcome check_bvn_contract(Context& c) {
  Outcome out;
  const auto& p = c.polytope();
  const int n = c.n();
  int cuts = 0;
  for (VertexSet x : c.separating_shores()) {
    const bool bvn1 = is_bvn(contract_shore(c.graph(), x.complement(n)).graph, c.options()).is_bvn;
    const bool bvn2 = is_bvn(contract_shore(c.graph(), x).graph, c.options()).is_bvn;
    if (!bvn1 || !bvn2) continue;
    ++cuts;
    const BitSet& face = c.members(x);
    const int k = p.face_dim(face);
    std::vector<BitSet> by_edges;
    for (int e = 0; e < c.graph().edge_count(); ++e) by_edges.push_back(face & p.edge_members(e));
    for (VertexSet y : c.shores()) {
      const BitSet sub = face & c.members(y);
      if (sub == face || std::find(by_edges.begin(), by_edges.end(), sub) != by_edges.end()) continue;
      if (p.face_dim(sub) == k - 1) {
        out.fail({{"cut", shore_json(x)}, {"facet_cut", shore_json(y)}, {"facet_members", members_json(sub)}});
      }
    }
  }
  out.applicable = cuts > 0;
  out.certificate["cuts_checked"] = cuts;
  return out;
}

Outcome check_brick_count(Context& c) {
  Outcome out;
  const int b = c.bricks();
  int cuts = 0;
  for (VertexSet x : c.separating_shores()) {
    ++cuts;
    const int i = c.d() - c.face_dim(x);
    const auto [b1, b2] = c.contraction_bricks(x);
    if (b1 + b2 != b + i) out.fail({{"cut", shore_json(x)}, {"b1", b1}, {"b2", b2}, {"b", b}, {"i", i}});
  }
  out.certificate["bricks"] = b;
  out.certificate["cuts_checked"] = cuts;
  return out;
}

Outcome check_near_brick(Context& c) {
  Outcome out;
  const int n = c.n();
  const bool near = c.near_brick();
  int cuts = 0;
  for (VertexSet x : c.separating_shores()) {
    ++cuts;
    const bool bipartite_side = is_bipartite(contract_shore(c.graph(), x.complement(n)).graph) ||
                                is_bipartite(contract_shore(c.graph(), x).graph);
    if (bipartite_side && !c.tight(x)) out.fail({{"cut", shore_json(x)}, {"claim", "bipartite contraction but not tight"}});
    if (!near) continue;
    const auto [b1, b2] = c.contraction_bricks(x);
    const bool facet = c.facet_defining(x);
    if (facet != (b1 == 1 && b2 == 1)) {
      out.fail({{"cut", shore_json(x)}, {"facet_defining", facet}, {"b1", b1}, {"b2", b2}});
    }
  }
  out.certificate["near_brick"] = near;
  out.certificate["cuts_checked"] = cuts;
  return out;
}

Outcome check_barrier(Context& c) {
  Outcome out;
  out.certificate["near_brick"] = c.near_brick();
  if (!c.near_brick()) {
    out.applicable = false;
    return out;
  }
  Json barriers = Json::array();
  for (VertexSet x : c.shores()) {
    if (!c.tight(x)) continue;
    try {
      const Barrier b = barrier_of_tight_cut(c.graph(), x, c.options());
      barriers.push_back({{"cut", shore_json(x)}, {"barrier", shore_json(b.barrier)}, {"components", b.components.size()}});
    } catch (const TheoremFalsified& e) {
      out.fail(e.certificate());
    }
  }
  out.applicable = !barriers.empty() || !out.pass;
  out.certificate["barriers"] = std::move(barriers);
  return out;
}

Outcome check_fdi_lift(Context& c) {
  Outcome out;
  out.certificate["near_brick"] = c.near_brick();
  if (!c.near_brick()) {
    out.applicable = false;
    return out;
  }
  const int n = c.n();
  int cuts = 0;
  for (VertexSet x : c.shores()) {
    if (!c.tight(x)) continue;
    // Keep the shore whose contraction is the non-bipartite near-brick.
    VertexSet keep = x;
    if (is_bipartite(contract_shore(c.graph(), keep).graph)) keep = x.complement(n);
    const Contraction g2 = contract_shore(c.graph(), keep);
    if (is_bipartite(g2.graph)) continue;
    MatchingPolytope p2(g2.graph, c.options());
    if (is_bvn(p2).is_bvn) continue;
    const int m = g2.graph.vertex_count();
    for (VertexSet s : p2.odd_shores()) {
      const BitSet members = p2.cut_members(s);
      if (!members.any() || !p2.covers_all_edges(members) || p2.face_dim(members) != p2.dim() - 1) continue;
      const VertexSet local = s.contains(g2.contraction_vertex) ? s.complement(m) : s;
      VertexSet y;
      for (int v : local.to_vector()) y = y | g2.origin[static_cast<std::size_t>(v)];
      ++cuts;
      if (!c.separating(y) || !c.facet_defining(y)) {
        out.fail({{"tight_cut", shore_json(x)}, {"lifted", shore_json(y)}, {"separating", c.separating(y)},
                  {"facet_defining", c.facet_defining(y)}});
      }
    }
  }
  out.applicable = cuts > 0;
  out.certificate["cuts_checked"] = cuts;
  return out;
}

Outcome check_equiv(Context& c) {
  Outcome out;
  out.certificate["near_brick"] = c.near_brick();
  if (!c.near_brick()) {
    out.applicable = false;
    return out;
  }
  const int n = c.n();
  std::map<BitSet, std::vector<VertexSet>> groups;
  for (VertexSet x : c.separating_shores())
    if (c.facet_defining(x)) groups[c.members(x)].push_back(x);
  int pairs = 0;
  int nested = 0;
  for (const auto& [members, shores] : groups) {
    for (std::size_t a = 0; a < shores.size(); ++a) {
      for (std::size_t b = a + 1; b < shores.size(); ++b) {
        const VertexSet x1 = shores[a];
        VertexSet x2 = shores[b];
        if ((x1 & x2).size() % 2 == 0) x2 = x2.complement(n);
        ++pairs;
        if (c.polytope().cut_intersections(x1) != c.polytope().cut_intersections(x2)) {
          out.fail({{"x1", shore_json(x1)}, {"x2", shore_json(x2)}, {"claim", "not equivalent"}});
        }
        VertexSet inner = x1;
        VertexSet outer = x2;
        if (!inner.is_subset_of(outer)) std::swap(inner, outer);
        if (!inner.is_subset_of(outer)) continue;
        ++nested;
        // G / X1 / X̄2: class 0 is X1, class 1 is V∖X2, the rest stay.
        std::vector<int> class_of(static_cast<std::size_t>(n));
        int next = 2;
        for (int v = 0; v < n; ++v) {
          if (inner.contains(v)) class_of[static_cast<std::size_t>(v)] = 0;
          else if (!outer.contains(v)) class_of[static_cast<std::size_t>(v)] = 1;
          else class_of[static_cast<std::size_t>(v)] = next++;
        }
        const Quotient middle = quotient(c.graph(), class_of, next);
        const auto parts = bipartition(middle.graph);
        if (!parts || parts->contains(0) == parts->contains(1)) {
          out.fail({{"x1", shore_json(inner)}, {"x2", shore_json(outer)}, {"claim", "middle contraction not bipartite"}});
        }
      }
    }
  }
  out.applicable = pairs > 0;
  out.certificate["pairs_checked"] = pairs;
  out.certificate["nested_pairs"] = nested;
  return out;
}

Outcome check_triple(Context& c) {
  Outcome out;
  const MultiGraph& g = c.graph();
  const int n = c.n();
  if (n > c.options().max_vertices) throw CapExceeded(n, c.options().max_vertices);
  const auto& p = c.polytope();
  const std::uint64_t full = VertexSet::all(n).bits();
  // Member set of every odd vertex set, trivial cuts included.
  std::vector<BitSet> members(std::size_t{1} << n);
  for (std::uint64_t mask = 1; mask < full; ++mask)
    if (std::popcount(mask) % 2 == 1) members[mask] = p.cut_members(VertexSet(mask));

  std::unordered_map<BitSet, bool, BitSetHash> covers;
  auto covering = [&](const BitSet& s) {
    auto it = covers.find(s);
    if (it == covers.end()) it = covers.emplace(s, s.any() && p.covers_all_edges(s)).first;
    return it->second;
  };

  std::uint64_t triples = 0;
  std::uint64_t candidates = 0;
  for (std::uint64_t x2 = 1; x2 < full; ++x2) {
    if (std::popcount(x2) % 2 == 0) continue;
    const BitSet& m2 = members[x2];
    const int outside = n - std::popcount(x2);
    const std::uint64_t supersets = outside >= 2 ? (std::uint64_t{1} << (outside - 1)) - 1 : 0;
    for (std::uint64_t x1 = (x2 - 1) & x2; x1 != 0; x1 = (x1 - 1) & x2) {
      if (std::popcount(x1) % 2 == 0) continue;
      triples += supersets;
      const BitSet s = m2 & members[x1];
      if (s == m2 || !covering(s)) continue;
      // F2 ∩ F1 is a proper, edge-covering part of F2; look for X3 with F2 ∩ F3 equal to it.
      const std::uint64_t rest = full & ~x2;
      for (std::uint64_t t = (rest - 1) & rest; t != 0; t = (t - 1) & rest) {
        if (std::popcount(t) % 2 != 0) continue;
        ++candidates;
        if ((m2 & members[x2 | t]) == s) {
          out.fail({{"x1", shore_json(VertexSet(x1))},
                    {"x2", shore_json(VertexSet(x2))},
                    {"x3", shore_json(VertexSet(x2 | t))},
                    {"f2_members", members_json(m2)},
                    {"common_members", members_json(s)}});
        }
      }
    }
  }
  out.certificate["vertices"] = g.vertex_count();
  out.certificate["nested_triples"] = triples;
  out.certificate["triples_compared"] = candidates;
  return out;
}

// Every codim-2 face edge-exposed.
bool ridges_edge_exposed(Context& c) {
  for (const Face& f : c.codim2())
    if (!f.edge_exposed()) return false;
  return true;
}

Outcome check_lemma(Context& c) {
  Outcome out;
  if (!c.brick() || c.d() < 2 || !ridges_edge_exposed(c)) {
    out.applicable = false;
    out.certificate["brick"] = c.brick();
    return out;
  }
  const MultiGraph& g = c.graph();
  const int v = g.vertex_count();
  const int e = g.edge_count();
  out.certificate["vertices"] = v;
  out.certificate["edges"] = e;
  if (v > 10) out.fail({{"claim", "|V| <= 10"}, {"vertices", v}});
  if (v == 10 && e != 15) out.fail({{"claim", "|V| = 10 implies |E| = 15"}, {"edges", e}});

  const auto& p = c.polytope();
  std::string branch;
  if (is_petersen(g)) {
    branch = "petersen";
  } else if (is_bvn(p).is_bvn) {
    branch = "bvn";
  } else {
    for (VertexSet x : c.separating_shores()) {
      if (!c.facet_defining(x)) continue;
      const auto meets = p.cut_intersections(x);
      const auto it = std::find(meets.begin(), meets.end(), 3);
      if (it == meets.end()) continue;
      branch = "intersection_pair";
      out.certificate["cut"] = shore_json(x);
      out.certificate["matching"] = p.matchings()[static_cast<std::size_t>(it - meets.begin())].edges;
      break;
    }
  }
  if (branch.empty()) out.fail({{"claim", "trichotomy"}});
  out.certificate["branch"] = branch;
  return out;
}

Outcome check_lemma_count(Context& c) {
  Outcome out;
  const int d = c.d();
  if (d < 2) {
    out.applicable = false;
    out.certificate["d"] = d;
    return out;
  }
  const auto& facets = c.facets();
  const auto& ridges = c.codim2();
  const long long e = c.graph().edge_count();
  const long long v = c.graph().vertex_count();
  const long long f = static_cast<long long>(facets.size());
  const long long t = static_cast<long long>(ridges.size());
  const bool hypothesis = ridges_edge_exposed(c);
  out.certificate["e"] = e;
  out.certificate["v"] = v;
  out.certificate["t"] = t;
  out.certificate["f"] = f;
  out.certificate["d"] = d;
  out.certificate["ridges_edge_exposed"] = hypothesis;

  for (std::size_t r = 0; r < ridges.size(); ++r) {
    int containing = 0;
    for (const Face& facet : facets)
      if (ridges[r].members.is_subset_of(facet.members)) ++containing;
    if (containing != 2) out.fail({{"claim", "ridge in exactly two facets"}, {"ridge", r}, {"facets", containing}});
  }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    int adjacent = 0;
    for (const Face& ridge : ridges)
      if (ridge.members.is_subset_of(facets[i].members)) ++adjacent;
    if (adjacent < d) out.fail({{"claim", "facet has at least d neighbours"}, {"facet", i}, {"neighbours", adjacent}});
  }
  if (f < d + 1) out.fail({{"claim", "f >= d + 1"}});
  if (2 * t < f * d) out.fail({{"claim", "t >= fd/2"}});
  if (f * d < static_cast<long long>(d + 1) * d) out.fail({{"claim", "fd/2 >= C(d+1, 2)"}});
  if (hypothesis && e < t) out.fail({{"claim", "e >= t"}});
  if (hypothesis && c.brick()) {
    if (d != e - v) out.fail({{"claim", "d = e - v"}});
    if (e + v < (e - v) * (e - v)) out.fail({{"claim", "e + v >= (e - v)^2"}});
  }
  return out;
}

Outcome check_2x(Context& c) {
  Outcome out;
  const int petersen = c.tree().petersen_count();
  out.certificate["petersen_bricks"] = petersen;
  if (petersen == 0) {
    out.applicable = false;
    return out;
  }
  const auto& p = c.polytope();
  IntMatrix all(0, static_cast<std::size_t>(c.graph().edge_count()));
  for (const auto& m : p.matchings()) all.append_row(m.vector());
  const Lattice lattice = hnf(all);
  const Lattice saturated = saturation(all);
  const auto index = lattice_index(lattice, saturated);
  out.certificate["index"] = index ? integer_json(*index) : Json();
  const IntMatrix& basis = saturated.basis();
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    IntVector doubled(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) doubled[j] = 2 * basis(r, j);
    if (!lattice_member(lattice, doubled)) {
      Json row = Json::array();
      for (std::size_t j = 0; j < basis.cols(); ++j) row.push_back(integer_json(basis(r, j)));
      out.fail({{"x", row}});
    }
  }
  out.certificate["basis_vectors_checked"] = basis.rows();
  return out;
}

using Check = Outcome (*)(Context&);

Check check_for(const std::string& id) {
  static const std::map<std::string, Check> table = {
      {"P-DIM", check_dim},           {"P-UNCROSS", check_uncross},     {"P-BVNCONTRACT", check_bvn_contract},
      {"P-BRICKCOUNT", check_brick_count}, {"P-NEARBRICK", check_near_brick}, {"P-BARRIER", check_barrier},
      {"P-FDILIFT", check_fdi_lift},  {"P-EQUIV", check_equiv},         {"P-TRIPLE", check_triple},
      {"P-LEMMA", check_lemma},       {"P-LEMMA-COUNT", check_lemma_count}, {"P-2X", check_2x},
  };
  auto it = table.find(id);
  if (it == table.end()) throw PreconditionViolated("unknown_property", "unknown property '" + id + "'");
  return it->second;
}

PropertyReport run(Context* c, const GraphFile& g, const std::string& id, const CapExceeded* cap) {
  PropertyReport report{id, g.name, PropertyStatus::pass, true, Json::object()};
  const Check check = check_for(id);
  auto skip = [&](const CapExceeded& e) {
    report.status = PropertyStatus::skipped;
    report.certificate = {{"reason", e.reason()}, {"vertices", e.vertices()}, {"cap", e.cap()}};
  };
  if (cap) {
    skip(*cap);
    return report;
  }
  try {
    Outcome o = check(*c);
    report.applicable = o.applicable;
    report.status = o.pass ? PropertyStatus::pass : PropertyStatus::fail;
    report.certificate = std::move(o.certificate);
  } catch (const CapExceeded& e) {
    skip(e);
  } catch (const TheoremFalsified& e) {
    report.status = PropertyStatus::fail;
    report.certificate = {{"message", e.what()}, {"evidence", e.certificate()}};
  }
  return report;
}

std::vector<PropertyReport> run_all(const GraphFile& g, const std::vector<std::string>& ids, ScanOptions options) {
  for (const auto& id : ids) check_for(id);
  std::unique_ptr<Context> context;
  std::optional<CapExceeded> cap;
  try {
    context = std::make_unique<Context>(g.graph, options);
  } catch (const CapExceeded& e) {
    cap = e;
  }
  std::vector<PropertyReport> out;
  for (const auto& id : ids) out.push_back(run(context.get(), g, id, cap ? &*cap : nullptr));
  return out;
}

}  // namespace

PropertyReport verify_property(const GraphFile& g, const std::string& property, ScanOptions options) {
  return run_all(g, {property}, options).front();
}

std::vector<PropertyReport> verify_all(const GraphFile& g, ScanOptions options) {
  return run_all(g, property_ids(), options);
}

}  // namespace matchlat
