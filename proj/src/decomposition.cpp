#include "matchlat/decomposition.hpp"

#include <algorithm>
#include <random>

#include "matchlat/errors.hpp"
#include "matchlat/io.hpp"

namespace matchlat {

std::string to_string(LeafLabel label) {
  switch (label) {
    case LeafLabel::brick: return "brick";
    case LeafLabel::brace: return "brace";
    case LeafLabel::petersen_brick: return "petersen_brick";
  }
  return "?";
}

std::vector<int> DecompTree::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].is_leaf()) out.push_back(static_cast<int>(i));
  return out;
}

int DecompTree::brick_count() const {
  int count = 0;
  for (const auto& node : nodes)
    if (node.label && *node.label != LeafLabel::brace) ++count;
  return count;
}

int DecompTree::brace_count() const {
  int count = 0;
  for (const auto& node : nodes)
    if (node.label == LeafLabel::brace) ++count;
  return count;
}

int DecompTree::petersen_count() const {
  int count = 0;
  for (const auto& node : nodes)
    if (node.label == LeafLabel::petersen_brick) ++count;
  return count;
}

std::vector<Cut> tight_cuts(const MatchingPolytope& p) {
  std::vector<Cut> out;
  for (VertexSet x : p.odd_shores()) {
    if (p.cut_members(x).count() == p.matching_count()) out.push_back(make_cut(p.graph(), x));
  }
  return out;
}

std::optional<Cut> find_tight_cut(const MatchingPolytope& p) {
  for (VertexSet x : p.odd_shores()) {
    if (p.cut_members(x).count() == p.matching_count()) return make_cut(p.graph(), x);
  }
  return std::nullopt;
}

std::optional<Cut> find_tight_cut(const MultiGraph& g, ScanOptions options) {
  return find_tight_cut(MatchingPolytope(g, options));
}

namespace {

struct Builder {
  DecompTree& tree;
  const DecompositionOptions& options;
  std::optional<std::mt19937_64> rng;

  // Returns the new node's index and its brick count.
  std::pair<int, int> build(MultiGraph graph, std::vector<VertexSet> origin, std::map<EdgeId, EdgeId> provenance) {
    const int index = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(DecompNode{});
    MatchingPolytope p(graph, options.scan);

    std::optional<Cut> cut;
    if (rng) {
      auto all = tight_cuts(p);
      if (!all.empty()) cut = all[static_cast<std::size_t>((*rng)() % all.size())];
    } else {
      cut = find_tight_cut(p);
    }

    int bricks = 0;
    if (!cut) {
      LeafLabel label = LeafLabel::brick;
      if (is_bipartite(graph)) label = LeafLabel::brace;
      else if (is_petersen(graph)) label = LeafLabel::petersen_brick;
      bricks = label == LeafLabel::brace ? 0 : 1;
      auto& node = tree.nodes[static_cast<std::size_t>(index)];
      node.label = label;
    } else {
      const VertexSet x = cut->shore;
      const VertexSet rest = x.complement(graph.vertex_count());
      auto child = [&](VertexSet keep) {
        Contraction c = contract_shore(graph, keep);
        std::vector<VertexSet> child_origin;
        for (VertexSet members : c.origin) {
          VertexSet root;
          for (int v : members.to_vector()) root = root | origin[static_cast<std::size_t>(v)];
          child_origin.push_back(root);
        }
        std::map<EdgeId, EdgeId> child_provenance;
        for (const auto& e : c.graph.edges()) child_provenance.emplace(e.id, provenance.at(e.id));
        return build(std::move(c.graph), std::move(child_origin), std::move(child_provenance));
      };
      auto [left, left_bricks] = child(x);
      auto [right, right_bricks] = child(rest);
      auto& node = tree.nodes[static_cast<std::size_t>(index)];
      node.cut = cut;
      node.shore_child = left;
      node.other_child = right;
      bricks = left_bricks + right_bricks;
    }

    const int formula = graph.edge_count() - graph.vertex_count() + 1 - p.dim();
    if (options.check_dimension && formula != bricks) {
      Json cert;
      cert["graph"] = graph_json(graph);
      cert["dimension"] = p.dim();
      cert["bricks_by_decomposition"] = bricks;
      cert["bricks_by_dimension"] = formula;
      throw TheoremFalsified("brick count disagrees with the dimension formula", std::move(cert));
    }

    auto& node = tree.nodes[static_cast<std::size_t>(index)];
    node.graph = std::move(graph);
    node.origin = std::move(origin);
    node.provenance = std::move(provenance);
    return {index, bricks};
  }
};

}  // namespace

DecompTree tight_cut_decomposition(const MultiGraph& g, DecompositionOptions options) {
  DecompTree tree;
  Builder builder{tree, options, std::nullopt};
  if (options.seed) builder.rng.emplace(*options.seed);
  std::vector<VertexSet> origin;
  for (int v = 0; v < g.vertex_count(); ++v) origin.push_back(VertexSet{v});
  std::map<EdgeId, EdgeId> provenance;
  for (const auto& e : g.edges()) provenance.emplace(e.id, e.id);
  builder.build(g, std::move(origin), std::move(provenance));
  return tree;
}

int brick_count(const MultiGraph& g, ScanOptions options) {
  return tight_cut_decomposition(g, {options, std::nullopt}).brick_count();
}

bool is_near_brick(const MultiGraph& g, ScanOptions options) { return brick_count(g, options) == 1; }

bool is_petersen_free(const MultiGraph& g, ScanOptions options) {
  return tight_cut_decomposition(g, {options, std::nullopt}).petersen_count() == 0;
}

std::vector<PetersenBrick> petersen_bricks(const DecompTree& tree) {
  std::vector<PetersenBrick> out;
  for (int leaf : tree.leaves()) {
    const auto& node = tree.nodes[static_cast<std::size_t>(leaf)];
    if (node.label != LeafLabel::petersen_brick) continue;
    PetersenBrick brick{leaf, five_cycles(node.graph)};
    for (auto& cycle : brick.cycles) {
      for (auto& id : cycle.edges) id = node.provenance.at(id);
    }
    std::sort(brick.cycles.begin(), brick.cycles.end(), [](const FiveCycle& a, const FiveCycle& b) {
      auto sa = a.edges;
      auto sb = b.edges;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      return sa < sb;
    });
    out.push_back(std::move(brick));
  }
  return out;
}

std::vector<PetersenBrick> petersen_bricks(const MultiGraph& g, ScanOptions options) {
  return petersen_bricks(tight_cut_decomposition(g, {options, std::nullopt}));
}

std::vector<EdgeId> parity_set(const DecompTree& tree, const PetersenBrick& brick, const FiveCycle& cycle) {
  const auto& node = tree.nodes[static_cast<std::size_t>(brick.node)];
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
    const int a = cycle.vertices[i];
    const int b = cycle.vertices[(i + 1) % cycle.vertices.size()];
    for (int ei : node.graph.incident(a)) {
      const Edge& e = node.graph.edge(ei);
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) out.push_back(node.provenance.at(e.id));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<EdgeId>> canonical_parity_sets(const DecompTree& tree) {
  std::vector<std::vector<EdgeId>> out;
  for (const auto& brick : petersen_bricks(tree)) out.push_back(parity_set(tree, brick, brick.cycles.front()));
  return out;
}

Barrier barrier_of_tight_cut(const MultiGraph& g, VertexSet x, ScanOptions options) {
  const int n = g.vertex_count();
  MatchingPolytope p(g, options);
  const CutClass cls = p.classify_cut(x);
  if (!cls.is_tight) throw PreconditionViolated("not_tight", "barrier_of_tight_cut: cut is not tight");
  if (!is_near_brick(g, options)) throw PreconditionViolated("not_near_brick", "barrier_of_tight_cut: graph is not a near-brick");

  // The bipartite contraction collapses `big` and keeps `small`.
  VertexSet big = x;
  VertexSet small = x.complement(n);
  Contraction side = contract_shore(g, small);
  auto parts = bipartition(side.graph);
  if (!parts) {
    std::swap(big, small);
    side = contract_shore(g, small);
    parts = bipartition(side.graph);
  }
  if (!parts) throw PreconditionViolated("no_bipartite_side", "barrier_of_tight_cut: neither contraction is bipartite");

  const VertexSet colour = parts->contains(side.contraction_vertex)
                               ? parts->complement(side.graph.vertex_count())
                               : *parts;
  Barrier out;
  for (int v : colour.to_vector()) out.barrier = out.barrier | side.origin[static_cast<std::size_t>(v)];
  out.big_component = big;
  out.components = components_minus(g, out.barrier);

  bool independent = g.inside(out.barrier).none();
  bool shape = static_cast<int>(out.components.size()) == out.barrier.size();
  int big_seen = 0;
  for (VertexSet c : out.components) {
    if (c == big) ++big_seen;
    else if (c.size() != 1) shape = false;
  }
  if (!independent || !shape || big_seen != 1) {
    Json cert;
    cert["graph"] = graph_json(g);
    cert["shore"] = shore_json(x);
    cert["barrier"] = shore_json(out.barrier);
    cert["components"] = Json::array();
    for (VertexSet c : out.components) cert["components"].push_back(shore_json(c));
    throw TheoremFalsified("tight cut in a near-brick did not yield a barrier", std::move(cert));
  }
  return out;
}

}  // namespace matchlat
