#include "matchlat/matchings.hpp"

#include <algorithm>

#include "matchlat/errors.hpp"
#include "matchlat/io.hpp"
#include "matchlat/polytope.hpp"

namespace matchlat {

PerfectMatching PerfectMatching::from_ids(const MultiGraph& g, std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  PerfectMatching m{std::move(ids), BitSet(static_cast<std::size_t>(g.edge_count()))};
  for (EdgeId id : m.edges) m.incidence.set(static_cast<std::size_t>(g.index_at(id)));
  return m;
}

PerfectMatching PerfectMatching::from_indices(const MultiGraph& g, std::span<const int> indices) {
  PerfectMatching m{{}, BitSet(static_cast<std::size_t>(g.edge_count()))};
  for (int i : indices) {
    m.incidence.set(static_cast<std::size_t>(i));
    m.edges.push_back(g.edge(i).id);
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

IntVector PerfectMatching::vector() const {
  IntVector v(incidence.size());
  for (auto i : incidence.indices()) v[i] = 1;
  return v;
}

bool is_perfect_matching(const MultiGraph& g, std::span<const EdgeId> ids) {
  VertexSet covered;
  for (EdgeId id : ids) {
    auto idx = g.index_of(id);
    if (!idx) return false;
    const Edge& e = g.edge(*idx);
    if (covered.contains(e.u) || covered.contains(e.v)) return false;
    covered.insert(e.u);
    covered.insert(e.v);
  }
  return covered == g.vertices();
}

void visit_perfect_matchings(const MultiGraph& g, const BitSet& allowed,
                             const std::function<bool(std::span<const int>)>& visit) {
  const int n = g.vertex_count();
  if (n % 2 != 0) return;
  const VertexSet all = g.vertices();
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(n / 2));
  bool stop = false;
  std::function<void(VertexSet)> recurse = [&](VertexSet covered) {
    if (stop) return;
    if (covered == all) {
      if (!visit(chosen)) stop = true;
      return;
    }
    const int v = covered.complement(n).min();
    for (int ei : g.incident(v)) {
      if (!allowed.test(static_cast<std::size_t>(ei))) continue;
      const Edge& e = g.edge(ei);
      const int w = e.u == v ? e.v : e.u;
      if (covered.contains(w)) continue;
      chosen.push_back(ei);
      VertexSet next = covered;
      next.insert(v);
      next.insert(w);
      recurse(next);
      chosen.pop_back();
      if (stop) return;
    }
  };
  recurse(VertexSet{});
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g, const BitSet& allowed) {
  std::vector<PerfectMatching> out;
  visit_perfect_matchings(g, allowed, [&](std::span<const int> indices) {
    out.push_back(PerfectMatching::from_indices(g, indices));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g) {
  return enumerate_perfect_matchings(g, BitSet::full(static_cast<std::size_t>(g.edge_count())));
}

std::size_t count_perfect_matchings(const MultiGraph& g) {
  std::size_t count = 0;
  visit_perfect_matchings(g, BitSet::full(static_cast<std::size_t>(g.edge_count())), [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

std::optional<PerfectMatching> first_perfect_matching(const MultiGraph& g, const BitSet& allowed) {
  std::optional<PerfectMatching> best;
  visit_perfect_matchings(g, allowed, [&](std::span<const int> indices) {
    auto m = PerfectMatching::from_indices(g, indices);
    if (!best || m < *best) best = std::move(m);
    return true;
  });
  return best;
}

MatchingCoverage matching_coverage(const MultiGraph& g) {
  MatchingCoverage out;
  out.connected = is_connected(g);
  BitSet used(static_cast<std::size_t>(g.edge_count()));
  visit_perfect_matchings(g, BitSet::full(static_cast<std::size_t>(g.edge_count())), [&](std::span<const int> indices) {
    out.has_perfect_matching = true;
    for (int i : indices) used.set(static_cast<std::size_t>(i));
    return true;
  });
  out.uncovered = g.ids_of(used.complement());
  out.matching_covered = out.connected && out.has_perfect_matching && out.uncovered.empty();
  return out;
}

PerfectMatching extend_across_cut(const MultiGraph& g, VertexSet kept, std::span<const EdgeId> inner) {
  const Contraction side = contract_shore(g, kept);
  if (!is_perfect_matching(side.graph, inner)) {
    throw PreconditionViolated("not_a_matching", "extend_across_cut: inner is not a perfect matching of the contraction");
  }
  const BitSet cut = g.boundary(kept);
  std::optional<EdgeId> crossing;
  for (EdgeId id : inner)
    if (cut.test(static_cast<std::size_t>(g.index_at(id)))) crossing = id;

  const Contraction other = contract_shore(g, kept.complement(g.vertex_count()));
  BitSet allowed = BitSet::full(static_cast<std::size_t>(other.graph.edge_count()));
  for (int ei : other.graph.incident(other.contraction_vertex))
    if (other.graph.edge(ei).id != *crossing) allowed.reset(static_cast<std::size_t>(ei));
  auto completion = first_perfect_matching(other.graph, allowed);
  if (!completion) {
    throw PreconditionViolated("not_separating",
                               "extend_across_cut: no completion through edge " + std::to_string(*crossing));
  }
  std::vector<EdgeId> ids(inner.begin(), inner.end());
  for (EdgeId id : completion->edges)
    if (id != *crossing) ids.push_back(id);
  return PerfectMatching::from_ids(g, std::move(ids));
}

std::vector<PerfectMatching> idp_decompose(const MultiGraph& g, const EdgeVector& x, int k) {
  if (k < 1) throw PreconditionViolated("idp_input", "idp_decompose: k must be positive");
  if (x.size() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionViolated("idp_input", "idp_decompose: vector length differs from edge count");
  }
  for (const auto& value : x)
    if (value < 0) throw PreconditionViolated("idp_input", "idp_decompose: negative entry");
  for (int v = 0; v < g.vertex_count(); ++v) {
    Integer degree = 0;
    for (int ei : g.incident(v)) degree += x[static_cast<std::size_t>(ei)];
    if (degree != k) {
      throw PreconditionViolated("idp_input", "idp_decompose: x(δ(" + std::to_string(v) + ")) differs from k");
    }
  }
  if (!is_bvn(g).is_bvn) throw PreconditionViolated("not_bvn", "idp_decompose: graph is not BvN");

  EdgeVector remaining = x;
  std::vector<PerfectMatching> parts;
  for (int left = k; left > 0; --left) {
    BitSet support(remaining.size());
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (remaining[i] >= 1) support.set(i);
    auto m = first_perfect_matching(g, support);
    if (!m) {
      Json cert;
      cert["graph"] = graph_json(g);
      cert["remaining"] = Json::array();
      for (const auto& value : remaining) cert["remaining"].push_back(value.get_si());
      cert["k_remaining"] = left;
      throw TheoremFalsified("no perfect matching inside the support of an integral point of kP", std::move(cert));
    }
    for (auto i : m->incidence.indices()) remaining[i] -= 1;
    parts.push_back(std::move(*m));
  }
  return parts;
}

}  // namespace matchlat
