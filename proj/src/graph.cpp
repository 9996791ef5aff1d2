#include "matchlat/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>

namespace matchlat {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  auto b = bits_;
  while (b != 0) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

bool shore_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.to_vector() < b.to_vector();
}

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0 || vertex_count > kMaxGraphVertices) {
    throw std::invalid_argument("vertex count must lie in [0, " + std::to_string(kMaxGraphVertices) + "]");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  incidence_.assign(static_cast<std::size_t>(vertex_count), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id) throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("edge " + std::to_string(e.id) + " has an endpoint outside the vertex range");
    }
    if (e.u == e.v) throw std::invalid_argument("edge " + std::to_string(e.id) + " is a self-loop");
    incidence_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
    incidence_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
  }
}

std::vector<EdgeId> MultiGraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  return ids;
}

std::optional<int> MultiGraph::index_of(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Edge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

int MultiGraph::index_at(EdgeId id) const {
  auto idx = index_of(id);
  if (!idx) throw std::out_of_range("unknown edge id " + std::to_string(id));
  return *idx;
}

BitSet MultiGraph::boundary(VertexSet x) const {
  BitSet out(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (x.contains(edges_[i].u) != x.contains(edges_[i].v)) out.set(i);
  }
  return out;
}

std::vector<EdgeId> MultiGraph::boundary_ids(VertexSet x) const { return ids_of(boundary(x)); }

BitSet MultiGraph::inside(VertexSet x) const {
  BitSet out(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (x.contains(edges_[i].u) && x.contains(edges_[i].v)) out.set(i);
  }
  return out;
}

std::vector<EdgeId> MultiGraph::ids_of(const BitSet& edges) const {
  std::vector<EdgeId> ids;
  for (auto i : edges.indices()) ids.push_back(edges_[i].id);
  return ids;
}

BitSet MultiGraph::edge_set(std::span<const EdgeId> ids) const {
  BitSet out(edges_.size());
  for (EdgeId id : ids) out.set(static_cast<std::size_t>(index_at(id)));
  return out;
}

Cut make_cut(const MultiGraph& g, VertexSet x) {
  const int n = g.vertex_count();
  if (x.empty() || x == g.vertices() || !x.is_subset_of(g.vertices())) {
    throw std::invalid_argument("cut shore must be a proper nonempty vertex subset");
  }
  VertexSet canonical = x.contains(0) ? x : x.complement(n);
  return Cut{canonical, g.boundary(canonical)};
}

Quotient quotient(const MultiGraph& g, std::span<const int> class_of, int class_count) {
  if (class_of.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("quotient: class map size differs from vertex count");
  }
  std::vector<VertexSet> origin(static_cast<std::size_t>(class_count));
  for (int v = 0; v < g.vertex_count(); ++v) {
    int c = class_of[static_cast<std::size_t>(v)];
    if (c < 0 || c >= class_count) throw std::invalid_argument("quotient: class index out of range");
    origin[static_cast<std::size_t>(c)].insert(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    int cu = class_of[static_cast<std::size_t>(e.u)];
    int cv = class_of[static_cast<std::size_t>(e.v)];
    if (cu != cv) edges.push_back(Edge{e.id, cu, cv});
  }
  return Quotient{MultiGraph(class_count, std::move(edges)), std::move(origin)};
}

Contraction contract_shore(const MultiGraph& g, VertexSet keep) {
  if (keep.empty() || keep == g.vertices() || !keep.is_subset_of(g.vertices())) {
    throw std::invalid_argument("contract_shore: shore must be a proper nonempty vertex subset");
  }
  const int kept = keep.size();
  std::vector<int> class_of(static_cast<std::size_t>(g.vertex_count()), kept);
  int next = 0;
  for (int v : keep.to_vector()) class_of[static_cast<std::size_t>(v)] = next++;
  auto q = quotient(g, class_of, kept + 1);
  return Contraction{std::move(q.graph), std::move(q.origin), kept};
}

Simplification simplify(const MultiGraph& g) {
  std::map<std::pair<int, int>, std::vector<EdgeId>> by_pair;
  for (const auto& e : g.edges()) by_pair[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.id);
  Simplification out;
  std::vector<Edge> edges;
  for (auto& [pair, ids] : by_pair) {
    std::sort(ids.begin(), ids.end());
    const auto& rep = g.edge(g.index_at(ids.front()));
    edges.push_back(rep);
    out.classes[ids.front()] = ids;
  }
  out.graph = MultiGraph(g.vertex_count(), std::move(edges));
  return out;
}

MultiGraph restrict_edges(const MultiGraph& g, const BitSet& keep) {
  std::vector<Edge> edges;
  for (auto i : keep.indices()) edges.push_back(g.edge(static_cast<int>(i)));
  return MultiGraph(g.vertex_count(), std::move(edges));
}

namespace {

int other_end(const Edge& e, int v) { return e.u == v ? e.v : e.u; }

std::vector<std::vector<char>> adjacency_matrix(const MultiGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  return adj;
}

}  // namespace

std::vector<VertexSet> components_minus(const MultiGraph& g, VertexSet s) {
  std::vector<VertexSet> comps;
  VertexSet seen = s;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp;
    std::deque<int> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.insert(v);
      for (int ei : g.incident(v)) {
        int w = other_end(g.edge(ei), v);
        if (!seen.contains(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const MultiGraph& g) { return components_minus(g, VertexSet{}).size() <= 1; }

std::optional<VertexSet> bipartition(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (colour[static_cast<std::size_t>(start)] != -1) continue;
    colour[static_cast<std::size_t>(start)] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int ei : g.incident(v)) {
        int w = other_end(g.edge(ei), v);
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet side;
  for (int v = 0; v < n; ++v)
    if (colour[static_cast<std::size_t>(v)] == 0) side.insert(v);
  return side;
}

std::optional<int> girth(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::optional<int> best;
  if (simplify(g).graph.edge_count() < g.edge_count()) return 2;
  // BFS from every vertex; a non-tree edge closes a cycle of length <= d(u)+d(v)+1,
  // and the minimum over all roots is exact.
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int ei : g.incident(v)) {
        int w = other_end(g.edge(ei), v);
        if (dist[static_cast<std::size_t>(w)] == -1) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent_edge[static_cast<std::size_t>(w)] = ei;
          queue.push_back(w);
        } else if (parent_edge[static_cast<std::size_t>(v)] != ei) {
          int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<std::vector<int>> find_isomorphism(const MultiGraph& a, const MultiGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count()) return std::nullopt;
  auto adj_a = adjacency_matrix(a);
  auto adj_b = adjacency_matrix(b);
  auto degrees = [n](const std::vector<std::vector<char>>& adj) {
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(i)] += adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return d;
  };
  auto deg_a = degrees(adj_a);
  auto deg_b = degrees(adj_b);
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Map a's vertices in BFS order so every new vertex has mapped neighbours.
  std::vector<int> order;
  {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      std::deque<int> queue{s};
      seen[static_cast<std::size_t>(s)] = 1;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w = 0; w < n; ++w) {
          if (adj_a[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
          }
        }
      }
    }
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || deg_a[static_cast<std::size_t>(v)] != deg_b[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const int u = order[j];
        ok = adj_a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] ==
             adj_b[static_cast<std::size_t>(w)][static_cast<std::size_t>(map[static_cast<std::size_t>(u)])];
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (extend(k + 1)) return true;
      used[static_cast<std::size_t>(w)] = 0;
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

MultiGraph petersen_graph() {
  std::vector<Edge> edges;
  int id = 0;
  for (int i = 0; i < 5; ++i) edges.push_back({id++, i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({id++, i, i + 5});
  for (int i = 0; i < 5; ++i) edges.push_back({id++, 5 + i, 5 + (i + 2) % 5});
  return MultiGraph(10, std::move(edges));
}

bool is_petersen(const MultiGraph& g) {
  if (g.vertex_count() != 10) return false;
  const auto simple = simplify(g).graph;
  if (simple.edge_count() != 15) return false;
  for (int v = 0; v < 10; ++v)
    if (simple.degree(v) != 3) return false;
  if (girth(simple) != 5) return false;
  return find_isomorphism(simple, petersen_graph()).has_value();
}

std::vector<FiveCycle> five_cycles(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::map<std::pair<int, int>, EdgeId> lowest;
  for (const auto& e : g.edges()) {
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    auto it = lowest.find(key);
    if (it == lowest.end() || e.id < it->second) lowest[key] = e.id;
  }
  auto edge_between = [&](int a, int b) -> std::optional<EdgeId> {
    auto it = lowest.find({std::min(a, b), std::max(a, b)});
    if (it == lowest.end()) return std::nullopt;
    return it->second;
  };
  std::vector<FiveCycle> out;
  std::vector<int> path;
  std::function<void(int)> grow = [&](int depth) {
    const int last = path.back();
    if (depth == 5) {
      if (path[1] < path[4] && edge_between(last, path[0])) {
        FiveCycle c;
        c.vertices = path;
        for (int i = 0; i < 5; ++i) c.edges.push_back(*edge_between(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>((i + 1) % 5)]));
        out.push_back(std::move(c));
      }
      return;
    }
    for (int w = path[0] + 1; w < n; ++w) {
      if (std::find(path.begin(), path.end(), w) != path.end() || !edge_between(last, w)) continue;
      path.push_back(w);
      grow(depth + 1);
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    grow(1);
  }
  return out;
}

}  // namespace matchlat
