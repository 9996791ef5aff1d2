#include "matchlat/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "matchlat/errors.hpp"

namespace matchlat {

namespace {

MultiGraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back(Edge{static_cast<EdgeId>(i), pairs[i].first, pairs[i].second});
  }
  return MultiGraph(n, std::move(edges));
}

// C4 a-b-c-d with a-b doubled: bipartite, degree 3 at a and b.
MultiGraph square_one_double() { return from_pairs(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// C4 a-b-c-d with a-b and c-d doubled: bipartite and cubic.
MultiGraph square_two_doubles() { return from_pairs(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}}); }

}  // namespace

MultiGraph splice(const MultiGraph& g, int u, const MultiGraph& h, int w) {
  if (g.degree(u) != h.degree(w)) throw std::invalid_argument("splice: degrees differ");
  std::vector<int> g_map(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> h_map(static_cast<std::size_t>(h.vertex_count()), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != u) g_map[static_cast<std::size_t>(v)] = next++;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (v != w) h_map[static_cast<std::size_t>(v)] = next++;

  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges())
    if (e.u != u && e.v != u) pairs.emplace_back(g_map[static_cast<std::size_t>(e.u)], g_map[static_cast<std::size_t>(e.v)]);
  for (const auto& e : h.edges())
    if (e.u != w && e.v != w) pairs.emplace_back(h_map[static_cast<std::size_t>(e.u)], h_map[static_cast<std::size_t>(e.v)]);
  auto far = [](const Edge& e, int v) { return e.u == v ? e.v : e.u; };
  const auto at_u = g.incident(u);
  const auto at_w = h.incident(w);
  for (std::size_t i = 0; i < at_u.size(); ++i) {
    pairs.emplace_back(g_map[static_cast<std::size_t>(far(g.edge(at_u[i]), u))],
                       h_map[static_cast<std::size_t>(far(h.edge(at_w[i]), w))]);
  }
  return from_pairs(next, pairs);
}

MultiGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return from_pairs(n, pairs);
}

MultiGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return from_pairs(n, pairs);
}

MultiGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
  return from_pairs(a + b, pairs);
}

MultiGraph cube_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (int w = v ^ (1 << bit); v < w) pairs.emplace_back(v, w);
  return from_pairs(8, pairs);
}

MultiGraph prism_graph() {
  return from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

namespace {

struct Item {
  const char* name;
  std::function<MultiGraph()> build;
};

const std::vector<Item>& items() {
  static const std::vector<Item> list = {
      {"k4", [] { return complete_graph(4); }},
      {"c6", [] { return cycle_graph(6); }},
      {"k33", [] { return complete_bipartite(3, 3); }},
      {"cube", cube_graph},
      {"prism", prism_graph},
      {"double-prism",
       [] {
         auto g = prism_graph();
         auto edges = g.edges();
         edges.push_back(Edge{9, 0, 3});
         edges.push_back(Edge{10, 1, 4});
         edges.push_back(Edge{11, 2, 5});
         return MultiGraph(6, edges);
       }},
      {"petersen", petersen_graph},
      {"petersen-parallel",
       [] {
         auto edges = petersen_graph().edges();
         edges.push_back(Edge{15, 0, 1});
         return MultiGraph(10, edges);
       }},
      {"brick-plus-pendant-square", [] { return splice(complete_graph(4), 0, square_one_double(), 0); }},
      {"prism-c4-splice", [] { return splice(prism_graph(), 0, square_one_double(), 0); }},
      {"pete-c4-splice", [] { return splice(petersen_graph(), 0, square_one_double(), 0); }},
      {"pete-k4-splice",
       [] {
         // Petersen at a and K4 at c of the doubled square; the two squares'
         // leftover vertices b, d form the bipartite middle.
         auto half = splice(petersen_graph(), 0, square_two_doubles(), 0);
         const int c = 9 + 1;  // square vertex 2 after the nine Petersen survivors
         return splice(half, c, complete_graph(4), 0);
       }},
      {"pete-k4-bricksplice", [] { return splice(petersen_graph(), 0, complete_graph(4), 0); }},
  };
  return list;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& item : items()) out.emplace_back(item.name);
  return out;
}

GraphFile corpus_graph(const std::string& name) {
  for (const auto& item : items())
    if (name == item.name) return GraphFile{name, item.build()};
  throw PreconditionViolated("unknown_corpus_item", "no corpus graph named '" + name + "'");
}

std::vector<GraphFile> corpus() {
  std::vector<GraphFile> out;
  for (const auto& name : corpus_names()) out.push_back(corpus_graph(name));
  return out;
}

GraphFile random_graph(std::uint64_t seed, int vertices, int extra) {
  if (vertices <= 0 || vertices % 2 != 0) {
    throw PreconditionViolated("odd_vertices", "random graph needs a positive even vertex count");
  }
  if (vertices > kMaxGraphVertices) throw PreconditionViolated("too_many_vertices", "random graph too large");
  if (extra < 0 || (extra == 0 && vertices > 2)) {
    throw PreconditionViolated("bad_matchings", "need at least two matchings to connect more than two vertices");
  }
  std::mt19937_64 rng(seed);
  // Fisher-Yates with a plain modulus keeps the stream identical across
  // standard libraries, unlike std::shuffle.
  auto draw = [&](std::set<std::pair<int, int>>& pairs) {
    std::vector<int> order(static_cast<std::size_t>(vertices));
    for (int i = 0; i < vertices; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = vertices - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < vertices; i += 2) {
      const int a = order[static_cast<std::size_t>(i)];
      const int b = order[static_cast<std::size_t>(i + 1)];
      pairs.emplace(std::min(a, b), std::max(a, b));
    }
  };
  while (true) {
    std::set<std::pair<int, int>> pairs;
    for (int r = 0; r <= extra; ++r) draw(pairs);
    MultiGraph g = from_pairs(vertices, {pairs.begin(), pairs.end()});
    // A union of perfect matchings is covered by them; only connectivity can fail.
    if (is_connected(g)) {
      return GraphFile{"random-s" + std::to_string(seed) + "-v" + std::to_string(vertices), std::move(g)};
    }
  }
}

}  // namespace matchlat
