#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchlat/graph.hpp"
#include "matchlat/io.hpp"

namespace matchlat {

/// Joins g and h at vertices u and w of equal degree: both are deleted and the
/// i-th edge at u (by id) is reconnected to the far end of the i-th edge at w.
/// Vertices: g's survivors in order, then h's. Edge ids: g's surviving edges,
/// then h's, then the joining edges, each group in id order.
MultiGraph splice(const MultiGraph& g, int u, const MultiGraph& h, int w);

MultiGraph complete_graph(int n);
MultiGraph cycle_graph(int n);
MultiGraph complete_bipartite(int a, int b);
MultiGraph cube_graph();
MultiGraph prism_graph();

/// Names of the bundled graphs, in listing order.
std::vector<std::string> corpus_names();
/// Throws PreconditionViolated("unknown_corpus_item").
GraphFile corpus_graph(const std::string& name);
std::vector<GraphFile> corpus();

/// Union of 1 + `extra` uniformly random perfect matchings on `vertices`
/// vertices, redrawn until connected. Parallel draws of the same pair merge.
/// Throws PreconditionViolated("odd_vertices") for odd counts.
GraphFile random_graph(std::uint64_t seed, int vertices, int extra = 2);

}  // namespace matchlat
