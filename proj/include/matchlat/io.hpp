#pragma once

#include <string>

#include "matchlat/errors.hpp"
#include "matchlat/graph.hpp"
#include "matchlat/linalg.hpp"

namespace matchlat {

/// A named graph as stored on disk:
///   {"name": ..., "vertex_count": n, "edges": [{"id": 0, "u": 0, "v": 1}, ...]}
/// Edge ids must be exactly 0..m-1; objects are emitted in id order.
struct GraphFile {
  std::string name;
  MultiGraph graph;

  friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

/// Throws PreconditionViolated("invalid_graph_file") on schema or invariant errors.
GraphFile parse_graph_file(const std::string& text);
GraphFile graph_file_from_json(const Json& j);
Json graph_file_json(const GraphFile& file);
std::string emit_graph_file(const GraphFile& file);

GraphFile read_graph_file(const std::string& path);

/// Edge list of a graph without a name, for certificates and reports.
Json graph_json(const MultiGraph& g);
Json shore_json(VertexSet x);
/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& value);
Json matrix_json(const IntMatrix& m);

}  // namespace matchlat
