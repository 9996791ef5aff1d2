#include "matchlat/io.hpp"

#include <fstream>
#include <sstream>

namespace matchlat {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw PreconditionViolated("invalid_graph_file", "graph file: " + message);
}

}  // namespace

Json graph_json(const MultiGraph& g) {
  Json j;
  j["vertex_count"] = g.vertex_count();
  j["edges"] = Json::array();
  for (const auto& e : g.edges()) j["edges"].push_back(Json{{"id", e.id}, {"u", e.u}, {"v", e.v}});
  return j;
}

Json shore_json(VertexSet x) { return Json(x.to_vector()); }

Json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(value.get_str());
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json graph_file_json(const GraphFile& file) {
  Json j;
  j["name"] = file.name;
  Json body = graph_json(file.graph);
  j["vertex_count"] = body["vertex_count"];
  j["edges"] = body["edges"];
  return j;
}

std::string emit_graph_file(const GraphFile& file) { return graph_file_json(file).dump(2) + "\n"; }

GraphFile graph_file_from_json(const Json& j) {
  if (!j.is_object()) invalid("top level must be an object");
  if (!j.contains("name") || !j["name"].is_string()) invalid("missing string field 'name'");
  if (!j.contains("vertex_count") || !j["vertex_count"].is_number_integer()) invalid("missing integer field 'vertex_count'");
  if (!j.contains("edges") || !j["edges"].is_array()) invalid("missing array field 'edges'");
  const auto n = j["vertex_count"].get<long long>();
  if (n < 0 || n > kMaxGraphVertices) invalid("vertex_count out of range");
  const auto& list = j["edges"];
  std::vector<Edge> edges;
  std::vector<char> seen(list.size(), 0);
  for (const auto& item : list) {
    for (const char* key : {"id", "u", "v"}) {
      if (!item.is_object() || !item.contains(key) || !item[key].is_number_integer()) {
        invalid(std::string("edge objects need integer field '") + key + "'");
      }
    }
    const auto id = item["id"].get<long long>();
    const auto u = item["u"].get<long long>();
    const auto v = item["v"].get<long long>();
    if (id < 0 || id >= static_cast<long long>(list.size())) invalid("edge ids must be 0..m-1");
    if (seen[static_cast<std::size_t>(id)]) invalid("duplicate edge id " + std::to_string(id));
    seen[static_cast<std::size_t>(id)] = 1;
    if (u < 0 || v < 0 || u >= n || v >= n) invalid("edge " + std::to_string(id) + " endpoint out of range");
    if (u == v) invalid("edge " + std::to_string(id) + " is a self-loop");
    edges.push_back(Edge{static_cast<EdgeId>(id), static_cast<int>(u), static_cast<int>(v)});
  }
  return GraphFile{j["name"].get<std::string>(), MultiGraph(static_cast<int>(n), std::move(edges))};
}

GraphFile parse_graph_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  return graph_file_from_json(j);
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionViolated("io", "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

}  // namespace matchlat
