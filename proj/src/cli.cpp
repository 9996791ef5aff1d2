#include "matchlat/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "matchlat/basis.hpp"
#include "matchlat/corpus.hpp"
#include "matchlat/decomposition.hpp"
#include "matchlat/errors.hpp"
#include "matchlat/io.hpp"
#include "matchlat/polytope.hpp"
#include "matchlat/verifier.hpp"

namespace matchlat {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::vector<std::string> words;
  std::string input;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<int> vertices;
  int matchings = 2;
  int max_vertices = kDefaultVertexCap;
  std::string property;
  std::string shore;
  bool timing = false;
};

// What a command produced: the payload plus the exit status it implies.
struct Outcome {
  Json result;
  std::string status = "ok";
  int code = 0;
  bool raw = false;  // emit `result` as-is (graph files), not wrapped in a report
};

Json ids_json(const std::vector<EdgeId>& ids) { return Json(ids); }

Json matchings_json(const std::vector<PerfectMatching>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(m.edges);
  return out;
}

Json members_json(const BitSet& members) {
  Json out = Json::array();
  for (auto i : members.indices()) out.push_back(i);
  return out;
}

Json face_json(const Face& f) {
  Json j;
  j["dim"] = f.dim;
  j["members"] = members_json(f.members);
  j["edge_exposers"] = f.exposing_edges();
  Json shores = Json::array();
  for (VertexSet x : f.exposing_shores()) shores.push_back(shore_json(x));
  j["cut_exposers"] = std::move(shores);
  Json pairs = Json::array();
  for (const auto& e : f.exposers)
    if (e.kind == FaceExposer::Kind::intersection) pairs.push_back({e.facets.first, e.facets.second});
  if (!pairs.empty()) j["facet_pairs"] = std::move(pairs);
  return j;
}

Json cut_class_json(const MultiGraph& g, const CutClass& c) {
  Json j;
  j["shore"] = shore_json(c.cut.shore);
  j["cut"] = g.ids_of(c.cut.boundary);
  j["tight"] = c.is_tight;
  j["separating"] = c.is_separating;
  j["facet_defining"] = c.is_facet_defining;
  j["face_dim"] = c.face.dim;
  j["members"] = members_json(c.face.members);
  return j;
}

VertexSet parse_shore(const std::string& text, const MultiGraph& g) {
  if (text.empty()) throw UsageError("--shore is required, e.g. --shore 0,1,2");
  VertexSet x;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= g.vertex_count()) throw PreconditionViolated("bad_shore", "shore vertex '" + item + "' is not a vertex");
    x.insert(v);
  }
  return x;
}

Json decomposition_json(const DecompTree& tree) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    Json j;
    j["index"] = i;
    j["vertex_count"] = node.graph.vertex_count();
    j["edges"] = node.graph.edge_ids();
    Json origin = Json::array();
    for (VertexSet o : node.origin) origin.push_back(shore_json(o));
    j["origin"] = std::move(origin);
    if (node.cut) {
      j["cut"] = shore_json(node.cut->shore);
      j["shore_child"] = node.shore_child;
      j["other_child"] = node.other_child;
    } else {
      j["label"] = to_string(*node.label);
    }
    nodes.push_back(std::move(j));
  }
  Json out;
  out["bricks"] = tree.brick_count();
  out["braces"] = tree.brace_count();
  out["petersen_bricks"] = tree.petersen_count();
  out["nodes"] = std::move(nodes);
  return out;
}

Json verify_graph(const GraphFile& g, const std::vector<std::string>& ids, ScanOptions scan, bool& failed) {
  std::vector<PropertyReport> reports;
  if (ids.size() == 1) reports.push_back(verify_property(g, ids.front(), scan));
  else reports = verify_all(g, scan);
  Json list = Json::array();
  for (const auto& r : reports) {
    if (r.status == PropertyStatus::fail) failed = true;
    list.push_back(report_json(r));
  }
  return list;
}

class Runner {
 public:
  explicit Runner(Args args) : a_(std::move(args)) { scan_.max_vertices = a_.max_vertices; }

  std::string command() const {
    std::string out;
    for (std::size_t i = 0; i < a_.words.size() && i < 2; ++i) out += (i ? " " : "") + a_.words[i];
    return out;
  }
  const std::optional<std::string>& graph_name() const { return graph_name_; }

  Outcome run() {
    if (a_.words.empty()) throw UsageError("missing command");
    const std::string& cmd = a_.words[0];
    if (cmd == "pm") return pm();
    if (cmd == "polytope") return polytope();
    if (cmd == "cuts") return cuts();
    if (cmd == "decompose") return decompose();
    if (cmd == "bvn") return bvn();
    if (cmd == "intersect") return intersect();
    if (cmd == "basis") return basis();
    if (cmd == "characterize") return characterize();
    if (cmd == "verify") return verify();
    if (cmd == "corpus") return corpus_cmd();
    throw UsageError("unknown command '" + cmd + "'");
  }

 private:
  const std::string& sub(std::initializer_list<const char*> allowed) const {
    if (a_.words.size() < 2) throw UsageError("'" + a_.words[0] + "' needs a subcommand");
    for (const char* s : allowed)
      if (a_.words[1] == s) return a_.words[1];
    throw UsageError("unknown subcommand '" + a_.words[1] + "' for '" + a_.words[0] + "'");
  }

  void expect_words(std::size_t n) const {
    if (a_.words.size() > n) throw UsageError("unexpected argument '" + a_.words[n] + "'");
  }

  const GraphFile& input() {
    if (!graph_) {
      if (a_.input.empty()) throw UsageError("--input is required");
      graph_ = read_graph_file(a_.input);
      graph_name_ = graph_->name;
    }
    return *graph_;
  }

  Outcome pm() {
    const std::string& s = sub({"list", "count"});
    expect_words(2);
    const auto ms = enumerate_perfect_matchings(input().graph);
    Outcome o;
    o.result["count"] = ms.size();
    if (s == "list") o.result["matchings"] = matchings_json(ms);
    return o;
  }

  Outcome polytope() {
    const std::string& s = sub({"dim", "facets", "codim2"});
    expect_words(2);
    MatchingPolytope p(input().graph, scan_);
    Outcome o;
    o.result["dim"] = p.dim();
    if (s == "dim") {
      o.result["matchings"] = p.matching_count();
      return o;
    }
    o.result["matchings"] = matchings_json(p.matchings());
    const auto facets = p.facets();
    Json fs = Json::array();
    for (const auto& f : facets) fs.push_back(face_json(f));
    if (s == "facets") {
      o.result["count"] = facets.size();
      o.result["facets"] = std::move(fs);
      return o;
    }
    const auto ridges = p.codim2_faces(facets);
    Json rs = Json::array();
    for (const auto& f : ridges) rs.push_back(face_json(f));
    o.result["facet_count"] = facets.size();
    o.result["count"] = ridges.size();
    o.result["faces"] = std::move(rs);
    return o;
  }

  Outcome cuts() {
    const std::string& s = sub({"classify", "tight", "separating", "facet"});
    expect_words(2);
    const MultiGraph& g = input().graph;
    MatchingPolytope p(g, scan_);
    Outcome o;
    if (s == "classify") {
      o.result = cut_class_json(g, p.classify_cut(parse_shore(a_.shore, g)));
      return o;
    }
    Json list = Json::array();
    for (VertexSet x : p.odd_shores()) {
      const CutClass c = p.classify_cut(x);
      const bool keep = s == "tight" ? c.is_tight : s == "separating" ? c.is_separating
                                                                     : c.is_separating && c.is_facet_defining;
      if (keep) list.push_back(cut_class_json(g, c));
    }
    o.result["count"] = list.size();
    o.result["cuts"] = std::move(list);
    return o;
  }

  Outcome decompose() {
    expect_words(1);
    DecompositionOptions options{scan_, a_.seed};
    Outcome o;
    o.result = decomposition_json(tight_cut_decomposition(input().graph, options));
    return o;
  }

  Outcome bvn() {
    expect_words(1);
    const BvnResult r = is_bvn(input().graph, scan_);
    Outcome o;
    o.result["bvn"] = r.is_bvn;
    o.result["witness"] = r.witness ? shore_json(r.witness->shore) : Json();
    return o;
  }

  Outcome intersect() {
    expect_words(1);
    const MultiGraph& g = input().graph;
    const IntersectionPair pair = find_intersection_pair(g, scan_);
    Outcome o;
    o.result["shore"] = shore_json(pair.cut.shore);
    o.result["cut"] = g.ids_of(pair.cut.boundary);
    o.result["matching"] = pair.matching.edges;
    o.result["intersection"] = pair.matching.meets(pair.cut.boundary);
    return o;
  }

  Outcome basis() {
    const std::string& s = sub({"integral", "lattice"});
    expect_words(2);
    const MultiGraph& g = input().graph;
    Outcome o;
    if (s == "integral") {
      const IntegralBasisResult r = integral_basis(g, scan_);
      o.result["kind"] = to_string(r.basis.kind);
      o.result["size"] = r.basis.size();
      o.result["elements"] = matchings_json(r.basis.elements);
      o.result["trace"] = {{"bvn_bases", r.trace.bvn_bases},       {"subset_searches", r.trace.subset_searches},
                           {"tight_merges", r.trace.tight_merges}, {"brick_steps", r.trace.brick_steps},
                           {"adjusted_cuts", r.trace.adjusted_cuts}, {"cut_fallbacks", r.trace.cut_fallbacks}};
      return o;
    }
    const LatticeBasisResult r = lattice_basis(g, scan_);
    const auto index = lattice_index(hnf(r.basis.matrix()), saturation(r.basis.matrix()));
    o.result["kind"] = to_string(r.basis.kind);
    o.result["size"] = r.basis.size();
    o.result["elements"] = matchings_json(r.basis.elements);
    Json sets = Json::array();
    for (const auto& a : r.parity_sets) sets.push_back(ids_json(a));
    o.result["parity_sets"] = std::move(sets);
    o.result["index"] = index ? integer_json(*index) : Json();
    return o;
  }

  Outcome characterize() {
    expect_words(1);
    const LatticeReport r = characterize_lattice(input().graph, scan_);
    Outcome o;
    o.result["petersen_bricks"] = r.petersen_bricks;
    o.result["index"] = integer_json(r.index);
    o.result["index_log2"] = r.index_log2 ? Json(*r.index_log2) : Json();
    o.result["equality"] = r.equality;
    o.result["doubling"] = r.doubling;
    Json sets = Json::array();
    for (const auto& a : r.parity_sets) sets.push_back(ids_json(a));
    o.result["parity_sets"] = std::move(sets);
    o.result["lattice"] = matrix_json(r.lattice.basis());
    o.result["saturated"] = matrix_json(r.saturated.basis());
    o.result["parity_lattice"] = matrix_json(r.parity.basis());
    return o;
  }

  Outcome verify() {
    std::string which = a_.property;
    if (a_.words.size() >= 2) {
      if (!which.empty() && which != a_.words[1]) throw UsageError("property given twice");
      which = a_.words[1];
    }
    expect_words(2);
    if (which.empty()) throw UsageError("verify needs a property id or 'all'");
    std::vector<std::string> ids = which == "all" ? property_ids() : std::vector<std::string>{which};
    if (which != "all") verify_property(GraphFile{"k4", complete_graph(4)}, which, scan_);  // rejects unknown ids early

    bool failed = false;
    Outcome o;
    if (!a_.input.empty() && std::filesystem::is_directory(a_.input)) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(a_.input))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      Json graphs = Json::array();
      for (const auto& path : files) {
        const GraphFile g = read_graph_file(path.string());
        graphs.push_back({{"graph", g.name}, {"properties", verify_graph(g, ids, scan_, failed)}});
      }
      o.result["graphs"] = std::move(graphs);
    } else {
      o.result["properties"] = verify_graph(input(), ids, scan_, failed);
    }
    o.status = failed ? "fail" : "pass";
    o.code = failed ? 1 : 0;
    return o;
  }

  Outcome corpus_cmd() {
    const std::string& s = sub({"list", "emit", "random"});
    Outcome o;
    if (s == "list") {
      expect_words(2);
      Json items = Json::array();
      for (const auto& g : corpus())
        items.push_back({{"name", g.name}, {"vertex_count", g.graph.vertex_count()}, {"edge_count", g.graph.edge_count()}});
      o.result["items"] = std::move(items);
      return o;
    }
    o.raw = true;
    if (s == "emit") {
      if (a_.words.size() < 3) throw UsageError("corpus emit needs a name");
      expect_words(3);
      o.result = graph_file_json(corpus_graph(a_.words[2]));
      return o;
    }
    expect_words(2);
    if (!a_.seed || !a_.vertices) throw UsageError("corpus random needs --seed and --vertices");
    o.result = graph_file_json(random_graph(*a_.seed, *a_.vertices, a_.matchings));
    return o;
  }

  Args a_;
  ScanOptions scan_;
  std::optional<GraphFile> graph_;
  std::optional<std::string> graph_name_;
};

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw PreconditionViolated("io", "cannot write " + path);
    f << text;
    if (!f) throw PreconditionViolated("io", "cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

int cli_run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect matching polytopes and matching lattices", kToolName};
  Args a;
  app.add_option("words", a.words, "command, subcommand and argument");
  app.add_option("--input", a.input, "graph file (or a directory of them for verify)");
  app.add_option("--output", a.output, "write the report here instead of standard output");
  app.add_option("--seed", a.seed, "random seed");
  app.add_option("--vertices", a.vertices, "vertex count for corpus random");
  app.add_option("--matchings", a.matchings, "extra random matchings for corpus random");
  app.add_option("--max-vertices", a.max_vertices, "vertex cap for exhaustive scans")->check(CLI::Range(2, kMaxGraphVertices));
  app.add_option("--property", a.property, "property id for verify");
  app.add_option("--shore", a.shore, "comma-separated shore for cuts classify");
  app.add_flag("--timing", a.timing, "add wall-clock timing to the report");
  app.footer(
      "commands: pm list|count, polytope dim|facets|codim2, cuts classify|tight|separating|facet, decompose, bvn,\n"
      "          intersect, basis integral|lattice, characterize, verify <id|all>, corpus list|emit <name>|random");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Runner runner(a);
  Json report;
  report["tool"] = kToolName;
  report["version"] = kToolVersion;
  report["schema"] = kReportSchema;
  report["command"] = runner.command();
  int code = 0;
  bool raw = false;
  Json body;
  std::string status;
  Json extra;
  try {
    Outcome o = runner.run();
    status = o.status;
    code = o.code;
    raw = o.raw;
    body = std::move(o.result);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const CapExceeded& e) {
    status = "error";
    code = 2;
    extra = {{"reason", e.reason()}, {"message", std::string(e.what()) + "; raise --max-vertices to scan anyway"}};
  } catch (const PreconditionViolated& e) {
    status = "error";
    code = 2;
    extra = {{"reason", e.reason()}, {"message", e.what()}};
  } catch (const TheoremFalsified& e) {
    status = "falsified";
    code = 1;
    extra = {{"message", e.what()}, {"certificate", e.certificate()}};
  } catch (const std::invalid_argument& e) {
    status = "error";
    code = 2;
    extra = {{"reason", "invalid_argument"}, {"message", e.what()}};
  }

  std::string text;
  if (raw && code == 0) {
    text = body.dump(2) + "\n";
  } else {
    report["graph"] = runner.graph_name() ? Json(*runner.graph_name()) : Json();
    report["status"] = status;
    if (a.max_vertices > kDefaultVertexCap) {
      report["warnings"] = Json::array({"vertex cap raised to " + std::to_string(a.max_vertices) +
                                        "; exhaustive scans grow exponentially with the vertex count"});
    }
    if (code == 0 || status == "fail") report["result"] = std::move(body);
    else report["error"] = std::move(extra);
    if (a.timing) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report["timing"] = {{"wall_ms", ms}};
    }
    text = report.dump(2) + "\n";
  }

  if (a.output.empty()) {
    out << text;
  } else {
    try {
      write_atomically(a.output, text);
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return 2;
    }
  }
  return code;
}

}  // namespace matchlat
