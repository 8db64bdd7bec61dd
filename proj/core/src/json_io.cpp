#include "resgraph/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "resgraph/errors.hpp"

namespace resgraph {

namespace {

using json = nlohmann::ordered_json;

long get_long(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(where + ": missing or non-integer field '" + key + "'");
  }
  return j[key].get<long>();
}

std::string get_string(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ParseError(where + ": missing or non-string field '" + key + "'");
  }
  return j[key].get<std::string>();
}

std::shared_ptr<const DualGraph> parse_graph(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw ParseError("graph: missing 'vertices' array");
  }
  std::vector<VertexData> vertices;
  for (const json& v : j["vertices"]) {
    vertices.push_back({get_string(v, "id", "vertex"),
                        get_long(v, "self_intersection", "vertex"),
                        get_long(v, "genus", "vertex")});
  }
  std::vector<EdgeData> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("graph: 'edges' must be an array");
    for (const json& e : j["edges"]) {
      long multiplicity = e.contains("multiplicity") ? get_long(e, "multiplicity", "edge") : 1;
      edges.push_back({get_string(e, "a", "edge"), get_string(e, "b", "edge"), multiplicity});
    }
  }
  return std::make_shared<const DualGraph>(std::move(vertices), std::move(edges));
}

AnalyticHints parse_hints(const json& j) {
  if (!j.is_object()) throw ParseError("analytic_hints must be an object");
  AnalyticHints hints;
  if (j.contains("pg")) {
    if (!j["pg"].is_number_integer()) throw ParseError("analytic_hints: pg must be an integer");
    hints.pg = Int(j["pg"].get<long>());
    if (sign(*hints.pg) < 0) throw ParseError("analytic_hints: pg must be non-negative");
  }
  if (j.contains("gorenstein")) {
    if (!j["gorenstein"].is_boolean()) {
      throw ParseError("analytic_hints: gorenstein must be a boolean");
    }
    hints.gorenstein = j["gorenstein"].get<bool>();
  }
  return hints;
}

}  // namespace

GraphDocument parse_document_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object");

  GraphDocument doc;
  if (j.contains("graph")) {
    if (j.contains("schema_version")) {
      const std::string version = get_string(j, "schema_version", "document");
      if (version != "1") {
        throw ParseError("unsupported schema_version '" + version + "'");
      }
    }
    doc.graph = parse_graph(j["graph"]);
    if (j.contains("analytic_hints")) doc.analytic_hints = parse_hints(j["analytic_hints"]);
  } else {
    doc.graph = parse_graph(j);
  }
  return doc;
}

GraphDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document_json(buffer.str());
}

namespace {

json graph_to_json(const DualGraph& g) {
  json out;
  out["vertices"] = json::array();
  for (const VertexData& v : g.vertices()) {
    out["vertices"].push_back(
        {{"id", v.id}, {"self_intersection", v.self_intersection}, {"genus", v.genus}});
  }
  out["edges"] = json::array();
  for (const EdgeData& e : g.edges()) {
    out["edges"].push_back({{"a", e.a}, {"b", e.b}, {"multiplicity", e.multiplicity}});
  }
  return out;
}

}  // namespace

std::string graph_json(const DualGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

std::string document_json(const GraphDocument& doc) {
  json out;
  out["schema_version"] = doc.schema_version;
  out["graph"] = graph_to_json(*doc.graph);
  if (doc.analytic_hints) {
    json hints = json::object();
    if (doc.analytic_hints->pg) hints["pg"] = to_long(*doc.analytic_hints->pg);
    if (doc.analytic_hints->gorenstein) hints["gorenstein"] = *doc.analytic_hints->gorenstein;
    out["analytic_hints"] = hints;
  }
  return out.dump(2) + "\n";
}

}  // namespace resgraph
