#include "cheeger/graph_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cheeger {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw InputError("schema error at " + where + ": " + what);
}

std::string edge_where(std::size_t i) { return "edges[" + std::to_string(i) + "]"; }

std::string read_string(const json& node, const std::string& where) {
  if (!node.is_string()) schema_error(where, "expected a string");
  return node.get<std::string>();
}

template <typename Graph, typename MakeEdge>
Graph build(const GraphFile& file, MakeEdge make_edge) {
  Graph g;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < file.vertices.size(); ++i) {
    const auto& name = file.vertices[i];
    if (!index.emplace(name, i).second) {
      schema_error("vertices[" + std::to_string(i) + "]", "duplicate vertex id '" + name + "'");
    }
    g.vertices.push_back(name);
  }
  std::set<std::string> ids;
  for (std::size_t i = 0; i < file.edges.size(); ++i) {
    const auto& rec = file.edges[i];
    const auto where = edge_where(i);
    const auto u = index.find(rec.u);
    const auto v = index.find(rec.v);
    if (u == index.end()) schema_error(where, "unknown vertex '" + rec.u + "'");
    if (v == index.end()) schema_error(where, "unknown vertex '" + rec.v + "'");
    if (!ids.insert(rec.id).second) schema_error(where, "duplicate edge id '" + rec.id + "'");
    g.edges.push_back(make_edge(rec, u->second, v->second, where));
  }
  if (g.vertices.empty()) schema_error("vertices", "graph has no vertices");
  return g;
}

}  // namespace

GraphFile parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("$", "expected an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "vertices" && key != "edges") schema_error("$", "unknown field '" + key + "'");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    schema_error("vertices", "expected an array of vertex ids");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    schema_error("edges", "expected an array of edges");
  }

  GraphFile file;
  const auto& vertices = doc["vertices"];
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    file.vertices.push_back(read_string(vertices[i], "vertices[" + std::to_string(i) + "]"));
  }
  const auto& edges = doc["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto where = edge_where(i);
    const auto& node = edges[i];
    if (!node.is_object()) schema_error(where, "expected an object");
    for (const auto& [key, _] : node.items()) {
      if (key != "id" && key != "u" && key != "v" && key != "length") {
        schema_error(where, "unknown field '" + key + "'");
      }
    }
    GraphFile::EdgeRecord rec;
    rec.id = node.contains("id") ? read_string(node["id"], where + ".id")
                                 : "e" + std::to_string(i + 1);
    if (!node.contains("u") || !node.contains("v")) schema_error(where, "missing endpoint");
    rec.u = read_string(node["u"], where + ".u");
    rec.v = read_string(node["v"], where + ".v");
    if (node.contains("length")) {
      if (!node["length"].is_number()) schema_error(where + ".length", "expected a number");
      rec.length = node["length"].get<double>();
    }
    file.edges.push_back(std::move(rec));
  }
  return file;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

MetricGraph to_metric_graph(const GraphFile& file) {
  return build<MetricGraph>(file, [](const GraphFile::EdgeRecord& rec, std::size_t u, std::size_t v,
                                     const std::string& where) {
    if (!rec.length) schema_error(where, "edge '" + rec.id + "' has no length");
    if (!std::isfinite(*rec.length)) schema_error(where, "edge '" + rec.id + "' has non-finite length");
    if (!(*rec.length > 0.0)) {
      schema_error(where, "edge '" + rec.id + "' has nonpositive length");
    }
    return MetricEdge{rec.id, u, v, *rec.length};
  });
}

DiscreteGraph to_discrete_graph(const GraphFile& file) {
  return build<DiscreteGraph>(file, [](const GraphFile::EdgeRecord& rec, std::size_t u,
                                       std::size_t v, const std::string& where) {
    if (u == v) schema_error(where, "edge '" + rec.id + "' is a loop (forbidden on discrete side)");
    return Edge{rec.id, u, v};
  });
}

MetricGraph parse_metric_graph_file(const std::string& path) {
  return to_metric_graph(read_graph_file(path));
}

DiscreteGraph parse_discrete_graph_file(const std::string& path) {
  return to_discrete_graph(read_graph_file(path));
}

nlohmann::ordered_json graph_to_json(const MetricGraph& g) {
  nlohmann::ordered_json out;
  out["vertices"] = g.vertices;
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    out["edges"].push_back(
        {{"id", e.id}, {"u", g.vertices[e.u]}, {"v", g.vertices[e.v]}, {"length", e.length}});
  }
  return out;
}

nlohmann::ordered_json graph_to_json(const DiscreteGraph& g) {
  nlohmann::ordered_json out;
  out["vertices"] = g.vertices;
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    out["edges"].push_back({{"id", e.id}, {"u", g.vertices[e.u]}, {"v", g.vertices[e.v]}});
  }
  return out;
}

std::string graph_digest(const MetricGraph& g) { return graph_to_json(g).dump(); }
std::string graph_digest(const DiscreteGraph& g) { return graph_to_json(g).dump(); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path + "'");
}

}  // namespace cheeger
