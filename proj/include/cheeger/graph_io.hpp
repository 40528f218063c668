#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cheeger/graph.hpp"

namespace cheeger {

/// Unreadable, malformed, or schema-violating input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph file as written on disk:
///   {"vertices": ["a", ...],
///    "edges": [{"id": "e1", "u": "a", "v": "b", "length": 1.0}, ...]}
/// "id" is optional (auto-assigned "e<position>", 1-based); "length" is
/// required on the metric side only.
struct GraphFile {
  struct EdgeRecord {
    std::string id;
    std::string u;
    std::string v;
    std::optional<double> length;
  };
  std::vector<std::string> vertices;
  std::vector<EdgeRecord> edges;
};

GraphFile parse_graph_json(const std::string& text);
GraphFile read_graph_file(const std::string& path);

MetricGraph to_metric_graph(const GraphFile& file);
DiscreteGraph to_discrete_graph(const GraphFile& file);

MetricGraph parse_metric_graph_file(const std::string& path);
DiscreteGraph parse_discrete_graph_file(const std::string& path);

nlohmann::ordered_json graph_to_json(const MetricGraph& g);
nlohmann::ordered_json graph_to_json(const DiscreteGraph& g);

/// Compact canonical serialization; parsing it back reproduces the graph.
std::string graph_digest(const MetricGraph& g);
std::string graph_digest(const DiscreteGraph& g);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace cheeger
