#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cheeger {

// Edges refer to vertices by position in the owning graph's vertex list.
struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
};

struct MetricEdge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
  double length = 1.0;

  bool is_loop() const { return u == v; }
};

/// Combinatorial multigraph. Parallel edges allowed, loops are not.
struct DiscreteGraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

/// Multigraph whose edges are intervals (0, length). Loops and parallel
/// edges are both allowed.
struct MetricGraph {
  std::vector<std::string> vertices;
  std::vector<MetricEdge> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const DiscreteGraph& g);
ValidationReport validate(const MetricGraph& g);

/// Throws std::invalid_argument listing the violations if `g` is not admissible.
void require_valid(const DiscreteGraph& g);
void require_valid(const MetricGraph& g);

std::size_t component_count(const DiscreteGraph& g);
std::size_t component_count(const MetricGraph& g);
bool is_connected(const DiscreteGraph& g);
bool is_connected(const MetricGraph& g);

/// Throws std::invalid_argument naming the component count when disconnected.
void require_connected(const DiscreteGraph& g);
void require_connected(const MetricGraph& g);

std::vector<std::size_t> degrees(const DiscreteGraph& g);
/// A loop contributes 2 to the degree of its vertex.
std::vector<std::size_t> degrees(const MetricGraph& g);

double total_length(const MetricGraph& g);
bool has_loop(const MetricGraph& g);
bool has_parallel_edges(const DiscreteGraph& g);

struct SmoothingResult {
  MetricGraph reduced;
  std::size_t essential_edge_count = 0;
  // removed vertex id -> id of the edge of `reduced` that now contains it
  std::map<std::string, std::string> vertex_map;
};

/// Suppresses degree-2 vertices (two distinct incident edges) until none is
/// left. The lexicographically largest suppressible identifier goes first, so
/// a cycle collapses onto a loop at its smallest vertex.
SmoothingResult smooth_degree_two(const MetricGraph& g);

/// Minimum number of edges whose removal disconnects `g`, by unit-capacity
/// max-flow from the first vertex to every other vertex.
std::size_t edge_connectivity(const DiscreteGraph& g);

/// Same quantity by searching edge subsets in order of size.
std::size_t edge_connectivity_exhaustive(const DiscreteGraph& g);

/// Drops lengths. Throws std::invalid_argument if `g` has a loop.
DiscreteGraph discrete_shadow(const MetricGraph& g);

/// Unit lengths on every edge.
MetricGraph unit_metric(const DiscreteGraph& g);

/// Splits edge `edge_index` at distance `t` from its first endpoint with a new
/// degree-2 vertex named `vertex_id`.
MetricGraph insert_vertex(const MetricGraph& g, std::size_t edge_index, double t,
                          const std::string& vertex_id);

MetricGraph scale_lengths(const MetricGraph& g, double factor);

}  // namespace cheeger
