#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cheeger/graph.hpp"

namespace cheeger {

/// Fragment `index` of edge `edge`, counted from the edge's first endpoint.
struct FragmentRef {
  std::size_t edge = 0;
  std::size_t index = 0;
};

struct CutComponent {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> whole_edges;  // uncut edges, measure fixed
  std::vector<FragmentRef> fragments;    // pieces of cut edges, measure variable
  double fixed_measure = 0.0;
};

/// Connected pieces of a metric graph once each edge carries a number of cut
/// points. Depends only on the multiplicities, never on where the cuts sit.
/// Components holding a vertex come first, ordered by their smallest vertex;
/// free interior fragments follow in edge order.
struct ComponentStructure {
  std::vector<CutComponent> components;
  std::vector<std::size_t> vertex_component;                 // per vertex
  std::vector<std::vector<std::size_t>> fragment_component;  // per edge, cuts+1 entries
  std::size_t vertex_component_count = 0;
};

ComponentStructure components_after_cuts(const MetricGraph& g,
                                         std::span<const int> cuts_per_edge);

enum class Side : std::uint8_t { in_s, in_complement };

struct CutConfiguration {
  std::vector<int> cuts_per_edge;
  std::vector<Side> coloring;  // per component of components_after_cuts
  int k = 0;
};

/// Colors every component so that each cut point separates two sides, with
/// the first component in S. Returns an empty vector when no such coloring
/// exists. On a connected graph the coloring, if any, is unique up to swapping
/// the two sides.
std::vector<Side> effective_coloring(const MetricGraph& g, const ComponentStructure& s,
                                     std::span<const int> cuts_per_edge);

enum class ConfigurationStatus { ok, ineffective, infeasible };

struct ConfigurationValue {
  ConfigurationStatus status = ConfigurationStatus::infeasible;
  double ratio = 0.0;
  double a_min = 0.0;  // attainable |S| range
  double a_max = 0.0;
  double s_star = 0.0;  // |S| closest to L/2
  double d_star = 0.0;  // min(s_star, L - s_star)
};

/// Best ratio k / min(|S|, L - |S|) over all cut positions for a fixed pattern
/// and coloring. Every cut edge lets |S| slide across its full length, so the
/// attainable |S| is an interval and the optimum clamps L/2 into it.
ConfigurationValue evaluate_configuration(const MetricGraph& g, const CutConfiguration& config);

struct CutPoint {
  std::string edge;
  std::size_t edge_index = 0;
  double t = 0.0;  // distance from the edge's first endpoint
};

struct MetricCheegerResult {
  double value = 0.0;
  int k = 0;
  std::vector<CutPoint> cuts;
  CutConfiguration configuration;
  ComponentStructure structure;
  double attained_measure = 0.0;
  double total_length = 0.0;
};

struct MetricCheegerOptions {
  int max_cuts_per_edge = 2;
  std::size_t max_edges = 10;
};

/// Exact Cheeger constant of a metric graph: minimum over cut multiplicity
/// patterns, ordered by (k, pattern), of the optimally balanced ratio.
MetricCheegerResult metric_cheeger(const MetricGraph& g, const MetricCheegerOptions& options = {});

/// Independent brute force over cut positions on a uniform grid of grid_n + 1
/// points per edge (at most two cuts per edge). Upper bound for the constant.
double metric_cheeger_grid_oracle(const MetricGraph& g, int grid_n);

inline constexpr std::size_t kGridOracleMaxEdges = 6;
inline constexpr int kGridOracleMaxResolution = 20;

}  // namespace cheeger
