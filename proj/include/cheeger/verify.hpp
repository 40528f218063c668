#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cheeger/bound_report.hpp"
#include "cheeger/discrete_spectral.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/metric_spectral.hpp"

namespace cheeger {

struct GraphVerification {
  std::size_t index = 0;
  std::string ensemble;  // "discrete", "metric", or "input"
  std::string kind;
  std::string digest;
  std::map<std::string, double> quantities;
  std::vector<BoundReport> reports;
};

/// Edge-connectivity and Cheeger sandwiches for a discrete graph.
GraphVerification verify_discrete(const DiscreteGraph& g);

/// Metric sandwiches and the conjecture; when the graph is loop-free its
/// discrete shadow is checked as well, so both Cheeger constants sit side by side.
GraphVerification verify_metric(const MetricGraph& g, const SpectralOptions& spectral = {},
                                const MetricCheegerOptions& cheeger = {});

enum class Ensemble { discrete, metric, both };

Ensemble parse_ensemble(const std::string& name);

struct CampaignOptions {
  Ensemble ensemble = Ensemble::both;
  std::size_t discrete_count = 100;
  std::size_t metric_count = 50;
  std::uint64_t seed = 42;
  int min_vertices = 3;
  int max_vertices = 8;
  int metric_max_edges = 6;
  SpectralOptions spectral;
};

struct CampaignSummary {
  std::size_t graphs = 0;
  std::size_t reports = 0;
  std::size_t assertable_violations = 0;
  std::size_t logged_violations = 0;  // conjecture and alternative conventions
  std::size_t not_applicable = 0;
};

struct CampaignResult {
  std::vector<GraphVerification> graphs;
  CampaignSummary summary;
};

/// Graph i of each ensemble is drawn from stream i of `seed`, so any member
/// can be regenerated on its own.
DiscreteGraph campaign_discrete_graph(const CampaignOptions& options, std::size_t index);
MetricGraph campaign_metric_graph(const CampaignOptions& options, std::size_t index);

CampaignResult run_campaign(const CampaignOptions& options);

CampaignSummary summarize(const std::vector<GraphVerification>& graphs);

/// 0 when no assertable inequality is violated, 1 otherwise.
int exit_code(const CampaignSummary& summary);

/// Rounds to 12 significant digits for reproducible report text.
double round_significant(double x, int digits = 12);
std::string format_number(double x);

nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const GraphVerification& v);
nlohmann::ordered_json to_json(const CampaignResult& result);

/// {"h", "k", "cuts": [{"edge", "t"}], "S_components": [...]}; each S component
/// lists its vertices, uncut edges and edge pieces [from, to] with its measure.
nlohmann::ordered_json witness_to_json(const MetricGraph& g, const MetricCheegerResult& result);
/// {"h", "h_fraction", "S": [vertex ids]}
nlohmann::ordered_json witness_to_json(const DiscreteGraph& g, const DiscreteCheegerResult& result);

/// One row per report: graph,ensemble,kind,inequality,lhs,rhs,slack,status,assertable
std::string to_csv(const std::vector<GraphVerification>& graphs);

}  // namespace cheeger
