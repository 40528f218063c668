#include "cheeger/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "cheeger/discrete_spectral.hpp"
#include "cheeger/graph_io.hpp"
#include "cheeger/random_graphs.hpp"

namespace cheeger {

namespace {

constexpr std::uint64_t kMetricStreamOffset = 1'000'000;

void stamp(std::vector<BoundReport>& reports, const std::string& digest) {
  for (auto& r : reports) r.digest = digest;
}

void append(std::vector<BoundReport>& into, std::vector<BoundReport> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()),
              std::make_move_iterator(more.end()));
}

std::string guess_kind(const MetricGraph& g) {
  if (g.vertex_count() == 1) return g.edge_count() == 1 ? "circle" : "flower";
  if (g.vertex_count() == 2 && g.edges.size() > 2 && has_loop(g)) return "dumbbell";
  return "metric";
}

}  // namespace

GraphVerification verify_discrete(const DiscreteGraph& g) {
  GraphVerification v;
  v.kind = "discrete";
  v.digest = graph_digest(g);
  const auto cheeger = discrete_cheeger(g);
  const auto deg = degrees(g);
  v.quantities = {{"V", static_cast<double>(g.vertex_count())},
                  {"edges", static_cast<double>(g.edge_count())},
                  {"h", cheeger.value.value()},
                  {"lambda1", fiedler_value(g)},
                  {"edge_connectivity", static_cast<double>(edge_connectivity(g))},
                  {"deg_max", static_cast<double>(*std::max_element(deg.begin(), deg.end()))}};
  append(v.reports, check_fiedler_bounds(g));
  append(v.reports, check_alon_milman(g));
  stamp(v.reports, v.digest);
  return v;
}

GraphVerification verify_metric(const MetricGraph& g, const SpectralOptions& spectral,
                                const MetricCheegerOptions& cheeger) {
  GraphVerification v;
  v.kind = guess_kind(g);
  v.digest = graph_digest(g);
  const auto q = compute_metric_quantities(g, spectral, cheeger);
  v.quantities = {{"L", q.total_length},
                  {"h", q.h},
                  {"k", static_cast<double>(q.cheeger.k)},
                  {"lambda1", q.lambda1},
                  {"lambda1_finest", q.spectrum.lambda1},
                  {"lambda1_capped", q.spectrum.capped ? 1.0 : 0.0},
                  {"E_smoothed", static_cast<double>(q.edges_smoothed)},
                  {"E_raw", static_cast<double>(q.edges_raw)}};
  append(v.reports, cheeger_length_bounds(q));
  append(v.reports, nicaise_bounds(q));
  v.reports.push_back(conjecture_bound(q));

  if (!has_loop(g) && g.vertex_count() >= 2 && g.vertex_count() <= kDiscreteCheegerMaxVertices) {
    const auto shadow = discrete_shadow(g);
    const auto d = verify_discrete(shadow);
    v.quantities["h_discrete"] = d.quantities.at("h");
    v.quantities["lambda1_discrete"] = d.quantities.at("lambda1");
    append(v.reports, d.reports);
  }
  stamp(v.reports, v.digest);
  return v;
}

Ensemble parse_ensemble(const std::string& name) {
  if (name == "discrete") return Ensemble::discrete;
  if (name == "metric") return Ensemble::metric;
  if (name == "both") return Ensemble::both;
  throw std::invalid_argument("unknown ensemble '" + name + "'");
}

DiscreteGraph campaign_discrete_graph(const CampaignOptions& options, std::size_t index) {
  SeededRng rng(options.seed, index);
  const int vertices = rng.integer(options.min_vertices, options.max_vertices);
  const double p = rng.uniform(0.3, 0.9);
  return random_discrete(vertices, p, rng.bits());
}

MetricGraph campaign_metric_graph(const CampaignOptions& options, std::size_t index) {
  SeededRng rng(options.seed, kMetricStreamOffset + index);
  MetricEnsembleOptions metric;
  metric.max_edges = options.metric_max_edges;
  return random_metric(rng.bits(), metric);
}

namespace {

// Evaluates job(i) for every i on a pool of threads; results keep index order.
template <typename Job>
std::vector<GraphVerification> parallel_map(std::size_t count, const Job& job) {
  std::vector<GraphVerification> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

CampaignResult run_campaign(const CampaignOptions& options) {
  CampaignResult result;
  if (options.ensemble != Ensemble::metric) {
    auto graphs = parallel_map(options.discrete_count, [&](std::size_t i) {
      auto v = verify_discrete(campaign_discrete_graph(options, i));
      v.index = i;
      v.ensemble = "discrete";
      return v;
    });
    std::move(graphs.begin(), graphs.end(), std::back_inserter(result.graphs));
  }
  if (options.ensemble != Ensemble::discrete) {
    auto graphs = parallel_map(options.metric_count, [&](std::size_t i) {
      auto v = verify_metric(campaign_metric_graph(options, i), options.spectral);
      v.index = i;
      v.ensemble = "metric";
      return v;
    });
    std::move(graphs.begin(), graphs.end(), std::back_inserter(result.graphs));
  }
  result.summary = summarize(result.graphs);
  return result;
}

CampaignSummary summarize(const std::vector<GraphVerification>& graphs) {
  CampaignSummary s;
  s.graphs = graphs.size();
  for (const auto& g : graphs) {
    for (const auto& r : g.reports) {
      ++s.reports;
      if (r.status == BoundStatus::not_applicable) ++s.not_applicable;
      if (r.status == BoundStatus::violated) {
        if (r.assertable) {
          ++s.assertable_violations;
        } else {
          ++s.logged_violations;
        }
      }
    }
  }
  return s;
}

int exit_code(const CampaignSummary& summary) { return summary.assertable_violations > 0 ? 1 : 0; }

double round_significant(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json out;
  out["inequality"] = r.inequality;
  out["status"] = std::string(to_string(r.status));
  out["assertable"] = r.assertable;
  if (r.status != BoundStatus::not_applicable) {
    out["lhs"] = round_significant(r.lhs);
    out["rhs"] = round_significant(r.rhs);
    out["slack"] = round_significant(r.slack);
    out["tolerance"] = round_significant(r.tolerance);
  }
  auto quantities = nlohmann::ordered_json::object();
  for (const auto& [k, val] : r.quantities) quantities[k] = round_significant(val);
  out["quantities"] = quantities;
  if (!r.note.empty()) out["note"] = r.note;
  out["digest"] = r.digest;
  return out;
}

nlohmann::ordered_json to_json(const GraphVerification& v) {
  nlohmann::ordered_json out;
  out["index"] = v.index;
  out["ensemble"] = v.ensemble;
  out["kind"] = v.kind;
  out["graph"] = nlohmann::ordered_json::parse(v.digest);
  auto quantities = nlohmann::ordered_json::object();
  for (const auto& [k, val] : v.quantities) quantities[k] = round_significant(val);
  out["quantities"] = quantities;
  out["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : v.reports) out["reports"].push_back(to_json(r));
  return out;
}

nlohmann::ordered_json to_json(const CampaignResult& result) {
  nlohmann::ordered_json out;
  out["summary"] = {{"graphs", result.summary.graphs},
                    {"reports", result.summary.reports},
                    {"assertable_violations", result.summary.assertable_violations},
                    {"logged_violations", result.summary.logged_violations},
                    {"not_applicable", result.summary.not_applicable}};
  out["graphs"] = nlohmann::ordered_json::array();
  for (const auto& g : result.graphs) out["graphs"].push_back(to_json(g));
  return out;
}

nlohmann::ordered_json witness_to_json(const MetricGraph& g, const MetricCheegerResult& result) {
  nlohmann::ordered_json out;
  out["h"] = round_significant(result.value);
  out["k"] = result.k;
  out["cuts"] = nlohmann::ordered_json::array();
  std::vector<std::vector<double>> positions(g.edge_count());
  for (const auto& c : result.cuts) {
    out["cuts"].push_back({{"edge", c.edge}, {"t", round_significant(c.t)}});
    positions[c.edge_index].push_back(c.t);
  }
  out["S_components"] = nlohmann::ordered_json::array();
  const auto& comps = result.structure.components;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (result.configuration.coloring.at(c) != Side::in_s) continue;
    const auto& comp = comps[c];
    nlohmann::ordered_json item;
    item["vertices"] = nlohmann::ordered_json::array();
    for (const auto v : comp.vertices) item["vertices"].push_back(g.vertices[v]);
    item["edges"] = nlohmann::ordered_json::array();
    for (const auto e : comp.whole_edges) item["edges"].push_back(g.edges[e].id);
    item["pieces"] = nlohmann::ordered_json::array();
    double measure = comp.fixed_measure;
    for (const auto& f : comp.fragments) {
      const auto& ts = positions[f.edge];
      const double from = f.index == 0 ? 0.0 : ts[f.index - 1];
      const double to = f.index < ts.size() ? ts[f.index] : g.edges[f.edge].length;
      measure += to - from;
      item["pieces"].push_back({{"edge", g.edges[f.edge].id},
                                {"from", round_significant(from)},
                                {"to", round_significant(to)}});
    }
    item["measure"] = round_significant(measure);
    out["S_components"].push_back(std::move(item));
  }
  return out;
}

nlohmann::ordered_json witness_to_json(const DiscreteGraph& g, const DiscreteCheegerResult& result) {
  nlohmann::ordered_json out;
  out["h"] = round_significant(result.value.value());
  out["h_fraction"] = std::to_string(result.value.num) + "/" + std::to_string(result.value.den);
  out["S"] = nlohmann::ordered_json::array();
  for (const auto v : result.witness) out["S"].push_back(g.vertices[v]);
  return out;
}

std::string to_csv(const std::vector<GraphVerification>& graphs) {
  std::ostringstream out;
  out << "graph,ensemble,kind,inequality,lhs,rhs,slack,status,assertable\n";
  for (const auto& g : graphs) {
    for (const auto& r : g.reports) {
      const bool na = r.status == BoundStatus::not_applicable;
      out << g.index << ',' << g.ensemble << ',' << g.kind << ',' << r.inequality << ','
          << (na ? "" : format_number(r.lhs)) << ',' << (na ? "" : format_number(r.rhs)) << ','
          << (na ? "" : format_number(r.slack)) << ',' << to_string(r.status) << ','
          << (r.assertable ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

}  // namespace cheeger
