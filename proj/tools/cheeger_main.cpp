#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cheeger/discrete_spectral.hpp"
#include "cheeger/families.hpp"
#include "cheeger/graph_io.hpp"
#include "cheeger/metric_cheeger.hpp"
#include "cheeger/metric_spectral.hpp"
#include "cheeger/scan.hpp"
#include "cheeger/verify.hpp"

namespace {

using cheeger::InputError;
using Json = nlohmann::ordered_json;

constexpr int kClean = 0;
constexpr int kViolation = 1;
constexpr int kUsageError = 2;

struct Options {
  std::string action;
  std::string input;
  std::string out;
  std::optional<double> tol;
  int max_cuts = 2;

  std::string family;
  std::vector<std::string> params;

  std::string scan_kind;
  std::string m_range = "1..3";
  double scan_length = 2.0;
  std::string handles = "0.1,0.01,0.001";

  std::string ensemble = "both";
  std::optional<std::size_t> count;
  std::uint64_t seed = 42;
  std::string csv;
  std::vector<std::string> inputs;
  std::string side = "metric";
};

cheeger::SpectralOptions spectral_options(const Options& o) {
  cheeger::SpectralOptions spectral;
  if (o.tol) spectral.target_rel_tol = *o.tol;
  if (const char* cap = std::getenv("CHEEGER_DOF_CAP"); cap != nullptr && *cap != '\0') {
    char* end = nullptr;
    const long long value = std::strtoll(cap, &end, 10);
    if (*end != '\0' || value < 2) {
      throw InputError(std::string("CHEEGER_DOF_CAP: expected an integer >= 2, got '") + cap + "'");
    }
    spectral.dof_cap = static_cast<std::size_t>(value);
  }
  return spectral;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    cheeger::write_text_file(path, text);
  }
}

void emit(const std::string& path, const Json& json) { emit(path, json.dump(2) + "\n"); }

std::string sibling_csv(const std::string& json_path) {
  const auto dot = json_path.find_last_of('.');
  const auto slash = json_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return json_path + ".csv";
  }
  return json_path.substr(0, dot) + ".csv";
}

int report_campaign(const cheeger::CampaignResult& result, const std::string& out,
                    const std::string& csv) {
  emit(out, cheeger::to_json(result));
  if (!csv.empty()) emit(csv, cheeger::to_csv(result.graphs));
  const auto& s = result.summary;
  std::cerr << "graphs " << s.graphs << ", reports " << s.reports << ", assertable violations "
            << s.assertable_violations << ", logged violations " << s.logged_violations
            << ", not applicable " << s.not_applicable << "\n";
  return cheeger::exit_code(s) == 0 ? kClean : kViolation;
}

cheeger::CampaignResult single(cheeger::GraphVerification v) {
  cheeger::CampaignResult result;
  v.ensemble = "input";
  result.graphs.push_back(std::move(v));
  result.summary = cheeger::summarize(result.graphs);
  return result;
}

int run_discrete(const Options& o) {
  const auto g = cheeger::parse_discrete_graph_file(o.input);
  if (o.action == "cheeger") {
    emit(o.out, cheeger::witness_to_json(g, cheeger::discrete_cheeger(g)));
  } else if (o.action == "lambda1") {
    cheeger::require_connected(g);
    emit(o.out, Json{{"lambda1", cheeger::round_significant(cheeger::fiedler_value(g))}});
  } else {
    return report_campaign(single(cheeger::verify_discrete(g)), o.out, "");
  }
  return kClean;
}

int run_metric(const Options& o) {
  const auto g = cheeger::parse_metric_graph_file(o.input);
  cheeger::MetricCheegerOptions cut_options;
  cut_options.max_cuts_per_edge = o.max_cuts;
  if (o.action == "cheeger") {
    emit(o.out, cheeger::witness_to_json(g, cheeger::metric_cheeger(g, cut_options)));
  } else if (o.action == "lambda1") {
    const auto r = cheeger::lambda1_metric(g, spectral_options(o));
    Json out;
    out["lambda1"] = cheeger::round_significant(r.extrapolated);
    out["lambda1_finest"] = cheeger::round_significant(r.lambda1);
    out["residual"] = cheeger::round_significant(r.residual);
    out["capped"] = r.capped;
    out["meshes"] = Json::array();
    for (const auto& [width, lambda] : r.mesh_sequence) {
      out["meshes"].push_back({{"width", cheeger::round_significant(width)},
                               {"lambda1", cheeger::round_significant(lambda)}});
    }
    emit(o.out, out);
  } else {
    return report_campaign(single(cheeger::verify_metric(g, spectral_options(o), cut_options)),
                           o.out, "");
  }
  return kClean;
}

// Accepts "k=v" tokens, each possibly holding several comma-separated pairs.
std::map<std::string, std::string> parse_params(const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> out;
  for (const auto& token : tokens) {
    std::size_t start = 0;
    while (start <= token.size()) {
      const auto comma = std::min(token.find(',', start), token.size());
      const auto pair = token.substr(start, comma - start);
      start = comma + 1;
      if (pair.empty()) continue;
      const auto eq = pair.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw InputError("--params: expected key=value, got '" + pair + "'");
      }
      if (!out.emplace(pair.substr(0, eq), pair.substr(eq + 1)).second) {
        throw InputError("--params: duplicate key '" + pair.substr(0, eq) + "'");
      }
    }
  }
  return out;
}

int run_family(const Options& o) {
  const auto kind = cheeger::parse_family_kind(o.family);
  const auto g = cheeger::generate_family(cheeger::family_from_params(kind, parse_params(o.params)));
  emit(o.out, cheeger::graph_to_json(g));
  return kClean;
}

double parse_double(const std::string& what, const std::string& text) {
  std::size_t used = 0;
  try {
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(what + ": not a number: '" + text + "'");
}

int run_scan(const Options& o) {
  int m_min = 0;
  int m_max = 0;
  const auto dots = o.m_range.find("..");
  const auto to_int = [](const std::string& text) {
    const double v = parse_double("--m", text);
    if (v != static_cast<int>(v)) throw InputError("--m: not an integer: '" + text + "'");
    return static_cast<int>(v);
  };
  if (dots == std::string::npos) {
    m_min = m_max = to_int(o.m_range);
  } else {
    m_min = to_int(o.m_range.substr(0, dots));
    m_max = to_int(o.m_range.substr(dots + 2));
  }
  if (m_min < 1 || m_max < m_min) throw InputError("--m: expected A..B with 1 <= A <= B");

  std::vector<double> handles;
  std::size_t start = 0;
  while (start <= o.handles.size()) {
    const auto comma = std::min(o.handles.find(',', start), o.handles.size());
    handles.push_back(parse_double("--handle", o.handles.substr(start, comma - start)));
    start = comma + 1;
  }
  for (const double e : handles) {
    if (!(e > 0.0) || !(e < o.scan_length)) {
      throw InputError("--handle: every handle must lie in (0, length)");
    }
  }
  if (!(o.scan_length > 0.0)) throw InputError("--length must be positive");
  emit(o.out, cheeger::scan_to_csv(
                  cheeger::scan_dumbbell(m_min, m_max, o.scan_length, handles, spectral_options(o))));
  return kClean;
}

int run_verify(const Options& o, bool ensemble_given) {
  cheeger::CampaignOptions campaign;
  campaign.ensemble = cheeger::parse_ensemble(o.ensemble);
  campaign.seed = o.seed;
  campaign.spectral = spectral_options(o);
  if (o.count) campaign.discrete_count = campaign.metric_count = *o.count;

  cheeger::CampaignResult result;
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    auto v = o.side == "discrete"
                 ? cheeger::verify_discrete(cheeger::parse_discrete_graph_file(o.inputs[i]))
                 : cheeger::verify_metric(cheeger::parse_metric_graph_file(o.inputs[i]),
                                          campaign.spectral);
    v.index = i;
    v.ensemble = "input";
    result.graphs.push_back(std::move(v));
  }
  if (o.inputs.empty() || ensemble_given) {
    auto ensembles = cheeger::run_campaign(campaign);
    std::move(ensembles.graphs.begin(), ensembles.graphs.end(), std::back_inserter(result.graphs));
  }
  result.summary = cheeger::summarize(result.graphs);
  return report_campaign(result, o.out, o.csv.empty() ? sibling_csv(o.out) : o.csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cheeger constants and spectral gaps of discrete and metric graphs", "cheeger"};
  app.require_subcommand(1);
  Options o;

  auto* discrete = app.add_subcommand("discrete", "Combinatorial graph: Cheeger constant, Fiedler value, bounds");
  discrete->add_option("action", o.action)->required()->check(CLI::IsMember({"cheeger", "lambda1", "verify"}));
  discrete->add_option("--input", o.input, "Graph JSON file")->required();
  discrete->add_option("--out", o.out, "Write the JSON result here instead of stdout");

  auto* metric = app.add_subcommand("metric", "Metric graph: Cheeger cut, lambda1, bounds");
  metric->add_option("action", o.action)->required()->check(CLI::IsMember({"cheeger", "lambda1", "verify"}));
  metric->add_option("--input", o.input, "Graph JSON file with edge lengths")->required();
  metric->add_option("--tol", o.tol, "Relative tolerance between successive meshes")
      ->check(CLI::PositiveNumber);
  metric->add_option("--max-cuts", o.max_cuts, "Cut points per edge")->check(CLI::Range(1, 4));
  metric->add_option("--out", o.out, "Write the JSON result here instead of stdout");

  auto* family = app.add_subcommand("family", "Write a named graph family as JSON");
  family->add_option("kind", o.family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "star", "flower", "pumpkin", "dumbbell", "butterfly"}));
  family->add_option("--params", o.params, "key=value pairs, e.g. m=2 L=2 eps=0.001");
  family->add_option("--out", o.out)->required();

  auto* scan = app.add_subcommand("scan", "Parameter scans");
  scan->add_option("kind", o.scan_kind)->required()->check(CLI::IsMember({"dumbbell"}));
  scan->add_option("--m", o.m_range, "Petals per side, A..B");
  scan->add_option("--length", o.scan_length, "Total length");
  scan->add_option("--handle", o.handles, "Comma-separated handle lengths");
  scan->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  scan->add_option("--out", o.out)->required();

  auto* verify = app.add_subcommand("verify", "Check every inequality over random ensembles and files");
  auto* ensemble_opt = verify->add_option("--ensemble", o.ensemble)
                           ->check(CLI::IsMember({"discrete", "metric", "both"}));
  verify->add_option("--count", o.count, "Graphs per ensemble (default 100 discrete, 50 metric)");
  verify->add_option("--seed", o.seed);
  verify->add_option("--input", o.inputs, "Graph files to verify as well");
  verify->add_option("--side", o.side, "How to read --input files")
      ->check(CLI::IsMember({"metric", "discrete"}));
  verify->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  verify->add_option("--out", o.out, "JSON report")->required();
  verify->add_option("--csv", o.csv, "CSV summary (default: next to the JSON report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kClean : kUsageError;
  }

  try {
    if (*discrete) return run_discrete(o);
    if (*metric) return run_metric(o);
    if (*family) return run_family(o);
    if (*scan) return run_scan(o);
    return run_verify(o, ensemble_opt->count() > 0);
  } catch (const std::exception& e) {
    std::cerr << "cheeger: error: " << e.what() << "\n";
    return kUsageError;
  }
}
