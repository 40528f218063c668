#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cheeger/families.hpp"
#include "cheeger/graph_io.hpp"
#include "cheeger/random_graphs.hpp"
#include "cheeger/scan.hpp"
#include "cheeger/verify.hpp"
#include "support.hpp"

using namespace cheeger;

namespace {

constexpr double kPi = std::numbers::pi;

std::string error_of(const std::string& text, bool metric_side = true) {
  try {
    const auto file = parse_graph_json(text);
    if (metric_side) {
      to_metric_graph(file);
    } else {
      to_discrete_graph(file);
    }
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("families") {
  const auto c5 = cycle_graph(5);
  CHECK(c5.vertex_count() == 5);
  CHECK(total_length(c5) == 5.0);

  const auto flower = flower_graph(3, 1.0);
  CHECK(flower.vertex_count() == 1);
  REQUIRE(flower.edge_count() == 3);
  for (const auto& e : flower.edges) {
    CHECK(e.is_loop());
    CHECK(e.length == 1.0 / 3.0);
  }

  const auto db = dumbbell_graph(2, 2.0, 1e-3);
  CHECK(db.edge_count() == 5);
  CHECK(smooth_degree_two(db).essential_edge_count == 5);
  CHECK(db.edges[2].id == "handle");
  CHECK(db.edges[2].length == 1e-3);
  CHECK(db.edges[0].length == (2.0 - 1e-3) / 4.0);

  const auto star = star_graph(3);
  CHECK(degrees(star)[0] == 3);
  const auto pumpkin = pumpkin_graph(4, 0.5);
  CHECK(pumpkin.vertex_count() == 2);
  CHECK(total_length(pumpkin) == 2.0);

  // stable ids
  CHECK(graph_digest(cycle_graph(12)) == graph_digest(cycle_graph(12)));
  CHECK(cycle_graph(12).vertices[3] == "v03");

  CHECK_THROWS_AS(dumbbell_graph(0, 2.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(dumbbell_graph(1, 2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(path_graph(2, -1.0), std::invalid_argument);
}

TEST_CASE("family parameters") {
  const auto spec = family_from_params(FamilyKind::dumbbell, {{"m", "2"}, {"L", "2"}, {"eps", "0.001"}});
  CHECK(spec.petals == 2);
  CHECK(spec.total_length == 2.0);
  CHECK(spec.handle == 0.001);
  CHECK(generate_family(spec).edge_count() == 5);

  CHECK(generate_family(family_from_params(FamilyKind::cycle, {{"n", "5"}})).edge_count() == 5);
  CHECK(parse_family_kind("butterfly") == FamilyKind::butterfly);
  CHECK(to_string(FamilyKind::pumpkin) == "pumpkin");
  CHECK_THROWS_AS(parse_family_kind("torus"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_params(FamilyKind::cycle, {{"colour", "red"}}), std::invalid_argument);
  CHECK_THROWS_AS(family_from_params(FamilyKind::cycle, {{"n", "2.5"}}), std::invalid_argument);
  CHECK_THROWS_AS(family_from_params(FamilyKind::cycle, {{"n", "five"}}), std::invalid_argument);
}

TEST_CASE("random graphs are reproducible") {
  CHECK(graph_digest(random_discrete(6, 0.5, 1)) == graph_digest(random_discrete(6, 0.5, 1)));
  CHECK(is_connected(random_discrete(6, 0.5, 1)));
  CHECK(random_discrete(6, 0.5, 1).vertex_count() == 6);
  CHECK(graph_digest(random_metric(7)) == graph_digest(random_metric(7)));
  CHECK(graph_digest(random_metric(7)) != graph_digest(random_metric(8)));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_metric(seed);
    CHECK(is_connected(g));
    CHECK(g.edge_count() <= 6);
    for (const auto& e : g.edges) {
      CHECK(e.length >= 0.2);
      CHECK(e.length < 2.0);
    }
  }

  SeededRng a(9, 3);
  SeededRng b(9, 3);
  SeededRng c(9, 4);
  const auto x = a.bits();
  CHECK(x == b.bits());
  CHECK(x != c.bits());
  for (int i = 0; i < 1000; ++i) {
    const int k = a.integer(-2, 2);
    CHECK(k >= -2);
    CHECK(k <= 2);
    const double u = a.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("an empty edge probability cannot connect three vertices") {
  try {
    random_discrete(3, 0.0, 1);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(contains(e.what(), "cannot produce a connected graph"));
  }
  CHECK_THROWS_AS(random_discrete(3, 1.5, 1), std::invalid_argument);
}

TEST_CASE("graph files") {
  const auto file = parse_graph_json(R"({"vertices":["a","b","c"],"edges":[
      {"id":"x","u":"a","v":"b","length":1.5},{"u":"b","v":"c","length":2}]})");
  const auto g = to_metric_graph(file);
  CHECK(g.edges[0].id == "x");
  CHECK(g.edges[1].id == "e2");
  CHECK(total_length(g) == 3.5);

  // lengths are optional on the discrete side
  const auto d = to_discrete_graph(parse_graph_json(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b"}]})"));
  CHECK(d.edge_count() == 1);

  // the digest parses back to the same graph
  const auto c5 = cycle_graph(5);
  CHECK(graph_digest(to_metric_graph(parse_graph_json(graph_digest(c5)))) == graph_digest(c5));
  const auto odd = random_metric(3);
  CHECK(graph_digest(to_metric_graph(parse_graph_json(graph_digest(odd)))) == graph_digest(odd));
}

TEST_CASE("graph file schema errors carry a position") {
  const auto negative = error_of(R"({"vertices":["a","b"],"edges":[{"id":"e7","u":"a","v":"b","length":-1}]})");
  CHECK(contains(negative, "edges[0]"));
  CHECK(contains(negative, "e7"));
  CHECK(contains(negative, "nonpositive length"));

  const auto duplicate = error_of(R"({"vertices":["a","a"],"edges":[]})");
  CHECK(contains(duplicate, "vertices[1]"));
  CHECK(contains(duplicate, "duplicate vertex id"));

  const auto unknown = error_of(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","length":1,"weight":2}]})");
  CHECK(contains(unknown, "edges[0]"));
  CHECK(contains(unknown, "unknown field 'weight'"));

  CHECK(contains(error_of(R"({"vertices":[],"edges":[],"extra":1})"), "unknown field 'extra'"));
  CHECK(contains(error_of(R"({"vertices":["a"],"edges":[{"u":"a","v":"z","length":1}]})"), "unknown vertex 'z'"));
  CHECK(contains(error_of(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b"}]})"), "has no length"));
  CHECK(contains(error_of(R"({"vertices":["a"],"edges":[{"u":"a","v":"a"}]})", false), "loop"));
  CHECK(contains(error_of(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","length":"1"}]})"), "expected a number"));
  CHECK(contains(error_of(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","length":1},)"), "malformed JSON"));
  CHECK(contains(error_of(R"({"vertices":["a","b"],"edges":[{"id":"e","u":"a","v":"b","length":1},{"id":"e","u":"a","v":"b","length":1}]})"),
                 "duplicate edge id"));
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.json"), InputError);
}

TEST_CASE("verify on C5 and the butterfly") {
  const auto c5 = verify_metric(cycle_graph(5));
  CHECK(c5.quantities.at("h") == 0.8);
  for (const auto& r : c5.reports) {
    if (r.inequality.rfind("nicaise", 0) == 0) CHECK(r.status == BoundStatus::holds);
    CHECK(r.digest == c5.digest);
  }
  CHECK(exit_code(summarize({c5})) == 0);

  const auto bf = verify_metric(butterfly_graph());
  CHECK(bf.quantities.at("h") == 2.0 / 3.0);
  CHECK(bf.quantities.at("h_discrete") == 1.0);
  CHECK(bf.quantities.at("E_smoothed") == 2.0);
  CHECK(bf.quantities.at("E_raw") == 6.0);
  CHECK(summarize({bf}).assertable_violations == 0);

  // loops have no discrete shadow
  const auto flower = verify_metric(flower_graph(3, 1.0));
  CHECK(flower.quantities.count("h_discrete") == 0);
}

TEST_CASE("summary and exit code") {
  GraphVerification v;
  v.reports.push_back(make_bound("ok", 1.0, 2.0, 0.0));
  v.reports.push_back(make_bound("logged", 3.0, 2.0, 0.0, false));
  v.reports.push_back(not_applicable("skip", "reason"));
  auto s = summarize({v});
  CHECK(s.reports == 3);
  CHECK(s.logged_violations == 1);
  CHECK(s.not_applicable == 1);
  CHECK(exit_code(s) == 0);
  v.reports.push_back(make_bound("bad", 3.0, 2.0, 0.5));
  s = summarize({v});
  CHECK(s.assertable_violations == 1);
  CHECK(exit_code(s) == 1);
  // within tolerance is not a violation
  CHECK(make_bound("near", 2.0 + 1e-10, 2.0, 1e-9).status == BoundStatus::holds);
  CHECK(make_bound("near", 2.0, 1.0, 1e-9).slack == -1.0);
}

TEST_CASE("discrete campaign with seed 42") {
  CampaignOptions options;
  options.ensemble = Ensemble::discrete;
  options.seed = 42;
  const auto result = run_campaign(options);
  CHECK(result.summary.graphs == 100);
  CHECK(result.summary.reports == 400);
  CHECK(result.summary.assertable_violations == 0);
  CHECK(result.summary.logged_violations == 0);
  // fiedler.upper on complete graphs
  CHECK(result.summary.not_applicable == 12);
  for (const auto& g : result.graphs) {
    CHECK(g.quantities.at("V") >= 3);
    CHECK(g.quantities.at("V") <= 8);
    for (const auto& r : g.reports) {
      if (r.inequality.rfind("alon_milman", 0) == 0) CHECK(r.status == BoundStatus::holds);
    }
  }
  // each member can be regenerated on its own
  CHECK(graph_digest(campaign_discrete_graph(options, 17)) == result.graphs[17].digest);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  CampaignOptions options;
  options.discrete_count = 12;
  options.metric_count = 4;
  options.seed = 5;
  const auto a = run_campaign(options);
  const auto b = run_campaign(options);
  CHECK(to_json(a).dump(2) == to_json(b).dump(2));
  CHECK(to_csv(a.graphs) == to_csv(b.graphs));
  options.seed = 6;
  CHECK(to_csv(run_campaign(options).graphs) != to_csv(a.graphs));

  const auto lines = csv_lines(to_csv(a.graphs));
  CHECK(lines.front() == "graph,ensemble,kind,inequality,lhs,rhs,slack,status,assertable");
  CHECK(lines.size() == a.summary.reports + 1);
}

TEST_CASE("twelve significant digits") {
  CHECK(format_number(2.0 / 3.0) == "0.666666666667");
  CHECK(format_number(0.8) == "0.8");
  CHECK(round_significant(2.0 / 3.0) == 0.666666666667);
  CHECK(to_json(make_bound("x", 1.0 / 3.0, 1.0, 0.0))["lhs"].dump() == "0.333333333333");
}

TEST_CASE("witness serialization") {
  const auto c5 = cycle_graph(5);
  const auto w = witness_to_json(c5, metric_cheeger(c5));
  CHECK(w["h"] == 0.8);
  CHECK(w["k"] == 2);
  REQUIRE(w["cuts"].size() == 2);
  CHECK(w["cuts"][0].contains("edge"));
  CHECK(w["cuts"][0].contains("t"));
  double measure = 0.0;
  for (const auto& comp : w["S_components"]) measure += comp["measure"].get<double>();
  CHECK(measure == doctest::Approx(2.5));

  const auto bf = butterfly_graph();
  const auto wb = witness_to_json(bf, metric_cheeger(bf));
  double s = 0.0;
  for (const auto& comp : wb["S_components"]) s += comp["measure"].get<double>();
  CHECK(s == doctest::Approx(3.0));

  const auto p4 = testing::path(4);
  const auto wd = witness_to_json(p4, discrete_cheeger(p4));
  CHECK(wd["h"] == 0.5);
  CHECK(wd["h_fraction"] == "1/2");
  CHECK(wd["S"] == nlohmann::ordered_json::array({"v0", "v1"}));
}

TEST_CASE("dumbbell scan") {
  const auto rows = scan_dumbbell(1, 3, 2.0, {0.5, 1e-3});
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.h == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.flower_limit == doctest::Approx(kPi * kPi * r.petals * r.petals));
    CHECK(r.ratio == doctest::Approx(r.lambda1 / r.flower_limit));
  }
  // m = 1, handle 0.5: cut at the handle midpoint
  CHECK(rows[0].petals == 1);
  CHECK(rows[0].handle == 0.5);
  CHECK(rows[0].h == 1.0);

  const auto at = [&](int m, double eps) {
    for (const auto& r : rows) {
      if (r.petals == m && r.handle == eps) return r;
    }
    FAIL("missing row");
    return rows[0];
  };
  CHECK(std::abs(at(2, 1e-3).lambda1 / (4.0 * kPi * kPi) - 1.0) < 0.05);
  CHECK(std::abs(at(3, 1e-3).lambda1 / at(2, 1e-3).lambda1 / 2.25 - 1.0) < 0.05);
  for (const double eps : {0.5, 1e-3}) {
    CHECK(at(2, eps).lambda1 > at(1, eps).lambda1);
    CHECK(at(3, eps).lambda1 > at(2, eps).lambda1);
  }

  const auto lines = csv_lines(scan_to_csv(rows));
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "m,handle,h,lambda1,flower_limit,ratio");
  CHECK(split(lines[1]).size() == 6);
  CHECK(split(lines[1])[2] == "1");

  CHECK_THROWS_AS(scan_dumbbell(2, 1, 2.0, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(scan_dumbbell(1, 1, 2.0, {}), std::invalid_argument);
}
