#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cheeger/families.hpp"
#include "cheeger/metric_spectral.hpp"
#include "cheeger/random_graphs.hpp"
#include "support.hpp"

using namespace cheeger;
using namespace cheeger::testing;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const BoundReport& find(const std::vector<BoundReport>& reports, const std::string& id) {
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [&](const BoundReport& r) { return r.inequality == id; });
  REQUIRE(it != reports.end());
  return *it;
}

Mesh fixed_mesh(const MetricGraph& g, int per_edge) {
  return Mesh{std::vector<int>(g.edge_count(), per_edge)};
}

// Loop of length 1.33 with a pendant edge of length 0.39: h is the circle's
// 4/L, but the pendant pulls lambda1 below 4 pi^2 / L^2.
MetricGraph lollipop() { return metric(2, {{0, 1, 0.39}, {1, 1, 1.33}}); }

}  // namespace

TEST_CASE("assembly of a two-element interval") {
  const auto g = path_graph(1, 1.0);
  const auto sys = assemble(g, fixed_mesh(g, 2));
  REQUIRE(sys.stiffness.rows() == 3);
  // unknowns: v0, v1, then the interior node; path order is v0, interior, v1
  Eigen::Matrix3d k_path;
  k_path << 2, -2, 0, -2, 4, -2, 0, -2, 2;
  Eigen::Matrix3d m_path;
  m_path << 2, 1, 0, 1, 4, 1, 0, 1, 2;
  m_path /= 12.0;
  Eigen::PermutationMatrix<3> to_path;
  to_path.indices() << 0, 2, 1;
  const Eigen::Matrix3d k = Eigen::MatrixXd(sys.stiffness);
  const Eigen::Matrix3d m = Eigen::MatrixXd(sys.mass);
  CHECK((to_path * k * to_path.transpose() - k_path).norm() < 1e-15);
  CHECK((to_path * m * to_path.transpose() - m_path).norm() < 1e-15);
}

TEST_CASE("assembly of a loop shares the anchor unknown") {
  const auto g = flower_graph(1, 1.0);
  const auto sys = assemble(g, fixed_mesh(g, 4));
  REQUIRE(sys.stiffness.rows() == 4);
  const Eigen::MatrixXd k(sys.stiffness);
  CHECK(k(0, 0) == 8.0);
  CHECK(k(0, 1) == -4.0);
  CHECK(k(0, 3) == -4.0);
  CHECK(k(0, 2) == 0.0);
  CHECK(Mesh{{4}}.dof_count(g) == 4);

  CHECK_THROWS_AS(assemble(g, fixed_mesh(g, 1)), std::invalid_argument);
  CHECK_THROWS_AS(assemble(g, Mesh{{4, 4}}), std::invalid_argument);
}

TEST_CASE("constants span the kernel and the mass matrix is definite") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto g = random_metric(seed);
    const auto sys = assemble(g, uniform_mesh(g, total_length(g) / 24.0));
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(sys.stiffness.rows());
    CHECK((sys.stiffness * ones).norm() < 1e-12 * Eigen::MatrixXd(sys.stiffness).norm());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> k(Eigen::MatrixXd(sys.stiffness), Eigen::EigenvaluesOnly);
    CHECK((k.eigenvalues().array() < 1e-8).count() == 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> m(Eigen::MatrixXd(sys.mass), Eigen::EigenvaluesOnly);
    CHECK(m.eigenvalues()(0) > 0.0);
  }
}

TEST_CASE("templated assembly") {
  const auto g = cycle_graph(3);
  const auto f = assemble<float>(g, fixed_mesh(g, 3));
  const auto d = assemble<double>(g, fixed_mesh(g, 3));
  CHECK((Eigen::MatrixXd(f.stiffness.cast<double>()) - Eigen::MatrixXd(d.stiffness)).norm() < 1e-5);
}

TEST_CASE("uniform meshes keep at least two elements per edge") {
  const auto g = dumbbell_graph(1, 2.0, 1e-3);
  const auto mesh = uniform_mesh(g, 2.0 / 32.0);
  CHECK(mesh.subdivisions == std::vector<int>{16, 2, 16});
  CHECK(mesh.dof_count(g) == 2 + 15 + 1 + 15);
  CHECK(mesh.refined().subdivisions == std::vector<int>{32, 4, 32});
  CHECK_THROWS_AS(uniform_mesh(g, 0.0), std::invalid_argument);
}

TEST_CASE("analytic families") {
  CHECK(analytic_lambda1({AnalyticFamily::Kind::interval, 1, 2.0}) == doctest::Approx(kPi * kPi / 4.0));
  CHECK(analytic_lambda1({AnalyticFamily::Kind::flower, 4, 1.0}) == doctest::Approx(16.0 * kPi * kPi));
  CHECK(analytic_lambda1({AnalyticFamily::Kind::circle, 1, 2.0 * kPi}) == doctest::Approx(1.0));
  CHECK(analytic_lambda1({AnalyticFamily::Kind::star, 3, 1.0}) == doctest::Approx(kPi * kPi / 4.0));
  CHECK_THROWS_AS(analytic_lambda1({AnalyticFamily::Kind::interval, 1, 0.0}), std::invalid_argument);
}

TEST_CASE("lambda1 on closed-form families") {
  CHECK(rel(lambda1_metric(path_graph(1, 1.0)).extrapolated, kPi * kPi) < 1e-4);
  CHECK(rel(lambda1_metric(flower_graph(3, 1.0)).extrapolated, 9.0 * kPi * kPi) < 1e-4);
  CHECK(rel(lambda1_metric(flower_graph(1, 1.0)).extrapolated, 4.0 * kPi * kPi) < 1e-4);
  CHECK(rel(lambda1_metric(star_graph(3, 1.0)).extrapolated, kPi * kPi / 4.0) < 1e-4);
  CHECK(rel(lambda1_metric(path_graph(4, 0.5)).extrapolated, kPi * kPi / 4.0) < 1e-4);
  CHECK(rel(lambda1_metric(cycle_graph(5)).extrapolated, 4.0 * kPi * kPi / 25.0) < 1e-6);
}

TEST_CASE("refinement sequence") {
  const auto r = lambda1_metric(path_graph(1, 1.0));
  REQUIRE(r.mesh_sequence.size() >= 2);
  for (std::size_t i = 1; i < r.mesh_sequence.size(); ++i) {
    CHECK(r.mesh_sequence[i].first == doctest::Approx(r.mesh_sequence[i - 1].first / 2.0));
    // conforming elements approach from above
    CHECK(r.mesh_sequence[i].second <= r.mesh_sequence[i - 1].second);
  }
  CHECK(r.extrapolated <= r.mesh_sequence.front().second);
  CHECK(r.residual < 1e-8);
  CHECK_FALSE(r.capped);

  SpectralOptions tight;
  tight.dof_cap = 200;
  tight.target_rel_tol = 1e-12;
  const auto capped = lambda1_metric(path_graph(1, 1.0), tight);
  CHECK(capped.capped);
  CHECK(rel(capped.extrapolated, kPi * kPi) < 1e-4);

  CHECK_THROWS_AS(lambda1_metric(metric(4, {{0, 1, 1.0}, {2, 3, 1.0}})), std::invalid_argument);
}

TEST_CASE("second-order convergence against interval and circle") {
  for (const auto& [g, exact] : {std::pair{path_graph(1, 1.0), kPi * kPi},
                                 std::pair{flower_graph(1, 1.0), 4.0 * kPi * kPi},
                                 std::pair{star_graph(3, 1.0), kPi * kPi / 4.0}}) {
    for (const int n : {8, 16, 32}) {
      const double coarse = lambda1_on_mesh(g, fixed_mesh(g, n));
      const double fine = lambda1_on_mesh(g, fixed_mesh(g, 2 * n));
      const double order = std::log2((coarse - exact) / (fine - exact));
      CHECK(order >= 1.7);
      CHECK(order <= 2.3);
    }
  }
}

TEST_CASE("dense and sparse solvers agree") {
  for (std::uint64_t seed = 20; seed < 26; ++seed) {
    const auto g = random_metric(seed);
    const auto sys = assemble(g, uniform_mesh(g, total_length(g) / 600.0));
    REQUIRE(sys.stiffness.rows() > static_cast<Eigen::Index>(kDenseDofLimit));
    CHECK(rel(lambda1_sparse(sys), lambda1_dense(sys)) < 1e-9);
  }
  // a near-disconnected dumbbell: lambda1 is small, found by index
  const auto g = dumbbell_graph(2, 2.0, 1.0);
  const auto sys = assemble(g, uniform_mesh(g, 2.0 / 700.0));
  CHECK(rel(lambda1_sparse(sys), lambda1_dense(sys)) < 1e-9);
}

TEST_CASE("a degree-two vertex leaves lambda1 unchanged") {
  for (std::uint64_t seed = 40; seed < 44; ++seed) {
    const auto g = random_metric(seed);
    const double before = lambda1_metric(g).extrapolated;
    for (std::size_t e = 0; e < g.edge_count(); e += 2) {
      const auto split = insert_vertex(g, e, g.edges[e].length / 2.0, "mid");
      CHECK(rel(lambda1_metric(split).extrapolated, before) < 1e-8);
    }
  }
}

TEST_CASE("scaling lengths by c divides lambda1 by c squared") {
  for (std::uint64_t seed = 60; seed < 64; ++seed) {
    const auto g = random_metric(seed);
    const double base = lambda1_metric(g).extrapolated;
    for (const double c : {0.5, 3.0}) {
      CHECK(rel(lambda1_metric(scale_lengths(g, c)).extrapolated, base / (c * c)) < 1e-9);
    }
  }
}

TEST_CASE("sandwich on the interval and the circle") {
  const auto interval = check_nicaise_bounds(path_graph(1, 1.0));
  const auto& lo = find(interval, "nicaise.lower.smoothed");
  const auto& hi = find(interval, "nicaise.upper.smoothed");
  CHECK(lo.status == BoundStatus::holds);
  CHECK(hi.status == BoundStatus::holds);
  CHECK(lo.lhs == doctest::Approx(kPi * kPi));
  CHECK(hi.rhs == doctest::Approx(kPi * kPi));
  CHECK(std::abs(hi.slack) < 1e-6 * kPi * kPi);
  CHECK(lo.quantities.at("h") == 2.0);
  CHECK(lo.quantities.at("E") == 1.0);

  const auto circle = check_nicaise_bounds(flower_graph(1, 1.0));
  CHECK(find(circle, "nicaise.lower.smoothed").lhs == doctest::Approx(4.0 * kPi * kPi));
  CHECK(find(circle, "nicaise.upper.smoothed").rhs == doctest::Approx(4.0 * kPi * kPi));
  for (const auto& r : circle) CHECK(r.status == BoundStatus::holds);
}

TEST_CASE("butterfly sandwich under both edge counts") {
  const auto q = compute_metric_quantities(butterfly_graph());
  CHECK(q.edges_smoothed == 2);
  CHECK(q.edges_raw == 6);
  CHECK(q.reduction_has_loop);
  const auto reports = nicaise_bounds(q);
  CHECK(reports.size() == 4);
  CHECK(find(reports, "nicaise.lower.smoothed").assertable);
  CHECK_FALSE(find(reports, "nicaise.lower.raw").assertable);
  CHECK(find(reports, "nicaise.lower.raw").quantities.at("E") == 6.0);
  for (const auto& r : reports) CHECK(r.status == BoundStatus::holds);

  const auto length = cheeger_length_bounds(q);
  CHECK(find(length, "cheeger.lower_2_over_L").status == BoundStatus::holds);
  CHECK(find(length, "cheeger.upper_2E_over_L").status == BoundStatus::not_applicable);
}

TEST_CASE("conjecture") {
  const auto interval = check_conjecture(path_graph(1, 1.0));
  CHECK(interval.status == BoundStatus::holds);
  CHECK_FALSE(interval.assertable);
  CHECK(std::abs(interval.slack) < 1e-5);

  const auto flower = check_conjecture(flower_graph(3, 1.0));
  CHECK(flower.status == BoundStatus::holds);
  CHECK(flower.lhs == doctest::Approx(9.0 * kPi * kPi));
  CHECK(std::abs(flower.slack) < 1e-5 * flower.lhs);

  // four random edges; values recorded from the dense and sparse solvers
  MetricEnsembleOptions four;
  four.max_edges = 4;
  const auto g = random_multigraph(3, 4, 42, four);
  const auto q = compute_metric_quantities(g);
  CHECK(q.h == doctest::Approx(0.929602439969605).epsilon(1e-12));
  CHECK(q.lambda1 == doctest::Approx(2.33605019680923).epsilon(1e-6));
  const auto r = conjecture_bound(q);
  CHECK(r.status == BoundStatus::holds);
  CHECK(r.slack == doctest::Approx(0.2038191437).epsilon(1e-5));

  const auto counter = compute_metric_quantities(lollipop());
  CHECK(counter.h == doctest::Approx(4.0 / 1.72).epsilon(1e-12));
  const auto c = conjecture_bound(counter);
  CHECK(c.status == BoundStatus::violated);
  CHECK_FALSE(c.assertable);
  CHECK_FALSE(is_assertable_violation(c));
}
