#include "cheeger/metric_spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

namespace cheeger {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

constexpr double kPi = std::numbers::pi;

struct EigenPair {
  double value = 0.0;
  VectorXd vector;
};

double relative_residual(const FemSystem<double>& sys, const EigenPair& pair) {
  const VectorXd ku = sys.stiffness * pair.vector;
  const VectorXd mu = sys.mass * pair.vector;
  const double scale = ku.norm() + std::abs(pair.value) * mu.norm();
  return scale > 0.0 ? (ku - pair.value * mu).norm() / scale : 0.0;
}

EigenPair solve_dense(const FemSystem<double>& sys) {
  const MatrixXd k(sys.stiffness);
  const MatrixXd m(sys.mass);
  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> solver(k, m,
                                                            Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("lambda1_dense: generalized eigensolver failed");
  }
  return {solver.eigenvalues()(1), solver.eigenvectors().col(1)};
}

// M-orthonormalizes the columns of x against `constant` and each other.
void m_orthonormalize(MatrixXd& x, const SparseMatrix& m, const VectorXd& constant) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      auto col = x.col(j);
      col -= constant * constant.dot(m * col);
      for (Eigen::Index i = 0; i < j; ++i) col -= x.col(i) * x.col(i).dot(m * col);
      const double norm = std::sqrt(col.dot(m * col));
      if (!(norm > 0.0)) throw std::runtime_error("lambda1_sparse: subspace collapsed");
      col /= norm;
    }
  }
}

EigenPair solve_sparse(const FemSystem<double>& sys) {
  const SparseMatrix& k = sys.stiffness;
  const SparseMatrix& m = sys.mass;
  const Eigen::Index n = k.rows();
  if (n < 3) return solve_dense(sys);

  // Grounding the first unknown makes K invertible on the complement of the
  // constants; right-hand sides M x with x M-orthogonal to 1 are consistent.
  const SparseMatrix grounded = k.bottomRightCorner(n - 1, n - 1);
  Eigen::SimplicialLDLT<SparseMatrix> factor(grounded);
  if (factor.info() != Eigen::Success) {
    throw std::runtime_error("lambda1_sparse: factorization failed (disconnected graph?)");
  }

  VectorXd constant = VectorXd::Ones(n);
  constant /= std::sqrt(constant.dot(m * constant));

  const Eigen::Index block = std::min<Eigen::Index>(n - 1, 12);
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  MatrixXd x(n, block);
  for (Eigen::Index j = 0; j < block; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) x(i, j) = uniform(rng);
  }
  m_orthonormalize(x, m, constant);

  double previous = std::numeric_limits<double>::infinity();
  EigenPair best;
  for (int iter = 0; iter < 1000; ++iter) {
    MatrixXd z(n, block);
    for (Eigen::Index j = 0; j < block; ++j) {
      const VectorXd rhs = m * x.col(j);
      z(0, j) = 0.0;
      z.col(j).tail(n - 1) = factor.solve(rhs.tail(n - 1));
    }
    m_orthonormalize(z, m, constant);
    const MatrixXd reduced = z.transpose() * (k * z);
    Eigen::SelfAdjointEigenSolver<MatrixXd> ritz(0.5 * (reduced + reduced.transpose()));
    x = z * ritz.eigenvectors();
    best = {ritz.eigenvalues()(0), x.col(0)};
    const double change = std::abs(best.value - previous);
    previous = best.value;
    if (change <= 1e-14 * std::abs(best.value) && relative_residual(sys, best) < 1e-9) break;
  }
  return best;
}

EigenPair solve_on_mesh(const MetricGraph& g, const Mesh& mesh) {
  const auto sys = assemble<double>(g, mesh);
  return mesh.dof_count(g) <= kDenseDofLimit ? solve_dense(sys) : solve_sparse(sys);
}

}  // namespace

std::size_t Mesh::dof_count(const MetricGraph& g) const {
  std::size_t n = g.vertex_count();
  for (const int s : subdivisions) n += static_cast<std::size_t>(s - 1);
  return n;
}

double Mesh::max_width(const MetricGraph& g) const {
  double w = 0.0;
  for (std::size_t i = 0; i < subdivisions.size(); ++i) {
    w = std::max(w, g.edges[i].length / subdivisions[i]);
  }
  return w;
}

Mesh Mesh::refined() const {
  Mesh out = *this;
  for (auto& s : out.subdivisions) s *= 2;
  return out;
}

Mesh uniform_mesh(const MetricGraph& g, double target_width) {
  if (!(target_width > 0.0)) throw std::invalid_argument("uniform_mesh: width must be positive");
  Mesh mesh;
  mesh.subdivisions.reserve(g.edge_count());
  for (const auto& e : g.edges) {
    const auto n = static_cast<int>(std::lround(e.length / target_width));
    mesh.subdivisions.push_back(std::max(2, n));
  }
  return mesh;
}

double lambda1_dense(const FemSystem<double>& sys) { return solve_dense(sys).value; }
double lambda1_sparse(const FemSystem<double>& sys) { return solve_sparse(sys).value; }

double lambda1_on_mesh(const MetricGraph& g, const Mesh& mesh) {
  require_valid(g);
  require_connected(g);
  return solve_on_mesh(g, mesh).value;
}

GeneralizedEigenResult lambda1_metric(const MetricGraph& g, const SpectralOptions& options) {
  require_valid(g);
  require_connected(g);
  if (g.edge_count() == 0) throw std::invalid_argument("lambda1_metric: graph has no edges");

  GeneralizedEigenResult result;
  Mesh mesh = uniform_mesh(g, total_length(g) / std::max(1, options.initial_elements));
  const auto sys_residual = [&](const Mesh& msh, const EigenPair& pair) {
    return relative_residual(assemble<double>(g, msh), pair);
  };

  EigenPair finest;
  Mesh finest_mesh = mesh;
  while (true) {
    finest = solve_on_mesh(g, mesh);
    finest_mesh = mesh;
    result.mesh_sequence.emplace_back(mesh.max_width(g), finest.value);
    const auto& seq = result.mesh_sequence;
    if (seq.size() >= 2) {
      const double coarse = seq[seq.size() - 2].second;
      if (std::abs(coarse - finest.value) < options.target_rel_tol * std::abs(finest.value)) break;
    }
    Mesh next = mesh.refined();
    if (next.dof_count(g) > options.dof_cap) {
      result.capped = true;
      break;
    }
    mesh = std::move(next);
  }

  const auto& seq = result.mesh_sequence;
  result.lambda1 = finest.value;
  result.extrapolated = seq.size() >= 2 ? (4.0 * seq.back().second - seq[seq.size() - 2].second) / 3.0
                                        : finest.value;
  result.residual = sys_residual(finest_mesh, finest);
  return result;
}

double analytic_lambda1(const AnalyticFamily& f) {
  if (!(f.length > 0.0) || f.edges < 1) throw std::invalid_argument("analytic_lambda1: bad family");
  const double len = f.length;
  const double count = f.edges;
  switch (f.kind) {
    case AnalyticFamily::Kind::interval:
      return kPi * kPi / (len * len);
    case AnalyticFamily::Kind::circle:
      return 4.0 * kPi * kPi / (len * len);
    case AnalyticFamily::Kind::flower:
      // one petal is a circle
      if (f.edges == 1) return 4.0 * kPi * kPi / (len * len);
      return kPi * kPi * count * count / (len * len);
    case AnalyticFamily::Kind::star:
      // antisymmetric arm mode vanishing at the centre
      if (f.edges == 1) return kPi * kPi / (len * len);
      return kPi * kPi / (4.0 * len * len);
  }
  throw std::invalid_argument("analytic_lambda1: unknown family");
}

MetricQuantities compute_metric_quantities(const MetricGraph& g, const SpectralOptions& spectral,
                                           const MetricCheegerOptions& cheeger) {
  MetricQuantities q;
  q.total_length = total_length(g);
  q.cheeger = metric_cheeger(g, cheeger);
  q.h = q.cheeger.value;
  q.spectrum = lambda1_metric(g, spectral);
  q.lambda1 = q.spectrum.extrapolated;
  q.lambda1_tolerance = std::max(spectral.target_rel_tol,
                                 std::abs(q.spectrum.extrapolated - q.spectrum.lambda1) /
                                     std::abs(q.spectrum.extrapolated));
  const auto smoothed = smooth_degree_two(g);
  q.edges_smoothed = smoothed.essential_edge_count;
  q.edges_raw = g.edge_count();
  q.reduction_has_loop = has_loop(smoothed.reduced);
  return q;
}

std::vector<BoundReport> nicaise_bounds(const MetricQuantities& q) {
  const double h2 = q.h * q.h;
  const double rel = kMetricBoundRelTolerance + q.lambda1_tolerance;
  std::vector<BoundReport> out;
  for (const auto& [suffix, count, assertable] :
       {std::tuple{".smoothed", q.edges_smoothed, true}, std::tuple{".raw", q.edges_raw, false}}) {
    const double e = static_cast<double>(count);
    const double lower = std::max(h2 / 4.0, kPi * kPi * h2 / (4.0 * e * e));
    const double upper = kPi * kPi * e * e * h2 / 4.0;
    auto lo = make_bound(std::string("nicaise.lower") + suffix, lower, q.lambda1,
                         rel * std::max(lower, q.lambda1), assertable);
    auto hi = make_bound(std::string("nicaise.upper") + suffix, q.lambda1, upper,
                         rel * std::max(upper, q.lambda1), assertable);
    for (auto* r : {&lo, &hi}) {
      r->quantities = {{"h", q.h}, {"lambda1", q.lambda1}, {"E", e}, {"L", q.total_length}};
      out.push_back(std::move(*r));
    }
  }
  return out;
}

std::vector<BoundReport> check_nicaise_bounds(const MetricGraph& g, const SpectralOptions& spectral) {
  return nicaise_bounds(compute_metric_quantities(g, spectral));
}

BoundReport conjecture_bound(const MetricQuantities& q) {
  const double lhs = kPi * kPi * q.h * q.h / 4.0;
  const double rel = kMetricBoundRelTolerance + q.lambda1_tolerance;
  auto r = make_bound("conjecture", lhs, q.lambda1, rel * std::max(lhs, q.lambda1), false);
  r.quantities = {{"h", q.h}, {"lambda1", q.lambda1}, {"L", q.total_length}};
  return r;
}

BoundReport check_conjecture(const MetricGraph& g, const SpectralOptions& spectral) {
  return conjecture_bound(compute_metric_quantities(g, spectral));
}

std::vector<BoundReport> cheeger_length_bounds(const MetricQuantities& q) {
  const double e = static_cast<double>(q.edges_smoothed);
  std::vector<BoundReport> out;
  out.push_back(make_bound("cheeger.lower_2_over_L", 2.0 / q.total_length, q.h, 1e-12 * q.h));
  if (q.reduction_has_loop) {
    out.push_back(not_applicable("cheeger.upper_2E_over_L",
                                 "smoothed graph contains a loop; essential-edge count ambiguous"));
  } else {
    out.push_back(
        make_bound("cheeger.upper_2E_over_L", q.h, 2.0 * e / q.total_length, 1e-12 * q.h));
  }
  for (auto& r : out) r.quantities = {{"h", q.h}, {"E", e}, {"L", q.total_length}};
  return out;
}

}  // namespace cheeger
