#pragma once

#include <Eigen/Sparse>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cheeger/bound_report.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/metric_cheeger.hpp"

namespace cheeger {

/// Piecewise-linear mesh: edge e is split into subdivisions[e] equal elements.
/// Degrees of freedom: one per vertex, then subdivisions[e] - 1 interior nodes
/// per edge, in edge order.
struct Mesh {
  std::vector<int> subdivisions;

  std::size_t dof_count(const MetricGraph& g) const;
  double max_width(const MetricGraph& g) const;
  Mesh refined() const;
};

/// n_e = max(2, round(length / target_width)).
Mesh uniform_mesh(const MetricGraph& g, double target_width);

template <typename Scalar = double>
struct FemSystem {
  Eigen::SparseMatrix<Scalar> stiffness;
  Eigen::SparseMatrix<Scalar> mass;
};

/// Stiffness and mass matrices of the standard Laplacian. Continuity comes
/// from shared vertex unknowns; the Kirchhoff condition is natural in the weak
/// form and needs no extra rows.
template <typename Scalar = double>
FemSystem<Scalar> assemble(const MetricGraph& g, const Mesh& mesh) {
  if (mesh.subdivisions.size() != g.edge_count()) {
    throw std::invalid_argument("assemble: mesh does not match graph");
  }
  const auto dofs = static_cast<Eigen::Index>(mesh.dof_count(g));
  std::vector<Eigen::Triplet<Scalar>> k_entries;
  std::vector<Eigen::Triplet<Scalar>> m_entries;
  Eigen::Index next_interior = static_cast<Eigen::Index>(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges[i];
    const int n = mesh.subdivisions[i];
    if (n < 2) throw std::invalid_argument("assemble: every edge needs at least 2 elements");
    const Scalar w = Scalar(e.length) / Scalar(n);
    const Scalar kd = Scalar(1) / w;
    const Scalar md = w / Scalar(6);
    // nodes along the edge: u, interior..., v
    auto node = [&](int j) -> Eigen::Index {
      if (j == 0) return static_cast<Eigen::Index>(e.u);
      if (j == n) return static_cast<Eigen::Index>(e.v);
      return next_interior + j - 1;
    };
    for (int j = 0; j < n; ++j) {
      const auto a = node(j);
      const auto b = node(j + 1);
      k_entries.emplace_back(a, a, kd);
      k_entries.emplace_back(b, b, kd);
      k_entries.emplace_back(a, b, -kd);
      k_entries.emplace_back(b, a, -kd);
      m_entries.emplace_back(a, a, Scalar(2) * md);
      m_entries.emplace_back(b, b, Scalar(2) * md);
      m_entries.emplace_back(a, b, md);
      m_entries.emplace_back(b, a, md);
    }
    next_interior += n - 1;
  }
  FemSystem<Scalar> sys;
  sys.stiffness.resize(dofs, dofs);
  sys.mass.resize(dofs, dofs);
  sys.stiffness.setFromTriplets(k_entries.begin(), k_entries.end());
  sys.mass.setFromTriplets(m_entries.begin(), m_entries.end());
  return sys;
}

/// Meshes up to this many unknowns use the dense reduction; larger ones use
/// shift-and-invert subspace iteration.
inline constexpr std::size_t kDenseDofLimit = 500;

/// Second-smallest eigenvalue of K u = lambda M u via Cholesky of M and a
/// dense symmetric eigensolve.
double lambda1_dense(const FemSystem<double>& sys);

/// Same eigenvalue via sparse LDLT of K with one unknown grounded and block inverse iteration
/// M-orthogonal to the constants, with Rayleigh-Ritz on each step.
double lambda1_sparse(const FemSystem<double>& sys);

double lambda1_on_mesh(const MetricGraph& g, const Mesh& mesh);

struct SpectralOptions {
  double target_rel_tol = 1e-6;
  std::size_t dof_cap = 4000;
  int initial_elements = 32;  // across the whole graph
};

struct GeneralizedEigenResult {
  double lambda1 = 0.0;  // finest mesh
  std::vector<std::pair<double, double>> mesh_sequence;  // (max element width, lambda1)
  double extrapolated = 0.0;
  double residual = 0.0;
  bool capped = false;  // DOF cap reached before the tolerance
};

/// Refines by halving every element until successive lambda1 values agree to
/// target_rel_tol, then Richardson-extrapolates the last two levels.
GeneralizedEigenResult lambda1_metric(const MetricGraph& g, const SpectralOptions& options = {});

struct AnalyticFamily {
  enum class Kind { interval, circle, flower, star };
  Kind kind = Kind::interval;
  int edges = 1;        // flower petals or star arms
  double length = 1.0;  // total length, or arm length for a star
};

/// Closed-form lambda1 for equilateral families.
double analytic_lambda1(const AnalyticFamily& family);

/// Everything the metric inequalities need, computed once per graph.
struct MetricQuantities {
  double total_length = 0.0;
  double h = 0.0;
  double lambda1 = 0.0;
  double lambda1_tolerance = 0.0;  // relative
  std::size_t edges_smoothed = 0;
  std::size_t edges_raw = 0;
  bool reduction_has_loop = false;
  MetricCheegerResult cheeger;
  GeneralizedEigenResult spectrum;
};

MetricQuantities compute_metric_quantities(const MetricGraph& g,
                                           const SpectralOptions& spectral = {},
                                           const MetricCheegerOptions& cheeger = {});

inline constexpr double kMetricBoundRelTolerance = 1e-6;

/// max{h^2/4, pi^2 h^2 / (4E^2)} <= lambda1 <= pi^2 E^2 h^2 / 4, evaluated
/// with E after smoothing (assertable) and with the raw edge count (logged).
std::vector<BoundReport> nicaise_bounds(const MetricQuantities& q);
std::vector<BoundReport> check_nicaise_bounds(const MetricGraph& g,
                                              const SpectralOptions& spectral = {});

/// pi^2 h^2 / 4 <= lambda1. Never assertable.
BoundReport conjecture_bound(const MetricQuantities& q);
BoundReport check_conjecture(const MetricGraph& g, const SpectralOptions& spectral = {});

/// 2/L <= h, and h <= 2E/L when the smoothed graph is loop-free.
std::vector<BoundReport> cheeger_length_bounds(const MetricQuantities& q);

}  // namespace cheeger
