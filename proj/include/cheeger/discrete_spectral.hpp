#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cheeger/bound_report.hpp"
#include "cheeger/graph.hpp"

namespace cheeger {

template <typename Scalar>
using SymmetricMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// L = D - A. Parallel edges count with multiplicity in both D and A, so every
/// row sums to exactly zero.
template <typename Scalar = double>
SymmetricMatrix<Scalar> laplacian_matrix(const DiscreteGraph& g) {
  require_valid(g);
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  SymmetricMatrix<Scalar> lap = SymmetricMatrix<Scalar>::Zero(n, n);
  for (const auto& e : g.edges) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    lap(u, u) += Scalar(1);
    lap(v, v) += Scalar(1);
    lap(u, v) -= Scalar(1);
    lap(v, u) -= Scalar(1);
  }
  return lap;
}

/// All eigenvalues in ascending order. Only the lower triangle is read.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> symmetric_eigenvalues(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("symmetric_eigenvalues: need a nonempty square matrix");
  }
  if (!m.allFinite()) throw std::invalid_argument("symmetric_eigenvalues: non-finite entry");
  Dense lower = m.template triangularView<Eigen::Lower>();
  Dense sym = lower.template selfadjointView<Eigen::Lower>();
  Eigen::SelfAdjointEigenSolver<Dense> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

/// Second-smallest Laplacian eigenvalue. The zero mode is dropped by index.
double fiedler_value(const DiscreteGraph& g);

/// Exact nonnegative fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
};

struct DiscreteCheegerResult {
  Rational value;
  // sorted vertex indices of S; always contains vertex 0
  std::vector<std::size_t> witness;
};

inline constexpr std::size_t kDiscreteCheegerMaxVertices = 24;

/// min |dS| / min(|S|, |S^c|) over vertex sets, by enumerating the sets that
/// contain the first vertex. Ties go to the lexicographically smallest set.
DiscreteCheegerResult discrete_cheeger(const DiscreteGraph& g);

/// Edge-connectivity sandwich 2e(1 - cos(pi/V)) <= lambda1 <= e, as a lower
/// and an upper report. V = 2 is reported not-applicable. The upper bound
/// needs a simple graph that is not complete (K_n has lambda1 = n > n - 1);
/// elsewhere it is reported not-applicable.
std::vector<BoundReport> check_fiedler_bounds(const DiscreteGraph& g);

/// h^2 / (2 deg_max) <= lambda1 <= 2h, as a lower and an upper report.
std::vector<BoundReport> check_alon_milman(const DiscreteGraph& g);

inline constexpr double kDiscreteBoundTolerance = 1e-9;

}  // namespace cheeger
