#include "cheeger/discrete_spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

namespace cheeger {

namespace {

using Mask = std::uint32_t;

// Lexicographic order of the sorted index lists encoded by two distinct masks.
bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  const int low = std::countr_zero(diff);
  // The list holding the first differing index is smaller unless the other
  // list ends right there.
  const Mask above = ~((Mask{2} << low) - 1);
  if (a & (Mask{1} << low)) return (b & above) != 0;
  return (a & above) == 0;
}

std::vector<std::size_t> mask_to_indices(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i);
  }
  return out;
}

}  // namespace

double fiedler_value(const DiscreteGraph& g) {
  require_valid(g);
  if (g.vertex_count() < 2) throw std::invalid_argument("fiedler_value: need V >= 2");
  require_connected(g);
  const auto spectrum = symmetric_eigenvalues(laplacian_matrix<double>(g));
  return spectrum(1);
}

DiscreteCheegerResult discrete_cheeger(const DiscreteGraph& g) {
  require_valid(g);
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("discrete_cheeger: need V >= 2");
  if (n > kDiscreteCheegerMaxVertices) {
    throw std::length_error("discrete_cheeger: V = " + std::to_string(n) +
                            " exceeds the enumeration guard of " +
                            std::to_string(kDiscreteCheegerMaxVertices));
  }
  require_connected(g);

  std::vector<std::vector<std::int64_t>> mult(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : g.edges) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  std::vector<std::int64_t> deg(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) deg[x] += mult[x][y];
  }

  // Gray-code walk over the subsets of {1..n-1}; vertex 0 is always in S.
  Mask set = 1;
  std::int64_t size = 1;
  std::int64_t boundary = deg[0];
  std::vector<std::int64_t> into_set(mult[0].begin(), mult[0].end());

  const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  bool have = false;
  Rational best;
  Mask best_set = 0;

  auto consider = [&] {
    if (set == full) return;
    const auto small = std::min<std::int64_t>(size, static_cast<std::int64_t>(n) - size);
    const Rational r{boundary, small};
    if (!have || r < best || (r == best && lex_less(set, best_set))) {
      have = true;
      best = r;
      best_set = set;
    }
  };

  consider();
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto x = static_cast<std::size_t>(std::countr_zero(i)) + 1;
    const Mask bit = Mask{1} << x;
    if (set & bit) {
      boundary += 2 * into_set[x] - deg[x];
      for (std::size_t y = 0; y < n; ++y) into_set[y] -= mult[x][y];
      set &= ~bit;
      --size;
    } else {
      boundary += deg[x] - 2 * into_set[x];
      for (std::size_t y = 0; y < n; ++y) into_set[y] += mult[x][y];
      set |= bit;
      ++size;
    }
    consider();
  }

  const auto divisor = std::gcd(best.num, best.den);
  if (divisor > 1) best = {best.num / divisor, best.den / divisor};
  return {best, mask_to_indices(best_set)};
}

std::vector<BoundReport> check_fiedler_bounds(const DiscreteGraph& g) {
  require_valid(g);
  const auto n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("check_fiedler_bounds: need V >= 2");
  require_connected(g);
  if (n == 2) {
    return {not_applicable("fiedler.lower", "V = 2 is outside the theorem"),
            not_applicable("fiedler.upper", "V = 2 is outside the theorem")};
  }
  const double e = static_cast<double>(edge_connectivity(g));
  const double lambda = fiedler_value(g);
  const double lower = 2.0 * e * (1.0 - std::cos(std::numbers::pi / static_cast<double>(n)));

  std::vector<BoundReport> out{make_bound("fiedler.lower", lower, lambda, kDiscreteBoundTolerance)};
  if (has_parallel_edges(g)) {
    out.push_back(not_applicable("fiedler.upper", "multigraph: upper bound needs a simple graph"));
  } else if (g.edge_count() == n * (n - 1) / 2) {
    // K_n has lambda1 = n > n - 1 = e
    out.push_back(not_applicable("fiedler.upper", "complete graph is outside the theorem"));
  } else {
    out.push_back(make_bound("fiedler.upper", lambda, e, kDiscreteBoundTolerance));
  }
  for (auto& r : out) {
    r.quantities = {{"edge_connectivity", e},
                    {"lambda1", lambda},
                    {"V", static_cast<double>(n)}};
  }
  return out;
}

std::vector<BoundReport> check_alon_milman(const DiscreteGraph& g) {
  const auto cheeger = discrete_cheeger(g);
  const double h = cheeger.value.value();
  const double lambda = fiedler_value(g);
  const auto deg = degrees(g);
  const double deg_max = static_cast<double>(*std::max_element(deg.begin(), deg.end()));

  std::vector<BoundReport> out{
      make_bound("alon_milman.lower", h * h / (2.0 * deg_max), lambda, kDiscreteBoundTolerance),
      make_bound("alon_milman.upper", lambda, 2.0 * h, kDiscreteBoundTolerance)};
  for (auto& r : out) {
    r.quantities = {{"h", h}, {"lambda1", lambda}, {"deg_max", deg_max}};
  }
  return out;
}

}  // namespace cheeger
