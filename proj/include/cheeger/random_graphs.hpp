#pragma once

#include <cstdint>
#include <random>

#include "cheeger/graph.hpp"

namespace cheeger {

/// Portable generator: mt19937_64 with hand-rolled conversions, so a seed
/// produces the same graph with every standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);
  SeededRng(std::uint64_t seed, std::uint64_t stream);

  double uniform();                          // [0, 1)
  double uniform(double lo, double hi);      // [lo, hi)
  int integer(int lo, int hi);               // [lo, hi] inclusive
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kRandomRetryCap = 1000;

/// Connected G(V, p) by rejection sampling.
DiscreteGraph random_discrete(int vertices, double p, std::uint64_t seed,
                              int retry_cap = kRandomRetryCap);

struct MetricEnsembleOptions {
  double min_length = 0.2;
  double max_length = 2.0;
  int max_edges = 6;
};

/// Picks a topology from {cycle, star, flower, dumbbell, random multigraph}
/// and draws every length uniformly from [min_length, max_length).
MetricGraph random_metric(std::uint64_t seed, const MetricEnsembleOptions& options = {},
                          int retry_cap = kRandomRetryCap);

/// Connected random multigraph with `edges` edges (loops and parallels allowed).
MetricGraph random_multigraph(int vertices, int edges, std::uint64_t seed,
                              const MetricEnsembleOptions& options = {},
                              int retry_cap = kRandomRetryCap);

}  // namespace cheeger
