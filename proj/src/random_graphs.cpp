#include "cheeger/random_graphs.hpp"

#include <limits>
#include <stdexcept>

#include "cheeger/families.hpp"

namespace cheeger {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::string> vertex_names(int n) {
  std::vector<std::string> out;
  const auto width = std::to_string(std::max(0, n - 1)).size();
  for (int i = 0; i < n; ++i) {
    auto digits = std::to_string(i);
    digits.insert(0, width - digits.size(), '0');
    out.push_back("v" + digits);
  }
  return out;
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed) : engine_(seeded_engine(seed, 0)) {}
SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(seeded_engine(seed, stream)) {}

double SeededRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int SeededRng::integer(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("SeededRng::integer: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection keeps the draw unbiased
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<int>(x % span);
}

DiscreteGraph random_discrete(int vertices, double p, std::uint64_t seed, int retry_cap) {
  if (vertices < 1) throw std::invalid_argument("random_discrete: need at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_discrete: p outside [0, 1]");
  SeededRng rng(seed);
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    DiscreteGraph g;
    g.vertices = vertex_names(vertices);
    for (int u = 0; u < vertices; ++u) {
      for (int v = u + 1; v < vertices; ++v) {
        if (rng.uniform() < p) {
          g.edges.push_back({"e" + std::to_string(g.edges.size() + 1),
                             static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
        }
      }
    }
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_discrete: cannot produce a connected graph within " +
                           std::to_string(retry_cap) + " attempts");
}

MetricGraph random_multigraph(int vertices, int edges, std::uint64_t seed,
                              const MetricEnsembleOptions& options, int retry_cap) {
  if (vertices < 1 || edges < vertices - 1) {
    throw std::invalid_argument("random_multigraph: too few edges to connect the vertices");
  }
  SeededRng rng(seed);
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    MetricGraph g;
    g.vertices = vertex_names(vertices);
    for (int i = 0; i < edges; ++i) {
      const auto u = static_cast<std::size_t>(rng.integer(0, vertices - 1));
      const auto v = static_cast<std::size_t>(rng.integer(0, vertices - 1));
      g.edges.push_back({"e" + std::to_string(i + 1), u, v,
                         rng.uniform(options.min_length, options.max_length)});
    }
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_multigraph: cannot produce a connected graph within " +
                           std::to_string(retry_cap) + " attempts");
}

MetricGraph random_metric(std::uint64_t seed, const MetricEnsembleOptions& options,
                          int retry_cap) {
  if (options.max_edges < 3) throw std::invalid_argument("random_metric: max_edges must be >= 3");
  SeededRng rng(seed, 1);
  const auto draw_lengths = [&](MetricGraph g) {
    for (auto& e : g.edges) e.length = rng.uniform(options.min_length, options.max_length);
    return g;
  };
  switch (rng.integer(0, 4)) {
    case 0:
      return draw_lengths(cycle_graph(rng.integer(2, options.max_edges)));
    case 1:
      return draw_lengths(star_graph(rng.integer(2, options.max_edges)));
    case 2:
      return draw_lengths(flower_graph(rng.integer(2, options.max_edges)));
    case 3: {
      const int m = rng.integer(1, (options.max_edges - 1) / 2);
      return draw_lengths(dumbbell_graph(m, 2.0, 0.5));
    }
    default: {
      const int v = rng.integer(2, 4);
      const int e = rng.integer(std::max(v - 1, 2), options.max_edges);
      return random_multigraph(v, e, seed ^ 0x9e3779b97f4a7c15ULL, options, retry_cap);
    }
  }
}

}  // namespace cheeger
