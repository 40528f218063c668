// Brute-force check of metric_cheeger. Builds the cut pieces explicitly,
// tries every two-coloring and every grid placement of the cut points, and
// measures S by adding up fragment lengths.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <stdexcept>

#include "cheeger/metric_cheeger.hpp"
#include "disjoint_sets.hpp"

namespace cheeger {

namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Every sum obtained by picking one value from each list.
std::vector<double> all_sums(const std::vector<std::vector<double>>& choices, std::size_t begin,
                             std::size_t end) {
  std::vector<double> sums{0.0};
  for (std::size_t i = begin; i < end; ++i) {
    std::vector<double> next;
    next.reserve(sums.size() * choices[i].size());
    for (const double a : sums) {
      for (const double b : choices[i]) next.push_back(a + b);
    }
    sums = sorted_unique(std::move(next));
  }
  return sums;
}

// max over attainable s of min(s, L - s), by meeting in the middle.
double best_balance(const std::vector<std::vector<double>>& choices, double total) {
  const std::size_t half = choices.size() / 2;
  const auto left = all_sums(choices, 0, half);
  const auto right = all_sums(choices, half, choices.size());
  double best = 0.0;
  for (const double a : left) {
    const auto it = std::lower_bound(right.begin(), right.end(), total / 2.0 - a);
    for (auto jt : {it, it == right.begin() ? it : std::prev(it)}) {
      if (jt == right.end()) continue;
      const double s = a + *jt;
      best = std::max(best, std::min(s, total - s));
    }
  }
  return best;
}

}  // namespace

double metric_cheeger_grid_oracle(const MetricGraph& g, int grid_n) {
  require_valid(g);
  require_connected(g);
  const std::size_t m = g.edge_count();
  if (m == 0) throw std::invalid_argument("grid oracle: graph has no edges");
  if (m > kGridOracleMaxEdges) throw std::length_error("grid oracle: too many edges");
  if (grid_n < 1 || grid_n > kGridOracleMaxResolution) {
    throw std::length_error("grid oracle: grid resolution out of range");
  }

  const double total = total_length(g);
  const auto grid_point = [&](std::size_t e, int j) {
    return g.edges[e].length * (static_cast<double>(j) / grid_n);
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> cuts(m, 0);
  while (true) {
    // odometer over {0,1,2}^m
    std::size_t pos = 0;
    while (pos < m && cuts[pos] == 2) cuts[pos++] = 0;
    if (pos == m) break;
    ++cuts[pos];

    // Nodes: vertices, then the cuts+1 fragments of every edge.
    const std::size_t nv = g.vertex_count();
    std::vector<std::vector<std::size_t>> fragment_node(m);
    std::size_t nodes = nv;
    for (std::size_t e = 0; e < m; ++e) {
      for (int j = 0; j <= cuts[e]; ++j) fragment_node[e].push_back(nodes++);
    }
    DisjointSets sets(nodes);
    for (std::size_t e = 0; e < m; ++e) {
      sets.unite(g.edges[e].u, fragment_node[e].front());
      sets.unite(g.edges[e].v, fragment_node[e].back());
    }
    std::vector<std::size_t> label(nodes, nodes);
    std::size_t components = 0;
    for (std::size_t x = 0; x < nodes; ++x) {
      const auto r = sets.find(x);
      if (label[r] == nodes) label[r] = components++;
      label[x] = label[r];
    }

    int k = 0;
    for (const int c : cuts) k += c;

    for (std::uint64_t coloring = 0; coloring < (std::uint64_t{1} << components); ++coloring) {
      const auto in_s = [&](std::size_t node) { return ((coloring >> label[node]) & 1u) != 0; };

      bool effective = true;
      for (std::size_t e = 0; e < m && effective; ++e) {
        for (int j = 0; j < cuts[e]; ++j) {
          if (in_s(fragment_node[e][j]) == in_s(fragment_node[e][j + 1])) {
            effective = false;
            break;
          }
        }
      }
      if (!effective) continue;

      std::vector<std::vector<double>> choices(m);
      for (std::size_t e = 0; e < m; ++e) {
        const auto& f = fragment_node[e];
        const double len = g.edges[e].length;
        std::vector<double> values;
        if (cuts[e] == 0) {
          values.push_back(in_s(f[0]) ? len : 0.0);
        } else if (cuts[e] == 1) {
          for (int j = 0; j <= grid_n; ++j) {
            const double t = grid_point(e, j);
            values.push_back((in_s(f[0]) ? t : 0.0) + (in_s(f[1]) ? len - t : 0.0));
          }
        } else {
          for (int j1 = 0; j1 <= grid_n; ++j1) {
            for (int j2 = j1; j2 <= grid_n; ++j2) {
              const double t1 = grid_point(e, j1);
              const double t2 = grid_point(e, j2);
              values.push_back((in_s(f[0]) ? t1 : 0.0) + (in_s(f[1]) ? t2 - t1 : 0.0) +
                               (in_s(f[2]) ? len - t2 : 0.0));
            }
          }
        }
        choices[e] = sorted_unique(std::move(values));
      }

      const double d = best_balance(choices, total);
      if (d > 0.0) best = std::min(best, static_cast<double>(k) / d);
    }
  }
  return best;
}

}  // namespace cheeger
