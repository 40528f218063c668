#include "cheeger/metric_cheeger.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "disjoint_sets.hpp"

namespace cheeger {

namespace {

constexpr double kTieTolerance = 1e-12;

Side flip(Side s) { return s == Side::in_s ? Side::in_complement : Side::in_s; }

// Fragment i of a cut edge has the color of the edge's first endpoint, flipped i times.
Side fragment_side(Side first, std::size_t i) { return (i % 2 == 0) ? first : flip(first); }

// Calls visit(pattern) for every pattern with entries in [0, cap] summing to
// `total`, in lexicographic order. Stops early when visit returns false.
template <typename Visit>
bool for_each_pattern(std::vector<int>& pattern, std::size_t pos, int remaining, int cap,
                      Visit& visit) {
  const std::size_t m = pattern.size();
  if (pos == m) return remaining == 0 ? visit(pattern) : true;
  const int slots_after = static_cast<int>(m - pos - 1);
  const int lo = std::max(0, remaining - cap * slots_after);
  const int hi = std::min(cap, remaining);
  for (int c = lo; c <= hi; ++c) {
    pattern[pos] = c;
    if (!for_each_pattern(pattern, pos + 1, remaining - c, cap, visit)) return false;
  }
  pattern[pos] = 0;
  return true;
}

// Cut positions on one edge that put `amount` of its length into S.
std::vector<double> place_cuts(double length, int cuts, Side first, double amount) {
  std::vector<double> t;
  if (cuts % 2 == 1) {
    t.push_back(first == Side::in_s ? amount : length - amount);
  } else if (first == Side::in_s) {
    // S on both ends, complement in the middle
    t.push_back(amount / 2.0);
    t.push_back(length - amount / 2.0);
  } else {
    const double start = (length - amount) / 2.0;
    t.push_back(start);
    t.push_back(start + amount);
  }
  // Extra cuts beyond the first one or two sit on top of the last cut as
  // zero-length fragments.
  while (static_cast<int>(t.size()) < cuts) t.push_back(t.back());
  return t;
}

}  // namespace

ComponentStructure components_after_cuts(const MetricGraph& g,
                                         std::span<const int> cuts_per_edge) {
  if (cuts_per_edge.size() != g.edge_count()) {
    throw std::invalid_argument("components_after_cuts: one multiplicity per edge expected");
  }
  int total = 0;
  for (const int c : cuts_per_edge) {
    if (c < 0) throw std::invalid_argument("components_after_cuts: negative multiplicity");
    total += c;
  }
  if (total == 0) throw std::invalid_argument("components_after_cuts: at least one cut needed");

  const auto n = g.vertex_count();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (cuts_per_edge[i] == 0) sets.unite(g.edges[i].u, g.edges[i].v);
  }

  ComponentStructure s;
  s.vertex_component.assign(n, 0);
  std::vector<std::size_t> index_of_root(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto root = sets.find(x);
    if (index_of_root[root] == n) {
      index_of_root[root] = s.components.size();
      s.components.emplace_back();
    }
    s.vertex_component[x] = index_of_root[root];
    s.components[index_of_root[root]].vertices.push_back(x);
  }
  s.vertex_component_count = s.components.size();

  s.fragment_component.resize(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges[i];
    const auto cu = s.vertex_component[e.u];
    const auto cv = s.vertex_component[e.v];
    auto& frags = s.fragment_component[i];
    const int c = cuts_per_edge[i];
    if (c == 0) {
      frags.push_back(cu);
      s.components[cu].whole_edges.push_back(i);
      s.components[cu].fixed_measure += e.length;
      continue;
    }
    frags.push_back(cu);
    s.components[cu].fragments.push_back({i, 0});
    for (int j = 1; j < c; ++j) {
      frags.push_back(s.components.size());
      CutComponent inner;
      inner.fragments.push_back({i, static_cast<std::size_t>(j)});
      s.components.push_back(std::move(inner));
    }
    frags.push_back(cv);
    s.components[cv].fragments.push_back({i, static_cast<std::size_t>(c)});
  }
  return s;
}

std::vector<Side> effective_coloring(const MetricGraph& g, const ComponentStructure& s,
                                     std::span<const int> cuts_per_edge) {
  const std::size_t nv = s.vertex_component_count;
  // Parity constraints between vertex components: an odd number of cuts on an
  // edge flips the side between its endpoints, an even number keeps it.
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj(nv);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const int c = cuts_per_edge[i];
    if (c == 0) continue;
    const auto cu = s.vertex_component[g.edges[i].u];
    const auto cv = s.vertex_component[g.edges[i].v];
    const bool odd = c % 2 == 1;
    if (cu == cv) {
      if (odd) return {};
      continue;
    }
    adj[cu].emplace_back(cv, odd);
    adj[cv].emplace_back(cu, odd);
  }

  std::vector<int> color(nv, -1);
  for (std::size_t start = 0; start < nv; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto& [y, odd] : adj[x]) {
        const int want = color[x] ^ static_cast<int>(odd);
        if (color[y] == -1) {
          color[y] = want;
          queue.push_back(y);
        } else if (color[y] != want) {
          return {};
        }
      }
    }
  }

  std::vector<Side> sides(s.components.size(), Side::in_s);
  for (std::size_t c = 0; c < nv; ++c) sides[c] = color[c] == 0 ? Side::in_s : Side::in_complement;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& frags = s.fragment_component[i];
    const Side first = sides[frags.front()];
    for (std::size_t j = 1; j + 1 < frags.size(); ++j) sides[frags[j]] = fragment_side(first, j);
  }
  return sides;
}

ConfigurationValue evaluate_configuration(const MetricGraph& g, const CutConfiguration& config) {
  const auto structure = components_after_cuts(g, config.cuts_per_edge);
  if (config.coloring.size() != structure.components.size()) {
    throw std::invalid_argument("evaluate_configuration: coloring size mismatch");
  }

  ConfigurationValue out;
  int k = 0;
  double slider_width = 0.0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const int c = config.cuts_per_edge[i];
    if (c == 0) continue;
    k += c;
    slider_width += g.edges[i].length;
    const auto& frags = structure.fragment_component[i];
    for (std::size_t j = 0; j + 1 < frags.size(); ++j) {
      if (config.coloring[frags[j]] == config.coloring[frags[j + 1]]) {
        out.status = ConfigurationStatus::ineffective;
        return out;
      }
    }
  }

  double fixed_in_s = 0.0;
  for (std::size_t c = 0; c < structure.components.size(); ++c) {
    if (config.coloring[c] == Side::in_s) fixed_in_s += structure.components[c].fixed_measure;
  }

  const double total = total_length(g);
  out.a_min = fixed_in_s;
  out.a_max = fixed_in_s + slider_width;
  out.s_star = std::clamp(total / 2.0, out.a_min, out.a_max);
  out.d_star = std::min(out.s_star, total - out.s_star);
  if (!(out.d_star > 0.0)) {
    out.status = ConfigurationStatus::infeasible;
    return out;
  }
  out.status = ConfigurationStatus::ok;
  out.ratio = static_cast<double>(k) / out.d_star;
  return out;
}

MetricCheegerResult metric_cheeger(const MetricGraph& g, const MetricCheegerOptions& options) {
  require_valid(g);
  require_connected(g);
  const std::size_t m = g.edge_count();
  if (m == 0) throw std::invalid_argument("metric_cheeger: graph has no edges");
  if (m > options.max_edges) {
    throw std::length_error("metric_cheeger: " + std::to_string(m) +
                            " edges exceed the enumeration guard of " +
                            std::to_string(options.max_edges));
  }
  if (options.max_cuts_per_edge < 1) {
    throw std::invalid_argument("metric_cheeger: max_cuts_per_edge must be >= 1");
  }

  const double total = total_length(g);
  double best = std::numeric_limits<double>::infinity();
  CutConfiguration best_config;
  ConfigurationValue best_value;

  const int k_limit = options.max_cuts_per_edge * static_cast<int>(m);
  std::vector<int> pattern(m, 0);
  for (int k = 1; k <= k_limit; ++k) {
    // With |S| <= L/2 every k-cut ratio is at least 2k/L.
    if (2.0 * k / total > best * (1.0 + kTieTolerance)) break;
    auto visit = [&](const std::vector<int>& cuts) {
      const auto structure = components_after_cuts(g, cuts);
      auto coloring = effective_coloring(g, structure, cuts);
      if (coloring.empty()) return true;
      CutConfiguration config{cuts, std::move(coloring), k};
      const auto value = evaluate_configuration(g, config);
      if (value.status == ConfigurationStatus::ok && value.ratio < best * (1.0 - kTieTolerance)) {
        best = value.ratio;
        best_config = std::move(config);
        best_value = value;
      }
      return true;
    };
    for_each_pattern(pattern, 0, k, options.max_cuts_per_edge, visit);
  }
  if (best_config.k == 0) {
    throw std::logic_error("metric_cheeger: no feasible cut configuration");
  }

  MetricCheegerResult result;
  result.value = best;
  result.k = best_config.k;
  result.attained_measure = best_value.d_star;
  result.total_length = total;
  result.structure = components_after_cuts(g, best_config.cuts_per_edge);

  // Hand the slack s* - A_min to the sliders in edge order.
  double remaining = best_value.s_star - best_value.a_min;
  for (std::size_t i = 0; i < m; ++i) {
    const int c = best_config.cuts_per_edge[i];
    if (c == 0) continue;
    const double len = g.edges[i].length;
    const double amount = std::clamp(remaining, 0.0, len);
    remaining -= amount;
    const Side first = best_config.coloring[result.structure.fragment_component[i].front()];
    for (const double t : place_cuts(len, c, first, amount)) {
      result.cuts.push_back({g.edges[i].id, i, t});
    }
  }
  result.configuration = std::move(best_config);
  return result;
}

}  // namespace cheeger
