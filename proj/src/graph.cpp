#include "cheeger/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "disjoint_sets.hpp"

namespace cheeger {

namespace {

template <typename Graph>
void check_common(const Graph& g, std::vector<std::string>& out) {
  if (g.vertices.empty()) out.emplace_back("graph has no vertices");
  std::set<std::string> seen;
  for (const auto& name : g.vertices) {
    if (!seen.insert(name).second) out.push_back("duplicate vertex id '" + name + "'");
  }
  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.u >= g.vertices.size() || e.v >= g.vertices.size()) {
      out.push_back("edge '" + e.id + "' references an undeclared vertex");
    }
    if (!e.id.empty() && !edge_ids.insert(e.id).second) {
      out.push_back("duplicate edge id '" + e.id + "'");
    }
  }
}

template <typename Graph>
std::size_t count_components(const Graph& g) {
  DisjointSets sets(g.vertices.size());
  for (const auto& e : g.edges) sets.unite(e.u, e.v);
  return sets.count();
}

template <typename Graph>
void throw_if_invalid(const Graph& g) {
  const auto report = validate(g);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << "invalid graph:";
  for (const auto& v : report.violations) msg << ' ' << v << ';';
  throw std::invalid_argument(msg.str());
}

template <typename Graph>
void throw_if_disconnected(const Graph& g) {
  const auto n = count_components(g);
  if (n != 1) {
    throw std::invalid_argument("graph is disconnected (" + std::to_string(n) +
                                " connected components)");
  }
}

// Disconnected after dropping the edges flagged in `removed`?
bool disconnected_without(const DiscreteGraph& g, const std::vector<bool>& removed) {
  DisjointSets sets(g.vertex_count());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!removed[i]) sets.unite(g.edges[i].u, g.edges[i].v);
  }
  return sets.count() > 1;
}

// Visits every k-subset of {0..n-1} in lexicographic order until `visit` returns true.
template <typename Visit>
bool any_subset_of_size(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Edmonds-Karp on a dense capacity matrix.
int max_flow(std::vector<std::vector<int>> cap, std::size_t s, std::size_t t) {
  const std::size_t n = cap.size();
  int flow = 0;
  std::vector<std::size_t> parent(n);
  while (true) {
    std::fill(parent.begin(), parent.end(), n);
    parent[s] = s;
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && parent[t] == n) {
      const auto x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < n; ++y) {
        if (parent[y] == n && cap[x][y] > 0) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (parent[t] == n) return flow;
    int push = std::numeric_limits<int>::max();
    for (auto y = t; y != s; y = parent[y]) push = std::min(push, cap[parent[y]][y]);
    for (auto y = t; y != s; y = parent[y]) {
      cap[parent[y]][y] -= push;
      cap[y][parent[y]] += push;
    }
    flow += push;
  }
}

void require_edge_connectivity_domain(const DiscreteGraph& g) {
  require_valid(g);
  if (g.vertex_count() < 2) {
    throw std::invalid_argument("edge connectivity needs at least two vertices");
  }
  require_connected(g);
}

}  // namespace

ValidationReport validate(const DiscreteGraph& g) {
  ValidationReport report;
  check_common(g, report.violations);
  for (const auto& e : g.edges) {
    if (e.u == e.v) {
      report.violations.push_back("edge '" + e.id + "': loop forbidden on discrete side");
    }
  }
  return report;
}

ValidationReport validate(const MetricGraph& g) {
  ValidationReport report;
  check_common(g, report.violations);
  for (const auto& e : g.edges) {
    if (!std::isfinite(e.length)) {
      report.violations.push_back("edge '" + e.id + "': non-finite length");
    } else if (e.length <= 0.0) {
      report.violations.push_back("edge '" + e.id + "': nonpositive length");
    }
  }
  if (report.ok() && !std::isfinite(total_length(g))) {
    report.violations.emplace_back("total length is not finite");
  }
  return report;
}

void require_valid(const DiscreteGraph& g) { throw_if_invalid(g); }
void require_valid(const MetricGraph& g) { throw_if_invalid(g); }

std::size_t component_count(const DiscreteGraph& g) { return count_components(g); }
std::size_t component_count(const MetricGraph& g) { return count_components(g); }
bool is_connected(const DiscreteGraph& g) { return count_components(g) == 1; }
bool is_connected(const MetricGraph& g) { return count_components(g) == 1; }
void require_connected(const DiscreteGraph& g) { throw_if_disconnected(g); }
void require_connected(const MetricGraph& g) { throw_if_disconnected(g); }

std::vector<std::size_t> degrees(const DiscreteGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const auto& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::size_t> degrees(const MetricGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const auto& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

double total_length(const MetricGraph& g) {
  double sum = 0.0;
  for (const auto& e : g.edges) sum += e.length;
  return sum;
}

bool has_loop(const MetricGraph& g) {
  return std::any_of(g.edges.begin(), g.edges.end(),
                     [](const MetricEdge& e) { return e.is_loop(); });
}

bool has_parallel_edges(const DiscreteGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : g.edges) {
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return true;
  }
  return false;
}

SmoothingResult smooth_degree_two(const MetricGraph& g) {
  require_valid(g);
  require_connected(g);

  // Work on a mutable edge list; removed vertices stay in `alive` = false.
  std::vector<MetricEdge> edges = g.edges;
  std::vector<std::vector<std::string>> absorbed(edges.size());
  std::vector<bool> alive(g.vertex_count(), true);

  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.vertices[a] > g.vertices[b];
  });

  auto suppressible = [&](std::size_t x, std::size_t& first, std::size_t& second) {
    std::vector<std::size_t> incident;
    std::size_t deg = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (e.u == x) ++deg;
      if (e.v == x) ++deg;
      if (e.u == x || e.v == x) incident.push_back(i);
    }
    if (deg != 2 || incident.size() != 2) return false;
    first = incident[0];
    second = incident[1];
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto x : order) {
      std::size_t a = 0, b = 0;
      if (!alive[x] || !suppressible(x, a, b)) continue;
      // a < b in edge-list order; the merged edge takes a's slot.
      const auto far_a = edges[a].u == x ? edges[a].v : edges[a].u;
      const auto far_b = edges[b].u == x ? edges[b].v : edges[b].u;
      MetricEdge merged{edges[a].id + "+" + edges[b].id, far_a, far_b,
                        edges[a].length + edges[b].length};
      auto names = absorbed[a];
      names.push_back(g.vertices[x]);
      names.insert(names.end(), absorbed[b].begin(), absorbed[b].end());
      edges[a] = merged;
      absorbed[a] = std::move(names);
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(b));
      absorbed.erase(absorbed.begin() + static_cast<std::ptrdiff_t>(b));
      alive[x] = false;
      changed = true;
      break;
    }
  }

  SmoothingResult result;
  std::vector<std::size_t> remap(g.vertex_count(), 0);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (!alive[i]) continue;
    remap[i] = result.reduced.vertices.size();
    result.reduced.vertices.push_back(g.vertices[i]);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto e = edges[i];
    e.u = remap[e.u];
    e.v = remap[e.v];
    for (const auto& name : absorbed[i]) result.vertex_map[name] = e.id;
    result.reduced.edges.push_back(std::move(e));
  }
  result.essential_edge_count = result.reduced.edge_count();
  return result;
}

std::size_t edge_connectivity(const DiscreteGraph& g) {
  require_edge_connectivity_domain(g);
  const auto n = g.vertex_count();
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges) {
    ++cap[e.u][e.v];
    ++cap[e.v][e.u];
  }
  int best = std::numeric_limits<int>::max();
  for (std::size_t t = 1; t < n; ++t) best = std::min(best, max_flow(cap, 0, t));
  return static_cast<std::size_t>(best);
}

std::size_t edge_connectivity_exhaustive(const DiscreteGraph& g) {
  require_edge_connectivity_domain(g);
  const auto m = g.edge_count();
  std::vector<bool> removed(m, false);
  for (std::size_t k = 1; k <= m; ++k) {
    const bool found = any_subset_of_size(m, k, [&](const std::vector<std::size_t>& idx) {
      std::fill(removed.begin(), removed.end(), false);
      for (const auto i : idx) removed[i] = true;
      return disconnected_without(g, removed);
    });
    if (found) return k;
  }
  // Removing every edge of a connected graph with V >= 2 always disconnects it.
  throw std::logic_error("edge_connectivity_exhaustive: no disconnecting subset");
}

DiscreteGraph discrete_shadow(const MetricGraph& g) {
  if (has_loop(g)) {
    throw std::invalid_argument("metric graph has a loop; no discrete shadow");
  }
  DiscreteGraph d;
  d.vertices = g.vertices;
  d.edges.reserve(g.edge_count());
  for (const auto& e : g.edges) d.edges.push_back({e.id, e.u, e.v});
  return d;
}

MetricGraph unit_metric(const DiscreteGraph& g) {
  MetricGraph m;
  m.vertices = g.vertices;
  m.edges.reserve(g.edge_count());
  for (const auto& e : g.edges) m.edges.push_back({e.id, e.u, e.v, 1.0});
  return m;
}

MetricGraph insert_vertex(const MetricGraph& g, std::size_t edge_index, double t,
                          const std::string& vertex_id) {
  if (edge_index >= g.edge_count()) throw std::out_of_range("insert_vertex: edge index");
  const auto& e = g.edges[edge_index];
  if (!(t > 0.0 && t < e.length)) {
    throw std::invalid_argument("insert_vertex: position must be interior to the edge");
  }
  MetricGraph out = g;
  const auto x = out.vertices.size();
  out.vertices.push_back(vertex_id);
  MetricEdge first{e.id + "a", e.u, x, t};
  MetricEdge second{e.id + "b", x, e.v, e.length - t};
  out.edges[edge_index] = first;
  out.edges.insert(out.edges.begin() + static_cast<std::ptrdiff_t>(edge_index) + 1, second);
  return out;
}

MetricGraph scale_lengths(const MetricGraph& g, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
  MetricGraph out = g;
  for (auto& e : out.edges) e.length *= factor;
  return out;
}

}  // namespace cheeger
