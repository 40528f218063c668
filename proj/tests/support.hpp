#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cheeger/graph.hpp"

namespace cheeger::testing {

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

inline DiscreteGraph discrete(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  DiscreteGraph g;
  g.vertices = names(n);
  for (const auto& [u, v] : pairs) g.edges.push_back({"e" + std::to_string(g.edges.size() + 1), u, v});
  return g;
}

inline DiscreteGraph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return discrete(n, pairs);
}

inline DiscreteGraph path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return discrete(n, pairs);
}

inline DiscreteGraph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return discrete(n, pairs);
}

struct LengthEdge {
  std::size_t u;
  std::size_t v;
  double length;
};

inline MetricGraph metric(std::size_t n, const std::vector<LengthEdge>& edges) {
  MetricGraph g;
  g.vertices = names(n);
  for (const auto& e : edges) {
    g.edges.push_back({"e" + std::to_string(g.edges.size() + 1), e.u, e.v, e.length});
  }
  return g;
}

}  // namespace cheeger::testing
