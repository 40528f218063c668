#include "cheeger/families.hpp"

#include <stdexcept>

namespace cheeger {

namespace {

std::string padded_name(const std::string& prefix, int index, int count) {
  std::string digits = std::to_string(index);
  const auto width = std::to_string(std::max(0, count - 1)).size();
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

std::vector<std::string> numbered_vertices(int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(padded_name("v", i, count));
  return out;
}

void add_edge(MetricGraph& g, std::size_t u, std::size_t v, double length) {
  g.edges.push_back({"e" + std::to_string(g.edges.size() + 1), u, v, length});
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("family: ") + what);
}

double to_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw std::invalid_argument("family parameter '" + key + "': not a number: '" + text + "'");
  }
  return value;
}

int to_int(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (v != static_cast<double>(static_cast<int>(v))) {
    throw std::invalid_argument("family parameter '" + key + "': not an integer: '" + text + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "path") return FamilyKind::path;
  if (name == "cycle") return FamilyKind::cycle;
  if (name == "star") return FamilyKind::star;
  if (name == "flower") return FamilyKind::flower;
  if (name == "pumpkin") return FamilyKind::pumpkin;
  if (name == "dumbbell") return FamilyKind::dumbbell;
  if (name == "butterfly") return FamilyKind::butterfly;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::star: return "star";
    case FamilyKind::flower: return "flower";
    case FamilyKind::pumpkin: return "pumpkin";
    case FamilyKind::dumbbell: return "dumbbell";
    case FamilyKind::butterfly: return "butterfly";
  }
  return "unknown";
}

FamilySpec family_from_params(FamilyKind kind, const std::map<std::string, std::string>& params) {
  FamilySpec spec;
  spec.kind = kind;
  for (const auto& [key, value] : params) {
    if (key == "n" || key == "E" || key == "edges") {
      spec.edges = to_int(key, value);
    } else if (key == "m" || key == "petals") {
      spec.petals = to_int(key, value);
    } else if (key == "length" || key == "l") {
      spec.edge_length = to_double(key, value);
    } else if (key == "L" || key == "total") {
      spec.total_length = to_double(key, value);
    } else if (key == "eps" || key == "handle") {
      spec.handle = to_double(key, value);
    } else {
      throw std::invalid_argument("unknown family parameter '" + key + "'");
    }
  }
  return spec;
}

MetricGraph path_graph(int edges, double edge_length) {
  require(edges >= 1, "path needs at least one edge");
  require(edge_length > 0.0, "lengths must be positive");
  MetricGraph g;
  g.vertices = numbered_vertices(edges + 1);
  for (int i = 0; i < edges; ++i) add_edge(g, i, i + 1, edge_length);
  return g;
}

MetricGraph cycle_graph(int edges, double edge_length) {
  require(edges >= 1, "cycle needs at least one edge");
  require(edge_length > 0.0, "lengths must be positive");
  MetricGraph g;
  g.vertices = numbered_vertices(edges);
  for (int i = 0; i < edges; ++i) add_edge(g, i, (i + 1) % edges, edge_length);
  return g;
}

MetricGraph star_graph(int edges, double edge_length) {
  require(edges >= 1, "star needs at least one edge");
  require(edge_length > 0.0, "lengths must be positive");
  MetricGraph g;
  g.vertices = numbered_vertices(edges + 1);
  for (int i = 1; i <= edges; ++i) add_edge(g, 0, i, edge_length);
  return g;
}

MetricGraph flower_graph(int petals, double total_length) {
  require(petals >= 1, "flower needs at least one petal");
  require(total_length > 0.0, "lengths must be positive");
  MetricGraph g;
  g.vertices = {"v0"};
  for (int i = 0; i < petals; ++i) add_edge(g, 0, 0, total_length / petals);
  return g;
}

MetricGraph pumpkin_graph(int edges, double edge_length) {
  require(edges >= 1, "pumpkin needs at least one edge");
  require(edge_length > 0.0, "lengths must be positive");
  MetricGraph g;
  g.vertices = {"v0", "v1"};
  for (int i = 0; i < edges; ++i) add_edge(g, 0, 1, edge_length);
  return g;
}

MetricGraph dumbbell_graph(int petals_per_side, double total_length, double handle) {
  require(petals_per_side >= 1, "dumbbell needs m >= 1");
  require(handle > 0.0, "dumbbell needs a positive handle");
  require(total_length > handle, "dumbbell handle must be shorter than the total length");
  const double petal = (total_length - handle) / (2.0 * petals_per_side);
  MetricGraph g;
  g.vertices = {"a", "b"};
  for (int i = 1; i <= petals_per_side; ++i) g.edges.push_back({"a" + std::to_string(i), 0, 0, petal});
  g.edges.push_back({"handle", 0, 1, handle});
  for (int i = 1; i <= petals_per_side; ++i) g.edges.push_back({"b" + std::to_string(i), 1, 1, petal});
  return g;
}

MetricGraph butterfly_graph(double edge_length) {
  require(edge_length > 0.0, "lengths must be positive");
  MetricGraph g;
  g.vertices = {"c", "a1", "a2", "b1", "b2"};
  add_edge(g, 0, 1, edge_length);
  add_edge(g, 1, 2, edge_length);
  add_edge(g, 2, 0, edge_length);
  add_edge(g, 0, 3, edge_length);
  add_edge(g, 3, 4, edge_length);
  add_edge(g, 4, 0, edge_length);
  return g;
}

MetricGraph generate_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path: return path_graph(spec.edges, spec.edge_length);
    case FamilyKind::cycle: return cycle_graph(spec.edges, spec.edge_length);
    case FamilyKind::star: return star_graph(spec.edges, spec.edge_length);
    case FamilyKind::flower: return flower_graph(spec.edges, spec.total_length);
    case FamilyKind::pumpkin: return pumpkin_graph(spec.edges, spec.edge_length);
    case FamilyKind::dumbbell: return dumbbell_graph(spec.petals, spec.total_length, spec.handle);
    case FamilyKind::butterfly: return butterfly_graph(spec.edge_length);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace cheeger
