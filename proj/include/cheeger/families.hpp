#pragma once

#include <map>
#include <string>

#include "cheeger/graph.hpp"

namespace cheeger {

enum class FamilyKind { path, cycle, star, flower, pumpkin, dumbbell, butterfly };

/// Named graph family. Counts: `edges` (path/cycle/star/flower/pumpkin) or
/// `petals` per side (dumbbell). Lengths: `edge_length` per edge, or `total_length`
/// for flower and dumbbell, plus `handle` for the dumbbell.
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int edges = 1;
  int petals = 1;
  double edge_length = 1.0;
  double total_length = 1.0;
  double handle = 0.0;
};

FamilyKind parse_family_kind(const std::string& name);
std::string to_string(FamilyKind kind);

/// Builds a FamilySpec from key=value parameters (n|E|edges, m|petals,
/// length|l, L|total, eps|handle). Unknown keys are rejected.
FamilySpec family_from_params(FamilyKind kind, const std::map<std::string, std::string>& params);

/// Deterministic construction with stable vertex and edge ids.
MetricGraph generate_family(const FamilySpec& spec);

MetricGraph path_graph(int edges, double edge_length = 1.0);
MetricGraph cycle_graph(int edges, double edge_length = 1.0);
MetricGraph star_graph(int edges, double edge_length = 1.0);
/// One vertex with `petals` loops of length total_length / petals.
MetricGraph flower_graph(int petals, double total_length = 1.0);
MetricGraph pumpkin_graph(int edges, double edge_length = 1.0);
/// Two flowers of m petals of length (L - handle) / (2m) joined by a handle.
MetricGraph dumbbell_graph(int petals_per_side, double total_length, double handle);
/// Two triangles sharing one vertex.
MetricGraph butterfly_graph(double edge_length = 1.0);

}  // namespace cheeger
