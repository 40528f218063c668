#pragma once

#include <map>
#include <string>
#include <string_view>

namespace cheeger {

enum class BoundStatus { holds, violated, not_applicable };

std::string_view to_string(BoundStatus status);

/// One inequality `lhs <= rhs` evaluated on one graph.
struct BoundReport {
  std::string inequality;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double tolerance = 0.0;
  BoundStatus status = BoundStatus::not_applicable;
  // false for conjectures and alternative conventions: logged, never fatal
  bool assertable = true;
  std::map<std::string, double> quantities;
  std::string digest;
  std::string note;
};

/// Evaluates `lhs <= rhs`; holds iff slack >= -tolerance.
BoundReport make_bound(std::string inequality, double lhs, double rhs, double tolerance,
                       bool assertable = true);

BoundReport not_applicable(std::string inequality, std::string_view reason = {});

inline bool is_assertable_violation(const BoundReport& r) {
  return r.assertable && r.status == BoundStatus::violated;
}

}  // namespace cheeger
