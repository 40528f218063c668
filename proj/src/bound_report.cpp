#include "cheeger/bound_report.hpp"

namespace cheeger {

std::string_view to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::holds:
      return "holds";
    case BoundStatus::violated:
      return "violated";
    case BoundStatus::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

BoundReport make_bound(std::string inequality, double lhs, double rhs, double tolerance,
                       bool assertable) {
  BoundReport r;
  r.inequality = std::move(inequality);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tolerance;
  r.assertable = assertable;
  r.status = r.slack >= -tolerance ? BoundStatus::holds : BoundStatus::violated;
  return r;
}

BoundReport not_applicable(std::string inequality, std::string_view reason) {
  BoundReport r;
  r.inequality = std::move(inequality);
  r.status = BoundStatus::not_applicable;
  r.assertable = false;
  r.note = std::string(reason);
  return r;
}

}  // namespace cheeger
