#include "crsphere/report.hpp"

#include <cmath>
#include <stdexcept>

namespace crs {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds_strict:
      return "holds_strict";
    case Verdict::holds_equality:
      return "holds_equality";
    case Verdict::violated:
      return "violated";
  }
  return "unknown";
}

Verdict classify(double slack, double tolerance) {
  if (std::abs(slack) <= tolerance) return Verdict::holds_equality;
  return slack < -tolerance ? Verdict::violated : Verdict::holds_strict;
}

double IneqReport::param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw std::out_of_range("IneqReport: no parameter '" + std::string(name) + "'");
}

IneqReport make_report(std::string id, std::vector<std::pair<std::string, double>> params,
                       double lhs, double rhs, double tolerance) {
  IneqReport r;
  r.inequality_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tolerance;
  r.verdict = classify(r.slack, tolerance);
  return r;
}

}  // namespace crs
