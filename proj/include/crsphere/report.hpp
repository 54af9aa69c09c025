#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crs {

enum class Verdict { holds_strict, holds_equality, violated };

std::string_view to_string(Verdict v);

/// equality iff |slack| ≤ tolerance; violated iff slack < −tolerance.
Verdict classify(double slack, double tolerance);

/// One inequality instance: lhs ≤ rhs is claimed, slack = rhs − lhs.
struct IneqReport {
  std::string inequality_id;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::holds_equality;
  std::vector<std::string> notes;

  /// Value of a named parameter; throws std::out_of_range if absent.
  double param(std::string_view name) const;
};

IneqReport make_report(std::string id, std::vector<std::pair<std::string, double>> params,
                       double lhs, double rhs, double tolerance);

}  // namespace crs
