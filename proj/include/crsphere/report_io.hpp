#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crsphere/report.hpp"

namespace crs::report_io {

struct Summary {
  std::size_t total = 0;
  std::size_t holds_strict = 0;
  std::size_t holds_equality = 0;
  std::size_t violated = 0;
  /// Minimum slack over entries that are not equalities; +inf if none.
  double min_slack = std::numeric_limits<double>::infinity();
};

Summary summarize(std::span<const IneqReport> entries);

/// Numeric table (eigenvalues, quadrature comparisons, samples).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  bool empty() const noexcept { return columns.empty(); }
};

struct ReportDocument {
  std::string tool_version;
  std::string command;
  /// Effective options, in a fixed order.
  std::vector<std::pair<std::string, std::string>> config;
  std::string timestamp;
  std::vector<IneqReport> entries;
  Table table;

  Summary summary() const { return summarize(entries); }
};

/// RFC 3339 UTC time from SOURCE_DATE_EPOCH when set (reproducible builds
/// convention), otherwise the current time.
std::string timestamp_now();

/// %.17g: round-trips through strtod.
std::string format_double(double x);

/// Pretty-printed JSON with a trailing newline. Non-finite numbers become null.
std::string to_json(const ReportDocument& doc);

/// RFC 4180 CSV (CRLF line ends). The table when the document has one,
/// otherwise one row per entry.
std::string to_csv(const ReportDocument& doc);

}  // namespace crs::report_io
