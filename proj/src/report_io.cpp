#include "crsphere/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>

#include "json.hpp"

namespace crs::report_io {

using nlohmann::ordered_json;

Summary summarize(std::span<const IneqReport> entries) {
  Summary s;
  s.total = entries.size();
  for (const auto& r : entries) {
    switch (r.verdict) {
      case Verdict::holds_strict:
        ++s.holds_strict;
        break;
      case Verdict::holds_equality:
        ++s.holds_equality;
        break;
      case Verdict::violated:
        ++s.violated;
        break;
    }
    if (r.verdict != Verdict::holds_equality) s.min_slack = std::min(s.min_slack, r.slack);
  }
  return s;
}

std::string timestamp_now() {
  std::time_t t = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH"); env && *env) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v >= 0) t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string to_json(const ReportDocument& doc) {
  ordered_json j;
  j["tool_version"] = doc.tool_version;
  j["command"] = doc.command;
  j["timestamp"] = doc.timestamp;
  ordered_json config = ordered_json::object();
  for (const auto& [k, v] : doc.config) config[k] = v;
  j["config"] = std::move(config);

  ordered_json entries = ordered_json::array();
  for (const auto& r : doc.entries) {
    ordered_json e;
    e["inequality_id"] = r.inequality_id;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = number(v);
    e["params"] = std::move(params);
    e["lhs"] = number(r.lhs);
    e["rhs"] = number(r.rhs);
    e["slack"] = number(r.slack);
    e["tolerance"] = number(r.tolerance);
    e["verdict"] = std::string(to_string(r.verdict));
    e["notes"] = r.notes;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);

  if (!doc.table.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : doc.table.rows) {
      ordered_json jr = ordered_json::array();
      for (double x : row) jr.push_back(number(x));
      rows.push_back(std::move(jr));
    }
    j["table"] = {{"columns", doc.table.columns}, {"rows", std::move(rows)}};
  }

  const Summary s = doc.summary();
  j["summary"] = {{"total", s.total},
                  {"holds_strict", s.holds_strict},
                  {"holds_equality", s.holds_equality},
                  {"violated", s.violated},
                  {"min_slack", number(s.min_slack)}};
  return j.dump(1) + "\n";
}

std::string to_csv(const ReportDocument& doc) {
  std::string out;
  const auto line = [&out](const std::vector<std::string>& fields) {
    std::vector<std::string> quoted;
    quoted.reserve(fields.size());
    for (const auto& f : fields) quoted.push_back(csv_field(f));
    out += join(quoted, ',') + "\r\n";
  };
  if (!doc.table.empty()) {
    line(doc.table.columns);
    for (const auto& row : doc.table.rows) {
      std::vector<std::string> fields;
      for (double x : row) fields.push_back(format_double(x));
      line(fields);
    }
    return out;
  }
  line({"inequality_id", "params", "lhs", "rhs", "slack", "tolerance", "verdict", "notes"});
  for (const auto& r : doc.entries) {
    std::vector<std::string> params;
    for (const auto& [k, v] : r.params) params.push_back(k + "=" + format_double(v));
    line({r.inequality_id, join(params, ';'), format_double(r.lhs), format_double(r.rhs),
          format_double(r.slack), format_double(r.tolerance), std::string(to_string(r.verdict)),
          join(r.notes, ';')});
  }
  return out;
}

}  // namespace crs::report_io
