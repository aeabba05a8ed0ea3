#include "runner/report.hpp"

#include <cstdio>
#include <sstream>

namespace berglab {

namespace {

/// JSON string escaping for the few characters our names and configs can
/// contain (quotes never appear in practice; newlines do, in the config
/// echo).
std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

bool RunReport::overall() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void RunReport::check_le(const std::string& name, double value,
                         double threshold) {
  checks.push_back({name, value, threshold, value <= threshold});
}

void RunReport::check_ge(const std::string& name, double value,
                         double threshold) {
  checks.push_back({name, value, threshold, value >= threshold});
}

void RunReport::check_true(const std::string& name, bool ok) {
  checks.push_back({name, ok ? 1.0 : 0.0, 1.0, ok});
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string report_to_json(const RunReport& rep) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"experiment_id\": \"" << json_escape(rep.experiment_id) << "\",\n";
  os << "  \"config\": \"" << json_escape(rep.config_text) << "\",\n";
  os << "  \"checks\": [\n";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    os << "    {\"name\": \"" << json_escape(c.name) << "\", \"value\": "
       << fmt17(c.value) << ", \"threshold\": " << fmt17(c.threshold)
       << ", \"pass\": " << (c.pass ? "true" : "false") << "}"
       << (i + 1 < rep.checks.size() ? "," : "") << "\n";
  }
  os << "  ],\n";
  os << "  \"artifacts\": [";
  for (std::size_t i = 0; i < rep.artifacts.size(); ++i)
    os << "\"" << json_escape(rep.artifacts[i]) << "\""
       << (i + 1 < rep.artifacts.size() ? ", " : "");
  os << "],\n";
  os << "  \"overall_pass\": " << (rep.overall() ? "true" : "false") << ",\n";
  os << "  \"wall_time_seconds\": " << fmt17(rep.wall_seconds) << "\n";
  os << "}\n";
  return os.str();
}

}  // namespace berglab
