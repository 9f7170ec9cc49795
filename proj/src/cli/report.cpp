#include "narydiff/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace narydiff::cli {

namespace {

// Text rendering of an arbitrary results value: strings bare, arrays joined
// with commas, objects flattened with dotted keys.
void render(std::ostringstream& os, const std::string& key, const nlohmann::ordered_json& value, int depth) {
  std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (value.is_object()) {
    if (!key.empty()) os << indent << key << ":\n";
    for (const auto& [k, v] : value.items()) render(os, k, v, key.empty() ? depth : depth + 1);
    return;
  }
  os << indent << key << ": ";
  if (value.is_array()) {
    bool scalars = std::all_of(value.begin(), value.end(), [](const auto& v) { return v.is_primitive(); });
    if (scalars) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) os << ",";
        os << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
      }
      os << "\n";
    } else {
      os << "\n";
      for (std::size_t i = 0; i < value.size(); ++i) render(os, "[" + std::to_string(i) + "]", value[i], depth + 1);
    }
    return;
  }
  os << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

// Exact values can run to thousands of digits; text output keeps the head.
std::string abbreviate(const std::string& s) {
  constexpr std::size_t kMax = 64;
  if (s.size() <= kMax) return s;
  return s.substr(0, 32) + "...(" + std::to_string(s.size()) + " chars)";
}

}  // namespace

bool CliReport::all_hold() const {
  return std::all_of(identity_checks.begin(), identity_checks.end(), [](const auto& c) { return c.holds; });
}

nlohmann::ordered_json CliReport::to_json() const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : identity_checks) {
    checks.push_back({{"name", c.name}, {"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return {
      {"command", command},         {"backend", backend},          {"inputs", inputs},
      {"results", results},         {"identity_checks", checks},   {"timing_ms", timing_ms},
  };
}

std::string CliReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "backend: " << backend << "\n";
  render(os, "inputs", inputs, 0);
  render(os, "results", results, 0);
  for (const auto& c : identity_checks) {
    os << "check " << c.name << ": " << (c.holds ? "holds" : "VIOLATED") << " (" << abbreviate(c.lhs) << " vs " << abbreviate(c.rhs)
       << ")\n";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f", timing_ms);
  os << "timing_ms: " << timing << "\n";
  return os.str();
}

nlohmann::ordered_json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string complex_text(std::complex<double> z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "(%.12g, %.12g)", z.real(), z.imag());
  return buf;
}

}  // namespace narydiff::cli
