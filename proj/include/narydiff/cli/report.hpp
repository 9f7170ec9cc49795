#pragma once

#include <json.hpp>

#include <complex>
#include <string>
#include <vector>

#include "narydiff/rational.hpp"

namespace narydiff::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIdentityViolated = 1,
  kExitUsage = 2,
};

enum class OutputFormat { text, json };

struct IdentityCheck {
  std::string name;
  bool holds;
  std::string lhs;
  std::string rhs;
};

/// Everything a command produces. `results` is command specific; the other
/// keys are shared by every command.
///
/// JSON layout:
///   {"command", "backend", "inputs", "results", "identity_checks": [{"name",
///    "holds", "lhs", "rhs"}], "timing_ms"}
/// Rationals are strings "p/q" (or "p"), float values are numbers and
/// complex values are {"re", "im"}.
struct CliReport {
  std::string command;
  std::string backend;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<IdentityCheck> identity_checks;
  double timing_ms = 0.0;

  bool all_hold() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

nlohmann::ordered_json complex_json(std::complex<double> z);
/// "(re, im)" with 12 significant digits.
std::string complex_text(std::complex<double> z);

}  // namespace narydiff::cli
