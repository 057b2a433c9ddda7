#pragma once

#include "verify/report.hpp"
#include "scalar/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsphere {

struct SuiteConfig {
  int n = 2;
  int max_deg = 4;
  std::optional<std::string> mode; // "generic" or "specialized"; each suite has its own default
  Scalar v0 = Scalar(2);
  std::string sigma = "both";      // "+1", "-1" or "both"
  int threads = 1;
};

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInternal = 3 };

struct RunResult {
  int exit_code = kExitPass;
  Json report;
};

const std::vector<std::string>& suite_names(); // includes "all"
// Parses "P/Q" or "P"; rejects 0 and +-1.
Scalar parse_v0(const std::string& text);
void validate(const SuiteConfig& cfg);

// Runs one suite (with its prerequisites) or "all". Never throws for bad
// input: usage problems come back as exit code 2 with an error report.
RunResult run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace qsphere
