#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "firmcat/hilbfield.hpp"
#include "firmcat/report.hpp"
#include "firmcat/runner.hpp"

namespace firmcat::suites {

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 0;  // 0 = per-suite default
  double tol = hilb::kDefaultTol;
  ExecMode mode = ExecMode::Parallel;
  std::string input_path;  // optional file for the closure / causal-site suites
};

/// The fixed suite order; "all" is accepted by run_suite but not listed.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one named suite (or all of them, in the fixed order) and returns its
/// sub-reports. Unknown names throw std::invalid_argument.
std::vector<LawReport> run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace firmcat::suites
