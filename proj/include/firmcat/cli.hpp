#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "firmcat/hilbfield.hpp"

namespace firmcat::cli {

/// Everything a command run depends on. Identical configs and files produce
/// byte-identical structured output.
struct RunConfig {
  std::string suite;                // for laws
  std::string scenario_path;        // for teleport
  std::string category_path;        // for support
  std::string morphism;             // for support
  std::string input_path;           // optional extra file for some suites
  std::uint64_t seed = 0;
  std::size_t samples = 0;          // 0 = suite default
  double tol = hilb::kDefaultTol;
  std::string format = "text";      // text | json
  bool serial = false;              // force the serial reference runner
};

/// Exit codes: 0 all pass, 1 law/verdict failure, 2 usage or input error.
int cmd_laws(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_teleport(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_support(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace firmcat::cli
