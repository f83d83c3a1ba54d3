#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace firmcat {

/// A single violated law: which law, in which case, with a concrete witness.
struct LawFailure {
  std::string law;
  std::size_t case_index = 0;
  std::string witness;
  double deviation = 0.0;
};

/// Outcome of a law suite or of a structural check on one value.
/// An empty failure list means every exercised law held.
struct LawReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::vector<std::string> laws;
  std::vector<LawFailure> failures;
  double max_deviation = 0.0;

  bool passed() const { return failures.empty(); }

  void note_law(std::string name) { laws.push_back(std::move(name)); }

  void record(std::string law, bool ok, std::string witness = "",
              double deviation = 0.0, std::size_t case_index = 0) {
    if (deviation > max_deviation) max_deviation = deviation;
    if (!ok) failures.push_back({std::move(law), case_index, std::move(witness), deviation});
  }
};

}  // namespace firmcat
