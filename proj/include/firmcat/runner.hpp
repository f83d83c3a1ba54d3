#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "firmcat/report.hpp"
#include "firmcat/rng.hpp"

namespace firmcat {

enum class ExecMode { Serial, Parallel };

/// Per-case sink handed to suite bodies. Cases only see their own recorder,
/// so the parallel and serial runners produce identical reports.
class CaseRecorder {
 public:
  explicit CaseRecorder(std::size_t index) : index_(index) {}

  void require(const std::string& law, bool ok, const std::string& witness = "") {
    if (!ok) failures_.push_back({law, index_, witness, 0.0});
  }

  /// Numeric law: passes iff deviation <= tol. Deviation feeds the report
  /// maximum either way.
  void within(const std::string& law, double deviation, double tol,
              const std::string& witness = "") {
    max_deviation_ = std::max(max_deviation_, deviation);
    if (!(deviation <= tol)) failures_.push_back({law, index_, witness, deviation});
  }

  const std::vector<LawFailure>& failures() const { return failures_; }
  double max_deviation() const { return max_deviation_; }

 private:
  std::size_t index_;
  std::vector<LawFailure> failures_;
  double max_deviation_ = 0.0;
};

/// Runs `cases` independent suite cases and merges their results in case
/// order. The parallel path distributes cases over OpenMP threads; the serial
/// path is the reference implementation and must produce a byte-identical
/// report (each case derives its own generator from the seed, and merging is
/// by index, not completion order).
template <typename Body>
LawReport run_cases(std::string suite, std::size_t cases, std::uint64_t seed,
                    ExecMode mode, Body&& body) {
  std::vector<std::vector<LawFailure>> failures(cases);
  std::vector<double> deviations(cases, 0.0);

  auto run_one = [&](std::size_t i) {
    Rng rng(mix_seed(seed, i));
    CaseRecorder rec(i);
    try {
      body(i, rng, rec);
    } catch (const std::exception& e) {
      rec.require("no-exception", false, e.what());
    }
    failures[i] = rec.failures();
    deviations[i] = rec.max_deviation();
  };

#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(cases); ++i)
      run_one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < cases; ++i) run_one(i);
  }
#else
  (void)mode;
  for (std::size_t i = 0; i < cases; ++i) run_one(i);
#endif

  LawReport report;
  report.suite = std::move(suite);
  report.cases_run = cases;
  for (std::size_t i = 0; i < cases; ++i) {
    report.max_deviation = std::max(report.max_deviation, deviations[i]);
    for (auto& f : failures[i]) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace firmcat
