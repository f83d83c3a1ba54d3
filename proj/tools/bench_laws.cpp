// Compares the serial reference runner against the OpenMP one on the heavier
// suites and checks the reports match. Build target: bench_laws.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "firmcat/suites.hpp"

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

bool same_reports(const std::vector<firmcat::LawReport>& a,
                  const std::vector<firmcat::LawReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].suite != b[i].suite || a[i].cases_run != b[i].cases_run ||
        a[i].max_deviation != b[i].max_deviation ||
        a[i].failures.size() != b[i].failures.size())
      return false;
    for (std::size_t k = 0; k < a[i].failures.size(); ++k) {
      const auto& fa = a[i].failures[k];
      const auto& fb = b[i].failures[k];
      if (fa.law != fb.law || fa.case_index != fb.case_index || fa.witness != fb.witness ||
          fa.deviation != fb.deviation)
        return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  if (argc > 1) samples = static_cast<std::size_t>(std::stoull(argv[1]));
  if (argc > 2) seed = std::stoull(argv[2]);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both runs are serial\n");
#endif
  std::printf("%-14s %8s %10s %10s %8s %6s\n", "suite", "samples", "serial[s]", "parallel[s]",
              "speedup", "match");

  const std::vector<std::string> suites = {"support", "coreflection", "graded-monad",
                                           "causal-site"};
  bool all_match = true;
  for (const auto& name : suites) {
    firmcat::suites::SuiteConfig serial_cfg;
    serial_cfg.seed = seed;
    serial_cfg.samples = samples;
    serial_cfg.mode = firmcat::ExecMode::Serial;
    firmcat::suites::SuiteConfig parallel_cfg = serial_cfg;
    parallel_cfg.mode = firmcat::ExecMode::Parallel;

    const double t0 = now_seconds();
    const auto serial = firmcat::suites::run_suite(name, serial_cfg);
    const double t1 = now_seconds();
    const auto parallel = firmcat::suites::run_suite(name, parallel_cfg);
    const double t2 = now_seconds();

    const bool match = same_reports(serial, parallel);
    all_match = all_match && match;
    std::printf("%-14s %8zu %10.3f %10.3f %7.2fx %6s\n", name.c_str(), samples, t1 - t0,
                t2 - t1, (t1 - t0) / (t2 - t1), match ? "yes" : "NO");
  }
  return all_match ? 0 : 1;
}
