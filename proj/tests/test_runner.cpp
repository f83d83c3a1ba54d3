#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "firmcat/runner.hpp"
#include "firmcat/suites.hpp"

using namespace firmcat;

namespace {

bool reports_equal(const std::vector<LawReport>& a, const std::vector<LawReport>& b) {
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

TEST_CASE("failures merge in case order with per-case generators") {
  auto body = [](std::size_t i, Rng& rng, CaseRecorder& rec) {
    const double value = rng.real();
    if (i % 3 == 0) rec.require("every-third-fails", false, std::to_string(value));
    rec.within("deviation-tracked", value, 2.0);
  };
  LawReport serial = run_cases("demo", 30, 7, ExecMode::Serial, body);
  LawReport parallel = run_cases("demo", 30, 7, ExecMode::Parallel, body);
  CHECK(serial.cases_run == 30);
  CHECK(serial.failures.size() == 10);
  for (std::size_t k = 0; k < serial.failures.size(); ++k)
    CHECK(serial.failures[k].case_index == 3 * k);
  CHECK(reports_equal({serial}, {parallel}));
}

TEST_CASE("exceptions inside a case become recorded failures") {
  auto body = [](std::size_t i, Rng&, CaseRecorder&) {
    if (i == 5) throw std::runtime_error("boom");
  };
  LawReport r = run_cases("demo", 10, 0, ExecMode::Parallel, body);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].law == "no-exception");
  CHECK(r.failures[0].case_index == 5);
  CHECK(r.failures[0].witness == "boom");
}

TEST_CASE("serial and parallel suite runs produce identical reports") {
  for (const std::string name : {"support", "graded-monad", "complements"}) {
    suites::SuiteConfig serial_cfg;
    serial_cfg.seed = 42;
    serial_cfg.samples = 60;
    serial_cfg.mode = ExecMode::Serial;
    suites::SuiteConfig parallel_cfg = serial_cfg;
    parallel_cfg.mode = ExecMode::Parallel;
    CHECK(reports_equal(suites::run_suite(name, serial_cfg),
                        suites::run_suite(name, parallel_cfg)));
  }
}

TEST_CASE("same seed reproduces, different seeds vary") {
  suites::SuiteConfig a;
  a.seed = 1;
  a.samples = 40;
  suites::SuiteConfig b = a;
  CHECK(reports_equal(suites::run_suite("support", a), suites::run_suite("support", b)));

  // different seeds explore different cases; deviations almost surely differ
  suites::SuiteConfig c = a;
  c.seed = 2;
  const auto ra = suites::run_suite("coreflection", a);
  const auto rc = suites::run_suite("coreflection", c);
  CHECK(ra.front().max_deviation != rc.front().max_deviation);
}

TEST_CASE("unknown suites are rejected, known ones listed") {
  suites::SuiteConfig cfg;
  CHECK_THROWS_AS((void)suites::run_suite("bogus", cfg), std::invalid_argument);
  CHECK(suites::is_suite("all"));
  CHECK(suites::is_suite("graded-monad"));
  CHECK_FALSE(suites::is_suite("bogus"));
  CHECK(suites::suite_names().size() == 10);
}
