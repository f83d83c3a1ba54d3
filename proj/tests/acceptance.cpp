// Acceptance gate: one criterion per line, pinned tolerances and budgets.
// Exit code 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "firmcat/firmmod.hpp"
#include "firmcat/protocol.hpp"
#include "firmcat/suites.hpp"

namespace {

using firmcat::LawReport;

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

bool all_pass(const std::vector<LawReport>& reports, std::string& detail, std::size_t& cases) {
  bool pass = true;
  for (const auto& r : reports) {
    cases += r.cases_run;
    if (!r.passed()) {
      pass = false;
      detail += " " + r.suite + ":" + r.failures.front().law;
    }
  }
  return pass;
}

firmcat::suites::SuiteConfig config_with(std::size_t samples) {
  firmcat::suites::SuiteConfig c;
  c.seed = 0;
  c.samples = samples;
  c.tol = 1e-9;
  return c;
}

bool run_suite_criterion(const std::string& suite, std::size_t samples, std::string& detail) {
  std::size_t cases = 0;
  const bool pass =
      all_pass(firmcat::suites::run_suite(suite, config_with(samples)), detail, cases);
  detail = std::to_string(cases) + " cases" + detail;
  return pass;
}

firmcat::protocol::Scenario diamond_scenario(firmcat::protocol::PairMode mode) {
  firmcat::protocol::Scenario scn{firmcat::causal::CausalSite::with_auto_causal(
      {"p", "a", "b", "q"},
      {{"p", "a"}, {"p", "b"}, {"p", "q"}, {"a", "q"}, {"b", "q"}})};
  scn.r = scn.site.mask_of({"p"});
  scn.s = scn.site.mask_of({"a"});
  scn.t = scn.site.mask_of({"b"});
  scn.qdim = 2;
  scn.eta_mode = mode;
  scn.eps_mode = mode;
  return scn;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "subunit semilattice: exhaustive bases <= 4 plus 1000 random", 5.0,
       [](std::string& d) { return run_suite_criterion("semilattice", 1000, d); }},

      {2, "firmness: every subunit pair over bases <= 5", 5.0,
       [](std::string& d) { return run_suite_criterion("firmness", 0, d); }},

      {3, "support calculus: 500 pairs, both decision paths agree", 10.0,
       [](std::string& d) { return run_suite_criterion("support", 500, d); }},

      {4, "coreflection: bijection and triangles on 300 cases at 1e-9", 10.0,
       [](std::string& d) { return run_suite_criterion("coreflection", 300, d); }},

      {5, "graded monad: coherence diagrams on 200 grade triples at 1e-9", 10.0,
       [](std::string& d) { return run_suite_criterion("graded-monad", 200, d); }},

      {6, "localisation: Q inverts sigma, eta components iso", 5.0,
       [](std::string& d) { return run_suite_criterion("localisation", 200, d); }},

      {7, "closure operators: 500 random sites, restrictions preserved", 5.0,
       [](std::string& d) { return run_suite_criterion("causal-site", 500, d); }},

      {8, "complements: exhaustive future sets on sites <= 5, unique", 10.0,
       [](std::string& d) { return run_suite_criterion("complements", 200, d); }},

      {9, "teleportation: diamond exact, 200 random scenarios confined", 10.0,
       [](std::string& d) {
         using firmcat::protocol::PairMode;
         firmcat::protocol::TeleportReport dual =
             firmcat::protocol::verify_teleportation(diamond_scenario(PairMode::Dual), 1e-9);
         bool pass = dual.support_carrier == std::vector<std::string>{"q"} &&
                     dual.expected_carrier == std::vector<std::string>{"q"} &&
                     dual.deviation == 0.0 && dual.verdict;
         if (!pass) d += " diamond-dual";
         firmcat::protocol::TeleportReport norm = firmcat::protocol::verify_teleportation(
             diamond_scenario(PairMode::Normalized), 1e-9);
         if (!(norm.deviation <= 1e-12 && norm.verdict)) {
           pass = false;
           d += " diamond-normalized";
         }
         LawReport sweep = firmcat::protocol::teleport_suite(200, 0, 1e-9);
         if (!sweep.passed()) {
           pass = false;
           d += " random-sweep:" + sweep.failures.front().law;
         }
         d = std::to_string(2 + sweep.cases_run) + " cases" + d;
         return pass;
       }},

      {10, "firm rings: 2^n ideals for n <= 4, exact equivalence", 10.0,
       [](std::string& d) {
         bool pass = true;
         for (int n = 0; n <= 4; ++n)
           pass = pass && firmcat::firmmod::enumerate_subunits(n).size() ==
                              (std::size_t{1} << n);
         if (!pass) d += " enumeration-count";
         std::string detail;
         if (!run_suite_criterion("firm-rings", 100, detail)) pass = false;
         d = detail + d;
         return pass;
       }},
  };

  int failures = 0;
  double total = 0.0;
  for (const auto& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.body(detail);
    } catch (const std::exception& e) {
      detail += std::string(" exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += seconds;
    if (seconds > c.budget_seconds) {
      pass = false;
      detail += " over budget of " + std::to_string(c.budget_seconds) + " s";
    }
    if (!pass) ++failures;
    std::printf("criterion %2d %s: %s  (%.2f s, %s)\n", c.number,
                pass ? "PASS" : "FAIL", c.label.c_str(), seconds, detail.c_str());
  }
  std::printf("acceptance: %d/%zu criteria passed in %.2f s\n",
              static_cast<int>(criteria.size()) - failures, criteria.size(), total);
  if (total > 60.0) {
    std::printf("acceptance: over the 60 s full-suite budget\n");
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
