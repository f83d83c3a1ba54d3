#include "firmcat/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "firmcat/json_io.hpp"
#include "firmcat/protocol.hpp"
#include "firmcat/subunits.hpp"
#include "firmcat/suites.hpp"

namespace firmcat::cli {

namespace {

using io::Json;

std::string format_deviation(double d) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(3) << d;
  return out.str();
}

std::string join(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out + "}";
}

Json report_json(const LawReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["cases"] = r.cases_run;
  j["max_deviation"] = r.max_deviation;
  j["pass"] = r.passed();
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json fj;
    fj["law"] = f.law;
    fj["case"] = f.case_index;
    fj["witness"] = f.witness;
    fj["deviation"] = f.deviation;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  return j;
}

void print_report_text(const LawReport& r, std::ostream& out) {
  out << "suite " << r.suite << ": " << r.cases_run << " cases, " << r.failures.size()
      << " failures, max deviation " << format_deviation(r.max_deviation) << "  "
      << (r.passed() ? "[PASS]" : "[FAIL]") << "\n";
  std::size_t shown = 0;
  for (const auto& f : r.failures) {
    out << "  FAIL " << f.law << " (case " << f.case_index << ")";
    if (!f.witness.empty()) out << ": " << f.witness;
    if (f.deviation > 0) out << " deviation " << format_deviation(f.deviation);
    out << "\n";
    if (++shown == 20 && r.failures.size() > 20) {
      out << "  ... " << (r.failures.size() - 20) << " more\n";
      break;
    }
  }
}

int input_error(const std::string& message, const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  if (config.format == "json") {
    Json j;
    j["error"] = message;
    out << j.dump(2) << "\n";
  }
  err << "error: " << message << "\n";
  return 2;
}

}  // namespace

int cmd_laws(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!suites::is_suite(config.suite))
    return input_error("unknown suite: " + config.suite, config, out, err);
  suites::SuiteConfig sc;
  sc.seed = config.seed;
  sc.samples = config.samples;
  sc.tol = config.tol;
  sc.mode = config.serial ? ExecMode::Serial : ExecMode::Parallel;
  sc.input_path = config.input_path;

  std::vector<LawReport> reports;
  try {
    reports = suites::run_suite(config.suite, sc);
  } catch (const std::exception& e) {
    return input_error(e.what(), config, out, err);
  }

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.passed();

  if (config.format == "json") {
    Json j;
    j["command"] = "laws";
    j["suite"] = config.suite;
    j["seed"] = config.seed;
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(report_json(r));
    j["reports"] = std::move(rs);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(r, out);
    out << (pass ? "all laws hold" : "law failures found") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_teleport(const RunConfig& config, std::ostream& out, std::ostream& err) {
  protocol::TeleportReport rep;
  try {
    const Json j = io::load_file(config.scenario_path);
    const std::string dir = std::filesystem::path(config.scenario_path).parent_path().string();
    protocol::Scenario scn = io::parse_scenario(j, dir.empty() ? "." : dir);
    rep = protocol::verify_teleportation(scn, config.tol);
  } catch (const std::exception& e) {
    return input_error(e.what(), config, out, err);
  }

  if (config.format == "json") {
    Json j;
    j["command"] = "teleport";
    j["support"] = rep.support_carrier;
    j["expected"] = rep.expected_carrier;
    j["support_contained"] = rep.support_contained;
    j["empty_intersection"] = rep.empty_intersection;
    j["restricted_is_iso"] = rep.restricted_is_iso;
    j["deviation"] = rep.deviation;
    j["verdict"] = rep.verdict ? "PASS" : "FAIL";
    out << j.dump(2) << "\n";
  } else {
    out << "support carrier:       " << join(rep.support_carrier) << "\n";
    out << "expected intersection: " << join(rep.expected_carrier) << "\n";
    out << "support contained:     " << (rep.support_contained ? "yes" : "no") << "\n";
    out << "restricted map:        " << (rep.restricted_is_iso ? "iso" : "not an iso")
        << ", deviation " << format_deviation(rep.deviation) << "\n";
    if (rep.empty_intersection) out << "note: empty intersection\n";
    out << "verdict: " << (rep.verdict ? "PASS" : "FAIL") << "\n";
  }
  return rep.verdict ? 0 : 1;
}

int cmd_support(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream body;
  Json j;
  try {
    const io::CategoryFile file = io::parse_category(io::load_file(config.category_path));
    auto it = file.morphisms.find(config.morphism);
    if (it == file.morphisms.end())
      return input_error("unknown morphism: " + config.morphism, config, out, err);
    const subunits::Subunit supp = subunits::support(it->second, config.tol);
    const auto carrier = supp.carrier_names();

    body << "morphism " << config.morphism << ": support " << join(carrier) << "\n";
    j["command"] = "support";
    j["morphism"] = config.morphism;
    j["support"] = carrier;
    Json verdicts = Json::array();
    for (const auto& u : file.subunits) {
      const bool in = subunits::has_support_in(it->second, u, config.tol);
      body << "subunit " << join(u.carrier_names()) << ": has_support_in = "
           << (in ? "yes" : "no") << "\n";
      Json v;
      v["carrier"] = u.carrier_names();
      v["has_support_in"] = in;
      verdicts.push_back(std::move(v));
    }
    j["subunits"] = std::move(verdicts);
  } catch (const std::exception& e) {
    return input_error(e.what(), config, out, err);
  }
  if (config.format == "json")
    out << j.dump(2) << "\n";
  else
    out << body.str();
  return 0;
}

}  // namespace firmcat::cli
