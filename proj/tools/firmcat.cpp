#include <CLI11.hpp>
#include <iostream>

#include "firmcat/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"firmcat: idempotent subunits, restriction, causal sites, teleportation"};
  app.require_subcommand(1);

  firmcat::cli::RunConfig config;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "generator seed (default 0)");
    cmd->add_option("--samples", config.samples, "random cases per suite (0 = default)");
    cmd->add_option("--tol", config.tol, "numeric tolerance (default 1e-9)");
    cmd->add_option("--format", config.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--serial", config.serial, "use the serial reference runner");
  };

  CLI::App* laws = app.add_subcommand("laws", "run law suites");
  laws->add_option("suite", config.suite, "suite name or \"all\"")->required();
  laws->add_option("--input", config.input_path, "extra input file for the suite");
  add_common(laws);

  CLI::App* teleport = app.add_subcommand("teleport", "verify a teleportation scenario");
  teleport->add_option("scenario", config.scenario_path, "scenario file (JSON)")->required();
  add_common(teleport);

  CLI::App* support = app.add_subcommand("support", "support of a morphism from a category file");
  support->add_option("file", config.category_path, "category file (JSON)")->required();
  support->add_option("morphism", config.morphism, "morphism name")->required();
  add_common(support);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (laws->parsed()) return firmcat::cli::cmd_laws(config, std::cout, std::cerr);
  if (teleport->parsed()) return firmcat::cli::cmd_teleport(config, std::cout, std::cerr);
  if (support->parsed()) return firmcat::cli::cmd_support(config, std::cout, std::cerr);
  return 2;
}
