// yangcheck: exact verification harness for the block presentations of the
// extended Yangian of the orthogonal and symplectic series.
//
// Subcommands:
//   verify  run a relation suite on the chosen engine(s)
//   center  shorthand for `verify --suite center`
//   gauss   emit the block Gauss decomposition as JSON
//   table   dump the low-degree commutator table as JSON
//   ybe     check the Yang-Baxter equation at seeded sample points

#include <iostream>

#include <CLI11.hpp>

#include "cli_impl.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification harness for extended Yangian block presentations"};
  app.require_subcommand(1);

  yx::cli::RunConfig cfg;
  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "Algebra series: B (odd orthogonal) or C (symplectic)");
    sub->add_option("--rank", cfg.rank, "Rank n (N = 2n+1 for B, N = 2n for C)");
    sub->add_option("--composition", cfg.composition,
                    "Symmetric composition a,b,c or preset flat | drinfeld");
    sub->add_option("--order", cfg.order, "Series truncation order K");
    sub->add_option("--param", cfg.param, "Oracle evaluation parameter c (integer or n/d)");
    sub->add_option("--seed", cfg.seed, "Deterministic sampling seed");
    sub->add_option("--samples", cfg.samples, "Sample count per variable");
    sub->add_option("--report", cfg.reportPath, "Write the JSON report to this path");
    sub->add_flag("--json", cfg.json, "Print the JSON report to stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "Run a relation suite");
  addCommon(verify);
  verify->add_option("--suite", cfg.suite, "Suite name (see --help-suites)");
  verify->add_option("--engine", cfg.engine, "Engine: symbolic | oracle | both");

  CLI::App* center = app.add_subcommand("center", "Run the central-series suite");
  addCommon(center);
  center->add_option("--engine", cfg.engine, "Engine: symbolic | oracle | both");

  CLI::App* gauss = app.add_subcommand("gauss", "Emit the block Gauss decomposition as JSON");
  addCommon(gauss);

  CLI::App* table = app.add_subcommand("table", "Dump the low-degree commutator table as JSON");
  addCommon(table);

  CLI::App* ybe = app.add_subcommand("ybe", "Check the Yang-Baxter equation at sample points");
  addCommon(ybe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (CLI::App* sub : {verify, center, gauss, table, ybe})
    if (sub->parsed()) cfg.command = sub->get_name();

  return yx::cli::runCli(cfg, std::cout, std::cerr);
}
