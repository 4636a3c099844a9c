#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "myers/scenario.hpp"

namespace {

struct CommonArgs {
  std::string config;
  std::string out;
  double step = 0.0;
  bool has_step = false;
  bool quiet = false;
};

void add_common(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--config", args.config, "scenario configuration file")->required();
  sub->add_option("--out", args.out, "CSV output path");
  sub->add_option("--step", args.step, "grid step override")
      ->check(CLI::PositiveNumber)
      ->each([&args](const std::string&) { args.has_step = true; });
  sub->add_flag("--quiet", args.quiet, "suppress the report table");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical checks of curvature-based compactness criteria on "
               "rotationally symmetric manifolds"};
  app.require_subcommand(1);

  CommonArgs args;
  auto* compare = app.add_subcommand("compare", "run a mean-curvature comparison check");
  auto* constants = app.add_subcommand("constants", "evaluate a compactness constant");
  auto* criterion = app.add_subcommand("criterion", "evaluate a compactness criterion");
  auto* ambrose = app.add_subcommand("ambrose", "integral-divergence diagnosis");
  auto* sweep = app.add_subcommand("sweep", "run a workflow over a parameter grid");
  for (auto* sub : {compare, constants, criterion, ambrose, sweep}) add_common(sub, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    myers::cli::RunOptions opts;
    if (args.has_step) opts.step = args.step;
    opts.quiet = args.quiet;

    const auto cfg = myers::cli::Config::from_file(args.config);
    myers::cli::RunResult result;
    if (compare->parsed())
      result = myers::cli::run_compare(cfg, opts);
    else if (constants->parsed())
      result = myers::cli::run_constants(cfg, opts);
    else if (criterion->parsed())
      result = myers::cli::run_criterion(cfg, opts);
    else if (ambrose->parsed())
      result = myers::cli::run_ambrose(cfg, opts);
    else
      result = myers::cli::run_sweep(cfg, opts);

    if (!args.quiet) std::cout << result.table;
    if (!args.out.empty()) myers::cli::write_csv_atomic(args.out, result.csv);
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
