// opuc: batch runner for measure experiments.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opuc/families.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Schur algorithm, OPUC and entropy experiments on measures of the unit circle"};
  app.require_subcommand(1);

  std::string config, outDir;
  int gridSize = 0;
  std::vector<std::string> tolerances;
  long long seed = -1;

  auto* run = app.add_subcommand("run", "run every task of a config and write CSV/JSON outputs");
  run->add_option("config", config, "config file (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", outDir, "output directory (overrides output.dir)");
  run->add_option("--grid-size", gridSize, "quadrature grid size M, a power of two");
  run->add_option("--tolerance", tolerances, "NAME=VAL override, repeatable");
  run->add_option("--seed", seed, "seed for randomized families")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "check the identities only and print the summary");
  verify->add_option("config", config, "config file (JSON)")->required()->check(CLI::ExistingFile);
  verify->add_option("--grid-size", gridSize, "quadrature grid size M");
  verify->add_option("--tolerance", tolerances, "NAME=VAL override, repeatable");
  verify->add_option("--seed", seed, "seed for randomized families")->check(CLI::NonNegativeNumber);

  auto* families = app.add_subcommand("families", "list the built-in measure families");

  CLI11_PARSE(app, argc, argv);

  if (families->parsed()) {
    for (const auto& f : opuc::family_catalog()) {
      std::printf("%s", f.name.c_str());
      if (!f.parameters.empty()) std::printf("(%s)", f.parameters.c_str());
      std::printf("\n    %s\n", f.description.c_str());
    }
    return 0;
  }

  opuc::ExperimentConfig cfg;
  try {
    cfg = opuc::load_experiment_config(config);
    if (!outDir.empty()) cfg.output.dir = outDir;
    if (gridSize > 0) cfg.measure.gridSize = gridSize;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    for (const auto& t : tolerances) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw opuc::Error(opuc::ErrorKind::Config, "--tolerance expects NAME=VAL, got '" + t + "'");
      double v = 0.0;
      try {
        v = std::stod(t.substr(eq + 1));
      } catch (const std::exception&) {
        throw opuc::Error(opuc::ErrorKind::Config, "--tolerance: '" + t.substr(eq + 1) + "' is not a number");
      }
      opuc::set_tolerance(cfg, t.substr(0, eq), v);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  opuc::cli::RunOptions opt;
  if (verify->parsed()) {
    cfg.tasks = {"verify-identities"};
    opt.writeFiles = false;
  }
  const auto summary = opuc::cli::run_experiment(cfg, opt);
  opuc::cli::print_summary(summary, stdout);
  return summary.failures() == 0 ? 0 : 1;
}
