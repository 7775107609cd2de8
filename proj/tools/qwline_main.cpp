#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwline/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qwline: space-inhomogeneous two-state quantum walks on the line and "
               "on cycles, with transfer-matrix eigenstates and stationarity checks"};

  qw::cli::Options options;
  unsigned seed = 0;
  app.add_option("--config", options.config_path, "JSON config for a single run");
  app.add_option("--sweep", options.sweep_path,
                 "JSON array of configs (paths or inline objects), run concurrently");
  app.add_option("--out", options.out_dir, "output directory")->capture_default_str();
  app.add_option("--tol", options.tolerance_overrides,
                 "tolerance override NAME=VALUE (repeatable)");
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized commands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? 0 : qw::cli::exit_config;
  }
  if (seed_opt->count() > 0) options.seed = seed;

  return qw::cli::execute(options);
}
