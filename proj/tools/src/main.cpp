// Copyright 2026 The espkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"
#include "espkit_cli/commands.hpp"

namespace {

int run(int argc, char** argv) {
  using namespace espkit::cli;
  CLI::App app{"espkit: entanglement transitions in a spin-star model"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  EvolveOptions ev;
  auto* evolve = app.add_subcommand("evolve", "Sample a trajectory from a JSON configuration");
  evolve->add_option("--config", ev.config_path, "Configuration file")->required()->check(CLI::ExistingFile);
  evolve->add_option("--set", ev.overrides, "Override a field, e.g. model.s_c=1");
  evolve->add_option("--out", ev.out_dir, "Output directory")->required();
  evolve->add_flag("--gnuplot-script", ev.gnuplot_script, "Also write a gnuplot script");

  ReproOptions rp;
  auto* repro = app.add_subcommand("repro", "Reproduce a table or figure");
  repro->add_option("target", rp.target, "table1, table2, fig2, fig4 or fig5")
      ->required()
      ->check(CLI::IsMember(repro_targets()));
  repro->add_option("--out", rp.out_dir, "Output directory")->required();
  repro->add_option("--tol-rel", rp.tol_rel, "Relative tolerance on coefficients")
      ->capture_default_str();
  repro->add_flag("--gnuplot-script", rp.gnuplot_script, "Also write a gnuplot script");

  DetectOptions dt;
  auto* detect = app.add_subcommand("detect", "Detect transitions in a trajectory CSV");
  detect->add_option("--traj", dt.traj_path, "Trajectory CSV")->required()->check(CLI::ExistingFile);
  detect->add_option("--threshold", dt.threshold, "Negativity threshold")->capture_default_str();
  detect->add_option("--min-duration", dt.min_duration, "Minimum zero-dwell duration");
  detect->add_option("--out", dt.out_path, "Write the report here instead of stdout");

  FitCommandOptions ft;
  auto* fit = app.add_subcommand("fit", "Fit the short-time expansion of the CNE");
  fit->add_option("--config", ft.config_path, "Configuration file")->required()->check(CLI::ExistingFile);
  fit->add_option("--set", ft.overrides, "Override a field");
  fit->add_option("--window", ft.window, "dt window lo:hi")->capture_default_str();
  fit->add_option("--parity", ft.parity, "even or full")
      ->check(CLI::IsMember({"even", "full"}))
      ->capture_default_str();
  fit->add_option("--points", ft.n_points, "Number of dt samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (*evolve) return cmd_evolve(ev, std::cerr);
  if (*repro) return cmd_repro(rp, std::cerr);
  if (*detect) return cmd_detect(dt, std::cout);
  return cmd_fit(ft, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace espkit;
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const Error& e) {
    std::cerr << "numerics error: " << e.what() << "\n";
    return cli::kExitNumerics;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitNumerics;
  }
}
