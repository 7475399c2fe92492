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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "espkit_cli/config.hpp"

namespace espkit::cli {

enum ExitCode : int { kExitPass = 0, kExitValidation = 1, kExitUsage = 2, kExitNumerics = 3 };

inline constexpr const char* kToolVersion = ESPKIT_VERSION;

struct EvolveOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  bool gnuplot_script = false;
};

struct ReproOptions {
  std::string target;
  std::string out_dir;
  double tol_rel = 1e-3;
  bool gnuplot_script = false;
};

struct DetectOptions {
  std::string traj_path;
  double threshold = kEntanglementThreshold;
  std::optional<double> min_duration;
  std::string out_path;  // empty: write to the output stream
};

struct FitCommandOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string window = "1e-3:1e-2";
  std::string parity = "even";
  std::size_t n_points = 24;
};

/** Loads a configuration file and applies the overrides in order. */
RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides);

/** Trajectory of a configuration, with the state description in the metadata. */
Trajectory run_trajectory(const RunConfig& cfg);

/** Manifest document of an evolve run. */
json evolve_manifest(const RunConfig& cfg, const Trajectory& traj,
                     const std::vector<std::string>& outputs);

/** Events and, for trajectories spanning t = 0, the classification. */
json detect_report(const Trajectory& traj, const DetectionParams& params);

int cmd_evolve(const EvolveOptions& opts, std::ostream& log);
int cmd_repro(const ReproOptions& opts, std::ostream& log);
int cmd_detect(const DetectOptions& opts, std::ostream& out);
int cmd_fit(const FitCommandOptions& opts, std::ostream& out);

/** Repro targets accepted by cmd_repro. */
const std::vector<std::string>& repro_targets();

/** Structured result of a repro target before it is written to disk. */
struct ReproCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproResult {
  std::string target;
  std::vector<ReproCheck> checks;
  std::string table_csv;  // comparison table, empty for figures
  std::vector<std::pair<std::string, Trajectory>> curves;
  bool pass() const;
};

ReproResult run_repro(const std::string& target, double tol_rel);

/** Parses "lo:hi" into a pair with 0 < lo < hi. */
std::pair<double, double> parse_window(const std::string& text);

}  // namespace espkit::cli
