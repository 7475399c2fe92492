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

#include "espkit_cli/commands.hpp"

#include <charconv>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "espkit_cli/csv.hpp"

namespace espkit::cli {

namespace fs = std::filesystem;

namespace {

std::string describe_state(const RunConfig& cfg) {
  const StateConfig& st = cfg.state;
  std::string out = to_string(st.kind);
  if (st.weighting_id) out += " " + to_string(*st.weighting_id) + " eps=" + format_double(st.epsilon);
  if (st.kind == StateKind::bell) out += " " + st.bell + " p=" + format_double(st.p);
  return out;
}

json event_json(const TransitionEvent& e) {
  json j;
  j["kind"] = to_string(e.kind);
  j["t_death"] = e.t_death ? json(*e.t_death) : json(nullptr);
  j["t_birth"] = e.t_birth ? json(*e.t_birth) : json(nullptr);
  j["duration"] = e.duration;
  j["order"] = to_string(e.order);
  j["trajectory_label"] = e.trajectory_label ? json(to_string(*e.trajectory_label)) : json(nullptr);
  return j;
}

double max_spacing(const std::vector<double>& times) {
  double s = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) s = std::max(s, times[i] - times[i - 1]);
  return s;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError(dir + ": cannot create directory (" + ec.message() + ")");
}

std::string gnuplot_for(const std::vector<std::string>& csv_files, const std::string& title) {
  std::ostringstream gp;
  gp << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel 't'\n"
     << "set ylabel 'negativity'\n"
     << "set title '" << title << "'\n"
     << "plot ";
  for (std::size_t i = 0; i < csv_files.size(); ++i) {
    if (i) gp << ", \\\n     ";
    gp << "'" << csv_files[i] << "' using 1:2 with lines title '" << csv_files[i] << "'";
  }
  gp << "\n";
  return gp.str();
}

}  // namespace

RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides) {
  json doc = load_json_file(path);
  for (const auto& o : overrides) apply_override(doc, o);
  return parse_run_config(doc);
}

Trajectory run_trajectory(const RunConfig& cfg) {
  TrajectoryMeta meta;
  meta.label = describe_state(cfg);
  return sample_trajectory(build_hamiltonian(cfg), build_initial_state(cfg), cfg.evolution, meta);
}

json evolve_manifest(const RunConfig& cfg, const Trajectory& traj,
                     const std::vector<std::string>& outputs) {
  json m;
  m["tool"] = "espkit";
  m["version"] = kToolVersion;
  m["command"] = "evolve";
  m["config"] = to_json(cfg);
  m["state"] = traj.meta.label;
  m["samples"] = traj.times.size();
  m["invariants"] = {{"max_trace_defect", traj.meta.max_trace_defect},
                     {"max_hermiticity_defect", traj.meta.max_hermiticity_defect},
                     {"max_clipped_mass", traj.meta.max_clipped_mass}};
  m["outputs"] = outputs;
  return m;
}

json detect_report(const Trajectory& traj, const DetectionParams& params) {
  json r;
  r["threshold"] = params.threshold;
  r["min_duration"] = params.min_duration.value_or(5.0 * max_spacing(traj.times));
  r["samples"] = traj.times.size();
  std::vector<TransitionEvent> events = detect_transitions(traj, params);
  r["classification"] = nullptr;
  const bool spans_zero = !traj.times.empty() && traj.times.front() < 0.0 &&
                          traj.times.back() > 0.0 &&
                          std::find(traj.times.begin(), traj.times.end(), 0.0) != traj.times.end();
  if (spans_zero) {
    ClassificationOptions co;
    co.threshold = params.threshold;
    co.min_duration = params.min_duration;
    const Classification c = classify_trajectory(traj, co);
    annotate_events(events, c);
    r["classification"] = {{"label", c.label ? json(to_string(*c.label)) : json(nullptr)},
                           {"negativity_at_zero", c.negativity_at_zero},
                           {"cne_at_zero", c.cne_at_zero},
                           {"diagnostics", c.diagnostics}};
  }
  json list = json::array();
  for (const auto& e : events) list.push_back(event_json(e));
  r["events"] = list;
  return r;
}

int cmd_evolve(const EvolveOptions& opts, std::ostream& log) {
  const RunConfig cfg = load_run_config(opts.config_path, opts.overrides);
  const Trajectory traj = run_trajectory(cfg);
  ensure_dir(opts.out_dir);
  const fs::path dir(opts.out_dir);
  std::vector<std::string> outputs;
  auto wants = [&](const char* f) {
    return std::find(cfg.output.formats.begin(), cfg.output.formats.end(), f) !=
           cfg.output.formats.end();
  };
  if (wants("csv")) {
    write_text_file((dir / cfg.output.trajectory).string(), trajectory_csv(traj));
    outputs.push_back(cfg.output.trajectory);
    if (opts.gnuplot_script) {
      write_text_file((dir / "trajectory.gp").string(),
                      gnuplot_for({cfg.output.trajectory}, traj.meta.label));
      outputs.push_back("trajectory.gp");
    }
  }
  if (wants("json")) {
    write_text_file((dir / cfg.output.events).string(),
                    detect_report(traj, cfg.detection).dump(2) + "\n");
    outputs.push_back(cfg.output.events);
  }
  outputs.push_back(cfg.output.manifest);
  write_text_file((dir / cfg.output.manifest).string(),
                  evolve_manifest(cfg, traj, outputs).dump(2) + "\n");
  log << "evolve: " << traj.times.size() << " samples written to " << opts.out_dir << "\n";
  return kExitPass;
}

int cmd_detect(const DetectOptions& opts, std::ostream& out) {
  if (opts.threshold < 0.0) throw ConfigError("--threshold must be nonnegative");
  if (opts.min_duration && !(*opts.min_duration > 0.0)) {
    throw ConfigError("--min-duration must be positive");
  }
  const Trajectory traj = read_trajectory_csv_file(opts.traj_path);
  const json report = detect_report(traj, DetectionParams{opts.threshold, opts.min_duration});
  if (opts.out_path.empty()) {
    out << report.dump(2) << "\n";
  } else {
    write_text_file(opts.out_path, report.dump(2) + "\n");
  }
  return kExitPass;
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  auto parse = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ConfigError("--window '" + text + "': expected lo:hi");
    }
    return v;
  };
  if (colon == std::string::npos) throw ConfigError("--window '" + text + "': expected lo:hi");
  const std::string_view all(text);
  const double lo = parse(all.substr(0, colon));
  const double hi = parse(all.substr(colon + 1));
  if (!(lo > 0.0 && hi > lo)) throw ConfigError("--window '" + text + "': need 0 < lo < hi");
  return {lo, hi};
}

int cmd_fit(const FitCommandOptions& opts, std::ostream& out) {
  const RunConfig cfg = load_run_config(opts.config_path, opts.overrides);
  FitOptions fo;
  std::tie(fo.dt_min, fo.dt_max) = parse_window(opts.window);
  if (opts.parity == "even") {
    fo.parity = FitParity::even;
  } else if (opts.parity == "full") {
    fo.parity = FitParity::full;
  } else {
    throw ConfigError("--parity '" + opts.parity + "': expected even or full");
  }
  fo.n_points = opts.n_points;
  const ShortTimeFit fit = fit_short_time(build_hamiltonian(cfg), build_initial_state(cfg), fo);
  json r;
  r["tool"] = "espkit";
  r["version"] = kToolVersion;
  r["command"] = "fit";
  r["config"] = to_json(cfg);
  r["window"] = {fo.dt_min, fo.dt_max};
  r["parity"] = opts.parity;
  r["n_points"] = fit.dt_grid.size();
  json coeffs = json::object();
  for (std::size_t k = 0; k < fit.coefficients.size(); ++k) {
    if (fo.parity == FitParity::even && k % 2 == 1) continue;
    coeffs["c" + std::to_string(k)] = fit.coefficients[k];
  }
  r["coefficients"] = coeffs;
  r["residual"] = fit.residual;
  r["condition"] = fit.condition;
  r["residual_ok"] = fit.residual_ok();
  out << r.dump(2) << "\n";
  return fit.residual_ok() ? kExitPass : kExitValidation;
}

bool ReproResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.pass; });
}

int cmd_repro(const ReproOptions& opts, std::ostream& log) {
  if (!(opts.tol_rel > 0.0)) throw ConfigError("--tol-rel must be positive");
  const ReproResult res = run_repro(opts.target, opts.tol_rel);
  ensure_dir(opts.out_dir);
  const fs::path dir(opts.out_dir);
  std::vector<std::string> files;
  if (!res.table_csv.empty()) {
    const std::string name = res.target + "_coefficients.csv";
    write_text_file((dir / name).string(), res.table_csv);
    files.push_back(name);
  }
  std::vector<std::string> curve_files;
  for (const auto& [curve, traj] : res.curves) {
    const std::string name = res.target + "_" + curve + ".csv";
    write_text_file((dir / name).string(), trajectory_csv(traj));
    curve_files.push_back(name);
    files.push_back(name);
  }
  if (opts.gnuplot_script && !curve_files.empty()) {
    const std::string name = res.target + ".gp";
    write_text_file((dir / name).string(), gnuplot_for(curve_files, res.target));
    files.push_back(name);
  }
  json summary;
  summary["tool"] = "espkit";
  summary["version"] = kToolVersion;
  summary["target"] = res.target;
  summary["tol_rel"] = opts.tol_rel;
  json checks = json::array();
  std::size_t failed = 0;
  for (const auto& c : res.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!c.pass) {
      ++failed;
      log << "FAIL " << res.target << " " << c.name << ": " << c.detail << "\n";
    }
  }
  summary["checks"] = checks;
  summary["pass"] = res.pass();
  summary["files"] = files;
  const std::string name = res.target + "_summary.json";
  write_text_file((dir / name).string(), summary.dump(2) + "\n");
  log << "repro " << res.target << ": " << res.checks.size() - failed << "/" << res.checks.size()
      << " checks pass\n";
  return res.pass() ? kExitPass : kExitValidation;
}

}  // namespace espkit::cli
