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

#include "espkit_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace espkit::cli {

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError((path.empty() ? std::string("config") : path) + ": " + what);
}

void require_object(const json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object");
}

void reject_unknown(const json& node, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  require_object(node, path);
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& item : node.items()) {
    if (!keys.count(item.key())) fail(join(path, item.key()), "unknown key");
  }
}

double get_number(const json& node, const std::string& path) {
  if (!node.is_number()) fail(path, "expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

std::vector<double> get_numbers(const json& node, const std::string& path) {
  if (!node.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(get_number(node[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

long long get_integer(const json& node, const std::string& path) {
  if (!node.is_number_integer()) fail(path, "expected an integer");
  return node.get<long long>();
}

std::string get_string(const json& node, const std::string& path) {
  if (!node.is_string()) fail(path, "expected a string");
  return node.get<std::string>();
}

bool get_bool(const json& node, const std::string& path) {
  if (!node.is_boolean()) fail(path, "expected true or false");
  return node.get<bool>();
}

StateKind parse_state_kind(const std::string& text, const std::string& path) {
  if (text == "product") return StateKind::product;
  if (text == "bell") return StateKind::bell;
  if (text == "mixed_weighting") return StateKind::mixed_weighting;
  if (text == "pure_weighting") return StateKind::pure_weighting;
  fail(path, "unknown state kind '" + text +
                 "' (expected product, bell, mixed_weighting or pure_weighting)");
}

EvolutionMethod parse_method(const std::string& text, const std::string& path) {
  if (text == "exact") return EvolutionMethod::exact;
  if (text == "series") return EvolutionMethod::series;
  if (text == "integrator") return EvolutionMethod::integrator;
  fail(path, "unknown method '" + text + "' (expected exact, series or integrator)");
}

BellKind parse_bell(const std::string& text, double p, const std::string& path) {
  BellKind k;
  k.p = p;
  if (text == "alpha+" || text == "alpha-") {
    k.family = BellFamily::alpha;
  } else if (text == "beta+" || text == "beta-") {
    k.family = BellFamily::beta;
  } else {
    fail(path, "unknown Bell state '" + text + "' (expected alpha+, alpha-, beta+ or beta-)");
  }
  k.sign = text.back() == '+' ? +1 : -1;
  return k;
}

void parse_model(const json& node, RunConfig& cfg) {
  reject_unknown(node, "model", {"j", "s_c"});
  if (!node.contains("j")) fail("model.j", "missing required field");
  const auto j = get_numbers(node["j"], "model.j");
  if (j.size() != 3) fail("model.j", "expected exactly 3 numbers");
  cfg.j = ExchangeCoupling{j[0], j[1], j[2]};
  if (node.contains("s_c")) {
    const double s = get_number(node["s_c"], "model.s_c");
    try {
      cfg.s = SpinMagnitude::from_value(s);
    } catch (const Error& e) {
      fail("model.s_c", e.what());
    }
  }
}

void parse_env(const json& node, EnvSpec& env) {
  reject_unknown(node, "state.env", {"two_m", "weights"});
  if (node.contains("two_m") && node.contains("weights")) {
    fail("state.env", "give either two_m or weights, not both");
  }
  if (node.contains("two_m")) env.two_m = static_cast<int>(get_integer(node["two_m"], "state.env.two_m"));
  if (node.contains("weights")) env.weights = get_numbers(node["weights"], "state.env.weights");
}

void parse_state(const json& node, RunConfig& cfg) {
  reject_unknown(node, "state",
                 {"kind", "weighting_id", "weights", "epsilon", "angles", "p", "bell", "env"});
  StateConfig& st = cfg.state;
  if (!node.contains("kind")) fail("state.kind", "missing required field");
  st.kind = parse_state_kind(get_string(node["kind"], "state.kind"), "state.kind");
  if (node.contains("weighting_id")) {
    const std::string text = get_string(node["weighting_id"], "state.weighting_id");
    st.weighting_id = parse_weighting_id(text);
    if (!st.weighting_id) fail("state.weighting_id", "unknown weighting '" + text + "' (W1..W14)");
  }
  if (node.contains("weights")) {
    const auto w = get_numbers(node["weights"], "state.weights");
    if (w.size() != 4) fail("state.weights", "expected exactly 4 numbers");
    st.weights = std::array<double, 4>{w[0], w[1], w[2], w[3]};
  }
  if (node.contains("epsilon")) st.epsilon = get_number(node["epsilon"], "state.epsilon");
  if (node.contains("angles")) {
    const json& a = node["angles"];
    reject_unknown(a, "state.angles", {"theta_a", "phi_a", "theta_b", "phi_b"});
    if (a.contains("theta_a")) st.angles.theta_a = get_number(a["theta_a"], "state.angles.theta_a");
    if (a.contains("phi_a")) st.angles.phi_a = get_number(a["phi_a"], "state.angles.phi_a");
    if (a.contains("theta_b")) st.angles.theta_b = get_number(a["theta_b"], "state.angles.theta_b");
    if (a.contains("phi_b")) st.angles.phi_b = get_number(a["phi_b"], "state.angles.phi_b");
  }
  if (node.contains("p")) st.p = get_number(node["p"], "state.p");
  if (node.contains("bell")) {
    st.bell = get_string(node["bell"], "state.bell");
    parse_bell(st.bell, 0.0, "state.bell");
  }
  if (node.contains("env")) parse_env(node["env"], st.env);

  const bool weighted =
      st.kind == StateKind::mixed_weighting || st.kind == StateKind::pure_weighting;
  if (weighted && st.weighting_id.has_value() == st.weights.has_value()) {
    fail("state", "weighting states need exactly one of weighting_id or weights");
  }
  if (!weighted && (st.weighting_id || st.weights)) {
    fail("state", "weighting_id and weights apply only to weighting states");
  }
  if (st.kind == StateKind::pure_weighting && node.contains("env")) {
    fail("state.env", "pure weighting states fix the environment levels");
  }
}

void parse_evolution(const json& node, RunConfig& cfg) {
  reject_unknown(node, "evolution",
                 {"t_min", "t_max", "n_steps", "method", "series_order", "emit_negative_times",
                  "integrator_step"});
  EvolutionSpec& ev = cfg.evolution;
  if (node.contains("t_min")) ev.t_min = get_number(node["t_min"], "evolution.t_min");
  if (node.contains("t_max")) ev.t_max = get_number(node["t_max"], "evolution.t_max");
  if (node.contains("n_steps")) {
    const long long n = get_integer(node["n_steps"], "evolution.n_steps");
    if (n < 1) fail("evolution.n_steps", "must be at least 1");
    ev.n_steps = static_cast<std::size_t>(n);
  }
  if (node.contains("method")) {
    ev.method = parse_method(get_string(node["method"], "evolution.method"), "evolution.method");
  }
  if (node.contains("series_order")) {
    ev.series_order = static_cast<int>(get_integer(node["series_order"], "evolution.series_order"));
  }
  if (node.contains("emit_negative_times")) {
    ev.emit_negative_times = get_bool(node["emit_negative_times"], "evolution.emit_negative_times");
  }
  if (node.contains("integrator_step")) {
    ev.integrator_step = get_number(node["integrator_step"], "evolution.integrator_step");
  }
  try {
    ev.validate();
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
}

void parse_detection(const json& node, RunConfig& cfg) {
  reject_unknown(node, "detection", {"threshold", "min_duration"});
  if (node.contains("threshold")) {
    cfg.detection.threshold = get_number(node["threshold"], "detection.threshold");
    if (cfg.detection.threshold < 0.0) fail("detection.threshold", "must be nonnegative");
  }
  if (node.contains("min_duration") && !node["min_duration"].is_null()) {
    cfg.detection.min_duration = get_number(node["min_duration"], "detection.min_duration");
    if (!(*cfg.detection.min_duration > 0.0)) fail("detection.min_duration", "must be positive");
  }
}

void parse_output(const json& node, RunConfig& cfg) {
  reject_unknown(node, "output", {"trajectory", "manifest", "events", "formats"});
  OutputConfig& out = cfg.output;
  if (node.contains("trajectory")) out.trajectory = get_string(node["trajectory"], "output.trajectory");
  if (node.contains("manifest")) out.manifest = get_string(node["manifest"], "output.manifest");
  if (node.contains("events")) out.events = get_string(node["events"], "output.events");
  if (node.contains("formats")) {
    const json& f = node["formats"];
    if (!f.is_array()) fail("output.formats", "expected an array of strings");
    out.formats.clear();
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::string path = "output.formats[" + std::to_string(i) + "]";
      const std::string v = get_string(f[i], path);
      if (v != "csv" && v != "json") fail(path, "unknown format '" + v + "' (csv or json)");
      out.formats.push_back(v);
    }
  }
}

}  // namespace

std::string to_string(StateKind k) {
  switch (k) {
    case StateKind::product:
      return "product";
    case StateKind::bell:
      return "bell";
    case StateKind::mixed_weighting:
      return "mixed_weighting";
    case StateKind::pure_weighting:
      return "pure_weighting";
  }
  return "?";
}

RunConfig parse_run_config(const json& doc) {
  reject_unknown(doc, "", {"model", "state", "evolution", "detection", "output"});
  RunConfig cfg;
  if (!doc.contains("model")) fail("model", "missing required section");
  if (!doc.contains("state")) fail("state", "missing required section");
  parse_model(doc["model"], cfg);
  parse_state(doc["state"], cfg);
  if (doc.contains("evolution")) parse_evolution(doc["evolution"], cfg);
  if (doc.contains("detection")) parse_detection(doc["detection"], cfg);
  if (doc.contains("output")) parse_output(doc["output"], cfg);
  // Building the state once surfaces range errors at load time.
  build_initial_state(cfg);
  return cfg;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("--set '" + assignment + "': expected path=value");
  }
  const std::string path = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  json* node = &doc;
  std::string walked;
  std::istringstream parts(path);
  std::string key;
  std::vector<std::string> keys;
  while (std::getline(parts, key, '.')) {
    if (key.empty()) throw ConfigError("--set '" + assignment + "': empty path component");
    keys.push_back(key);
  }
  for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
    walked = join(walked, keys[i]);
    if (!node->is_object()) throw ConfigError(walked + ": cannot descend into a non-object");
    json& child = (*node)[keys[i]];
    if (child.is_null()) child = json::object();
    node = &child;
  }
  if (!node->is_object()) throw ConfigError(path + ": parent is not an object");
  (*node)[keys.back()] = value;
}

json to_json(const RunConfig& cfg) {
  json doc;
  doc["model"] = {{"j", {cfg.j.jx, cfg.j.jy, cfg.j.jz}}, {"s_c", cfg.s.value()}};
  const StateConfig& st = cfg.state;
  json state;
  state["kind"] = to_string(st.kind);
  switch (st.kind) {
    case StateKind::product:
      state["angles"] = {{"theta_a", st.angles.theta_a},
                         {"phi_a", st.angles.phi_a},
                         {"theta_b", st.angles.theta_b},
                         {"phi_b", st.angles.phi_b}};
      break;
    case StateKind::bell:
      state["bell"] = st.bell;
      state["p"] = st.p;
      break;
    case StateKind::mixed_weighting:
    case StateKind::pure_weighting:
      if (st.weighting_id) {
        state["weighting_id"] = to_string(*st.weighting_id);
        state["epsilon"] = st.epsilon;
      } else {
        state["weights"] = *st.weights;
      }
      break;
  }
  if (st.kind == StateKind::product || st.kind == StateKind::bell) {
    if (!st.env.weights.empty()) {
      state["env"] = {{"weights", st.env.weights}};
    } else {
      state["env"] = {{"two_m", st.env.two_m.value_or(cfg.s.two_s)}};
    }
  }
  doc["state"] = state;
  const EvolutionSpec& ev = cfg.evolution;
  doc["evolution"] = {{"t_min", ev.t_min},
                      {"t_max", ev.t_max},
                      {"n_steps", ev.n_steps},
                      {"method", to_string(ev.method)},
                      {"series_order", ev.series_order},
                      {"emit_negative_times", ev.emit_negative_times},
                      {"integrator_step", ev.integrator_step}};
  json det;
  det["threshold"] = cfg.detection.threshold;
  det["min_duration"] =
      cfg.detection.min_duration ? json(*cfg.detection.min_duration) : json(nullptr);
  doc["detection"] = det;
  doc["output"] = {{"trajectory", cfg.output.trajectory},
                   {"manifest", cfg.output.manifest},
                   {"events", cfg.output.events},
                   {"formats", cfg.output.formats}};
  return doc;
}

Matrix build_hamiltonian(const RunConfig& cfg) { return spin_star_hamiltonian(cfg.j, cfg.s); }

InitialState build_initial_state(const RunConfig& cfg) {
  const StateConfig& st = cfg.state;
  try {
    auto env_matrix = [&]() {
      if (!st.env.weights.empty()) {
        ProductSpinSpec probe;
        probe.env = st.env.weights;
        product_initial(probe, cfg.s);  // validates the weights against 2S+1
        return Matrix::diagonal(st.env.weights);
      }
      const int two_m = st.env.two_m.value_or(cfg.s.two_s);
      if (std::abs(two_m) > cfg.s.two_s || (cfg.s.two_s - two_m) % 2 != 0) {
        fail("state.env.two_m", "level " + std::to_string(two_m) + " is not valid for 2S=" +
                                    std::to_string(cfg.s.two_s));
      }
      std::vector<double> diag(cfg.s.dim(), 0.0);
      diag[static_cast<std::size_t>((cfg.s.two_s - two_m) / 2)] = 1.0;
      return Matrix::diagonal(diag);
    };
    switch (st.kind) {
      case StateKind::product: {
        ProductSpinSpec spec;
        spec.theta_a = st.angles.theta_a;
        spec.phi_a = st.angles.phi_a;
        spec.theta_b = st.angles.theta_b;
        spec.phi_b = st.angles.phi_b;
        if (!st.env.weights.empty()) {
          spec.env = st.env.weights;
        } else {
          spec.env = st.env.two_m.value_or(cfg.s.two_s);
        }
        return product_initial(spec, cfg.s);
      }
      case StateKind::bell: {
        const Ket ab = bell_ket(parse_bell(st.bell, st.p, "state.bell"));
        return DensityOperator(SystemDims::for_spin(cfg.s),
                               kron(env_matrix(), Matrix::outer(ab.amplitudes())),
                               DensityOperator::Check::structural);
      }
      case StateKind::mixed_weighting:
      case StateKind::pure_weighting: {
        const EspWeighting w = st.weighting_id ? esp_weighting(*st.weighting_id, st.epsilon)
                                               : EspWeighting::custom(*st.weights);
        if (st.kind == StateKind::pure_weighting) return pure_initial(w, cfg.s);
        if (st.env.weights.empty() && !st.env.two_m) return mixed_initial(w, cfg.s);
        return DensityOperator(SystemDims::for_spin(cfg.s),
                               kron(env_matrix(), bell_mixture(w.weights).matrix()),
                               DensityOperator::Check::structural);
      }
    }
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("state: ") + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("state: ") + e.what());
  }
  throw ConfigError("state: unsupported kind");
}

}  // namespace espkit::cli
