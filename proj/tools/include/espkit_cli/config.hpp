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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "espkit/espkit.hpp"
#include "json.hpp"

namespace espkit::cli {

using json = nlohmann::ordered_json;

enum class StateKind { product, bell, mixed_weighting, pure_weighting };

std::string to_string(StateKind k);

struct Angles {
  double theta_a = 0.0;
  double phi_a = 0.0;
  double theta_b = 0.0;
  double phi_b = 0.0;
};

/** Environment: either a pure S_z level (2m) or diagonal weights, descending m. */
struct EnvSpec {
  std::optional<int> two_m;
  std::vector<double> weights;
};

struct StateConfig {
  StateKind kind = StateKind::product;
  std::optional<WeightingId> weighting_id;
  std::optional<std::array<double, 4>> weights;  // custom weighting
  double epsilon = 0.0;
  Angles angles;
  double p = 0.0;
  std::string bell = "beta-";
  EnvSpec env;
};

struct OutputConfig {
  std::string trajectory = "trajectory.csv";
  std::string manifest = "manifest.json";
  std::string events = "events.json";
  std::vector<std::string> formats = {"csv", "json"};
};

struct RunConfig {
  ExchangeCoupling j{1.0, 1.0, 1.0};
  SpinMagnitude s{1};
  StateConfig state;
  EvolutionSpec evolution;
  DetectionParams detection;
  OutputConfig output;
};

/**
 * Parses and validates a configuration document. Unknown keys and type
 * mismatches raise ConfigError with the dotted path of the field.
 */
RunConfig parse_run_config(const json& doc);

/** Reads a JSON file and parses it. */
json load_json_file(const std::string& path);

/**
 * Applies "a.b.c=value" to the document. The value is read as JSON when it
 * parses as JSON, and as a string otherwise.
 */
void apply_override(json& doc, const std::string& assignment);

/** Every field of the configuration, defaults included. */
json to_json(const RunConfig& cfg);

Matrix build_hamiltonian(const RunConfig& cfg);

/** @throws ConfigError when the state fields do not describe a valid state. */
InitialState build_initial_state(const RunConfig& cfg);

}  // namespace espkit::cli
