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
#include <string_view>

#include "espkit/hilbert.hpp"
#include "espkit/model.hpp"

namespace espkit {

enum class BellFamily { alpha, beta };

/**
 * alpha_p^{+-} = sqrt((1+p)/2)|uu> +- sqrt((1-p)/2)|dd>,
 * beta_p^{+-}  = sqrt((1+p)/2)|ud> +- sqrt((1-p)/2)|du>.
 */
struct BellKind {
  BellFamily family = BellFamily::alpha;
  int sign = +1;
  double p = 0.0;
};

Ket bell_ket(const BellKind& kind);

enum class WeightingId { W1 = 1, W2, W3, W4, W5, W6, W7, W8, W9, W10, W11, W12, W13, W14 };

std::optional<WeightingId> parse_weighting_id(std::string_view text);
std::string to_string(WeightingId id);

/** (a + b eps) / d with integer coefficients. */
struct RationalWeight {
  long a = 0;
  long b = 0;
  long d = 1;

  double operator()(double eps) const {
    return (static_cast<double>(a) + static_cast<double>(b) * eps) / static_cast<double>(d);
  }
  bool is_identically_zero() const { return a == 0 && b == 0; }
};

/** Weights on (alpha+, alpha-, beta+, beta-). */
std::array<RationalWeight, 4> weighting_table(WeightingId id);

struct EspClass {
  bool penetrable = false;
  int bell_count = 0;
};

struct EspWeighting {
  std::optional<WeightingId> id;  // empty for custom weightings
  double epsilon = 0.0;
  std::array<double, 4> weights{};

  /** @throws PreconditionError unless weights are nonnegative and sum to 1. */
  static EspWeighting custom(const std::array<double, 4>& weights);

  EspClass classification() const;
};

/** @throws PreconditionError if eps is outside (-1, 1). */
EspWeighting esp_weighting(WeightingId id, double eps);

/** sum_i w_i |i><i| over the four Bell states at p = 0. */
DensityOperator bell_mixture(const std::array<double, 4>& weights);

/** |m=S><m=S| (x) bell_mixture(w). */
DensityOperator mixed_initial(const EspWeighting& w, SpinMagnitude s);

/**
 * sum_i sqrt(w_i) |i^C>|i> over the nonzero weights, with environment
 * levels assigned in descending m.
 *
 * @throws PreconditionError if the nonzero-weight count differs from 2S+1
 */
Ket pure_initial(const EspWeighting& w, SpinMagnitude s);

/** Fully separable C (x) A (x) B state. */
DensityOperator product_initial(const ProductSpinSpec& spec, SpinMagnitude s);

}  // namespace espkit
