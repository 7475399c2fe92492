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
#include <vector>

#include "espkit/analysis.hpp"

namespace espkit::cli {

/** Sign of epsilon at which a weighting is tabulated: +1, -1, or 0 for both. */
struct EspRow {
  WeightingId id;
  int sign;
  TrajectoryLabel label;
};

/** Mixed-state ESP rows with their expected trajectory labels. */
const std::array<EspRow, 14>& esp_rows();

inline constexpr double kEspEpsilon = 1e-2;
inline const ExchangeCoupling kEspCoupling{-0.5, -0.5, -1.0};

/** Couplings used for the product-state panels. */
const std::array<ExchangeCoupling, 4>& product_couplings();

/** Product configurations |up,a,b>, as (a_up, b_up). */
struct ProductConfig {
  FormulaKind formula;
  bool a_up;
  bool b_up;
  const char* tag;
};

const std::array<ProductConfig, 3>& product_configs();

/** Spin magnitude that purifies a weighting with n nonzero Bell weights. */
SpinMagnitude purifying_spin(const EspWeighting& w);

}  // namespace espkit::cli
