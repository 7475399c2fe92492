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

#include "espkit_cli/reference.hpp"

namespace espkit::cli {

const std::array<EspRow, 14>& esp_rows() {
  using W = WeightingId;
  using L = TrajectoryLabel;
  static const std::array<EspRow, 14> rows = {{
      {W::W1, +1, L::p6},
      {W::W2, +1, L::p6},
      {W::W3, +1, L::p6},
      {W::W4, +1, L::p6},
      {W::W5, +1, L::p6},
      {W::W6, 0, L::p3},
      {W::W7, +1, L::p6},
      {W::W8, +1, L::p6},
      {W::W9, +1, L::p6},
      {W::W10, -1, L::p4},
      {W::W11, +1, L::p6},
      {W::W12, +1, L::p6},
      {W::W13, +1, L::p6},
      {W::W14, -1, L::p4},
  }};
  return rows;
}

const std::array<ExchangeCoupling, 4>& product_couplings() {
  static const std::array<ExchangeCoupling, 4> js = {{
      {1.0, 1.0, 1.0},
      {1.0, -1.0, 1.0},
      {1.0, 0.5, 1.0},
      {1.0, -0.5, 1.0},
  }};
  return js;
}

const std::array<ProductConfig, 3>& product_configs() {
  static const std::array<ProductConfig, 3> cs = {{
      {FormulaKind::table1_uuu, true, true, "uuu"},
      {FormulaKind::table1_uud, true, false, "uud"},
      {FormulaKind::table1_udd, false, false, "udd"},
  }};
  return cs;
}

SpinMagnitude purifying_spin(const EspWeighting& w) {
  return SpinMagnitude{w.classification().bell_count - 1};
}

}  // namespace espkit::cli
