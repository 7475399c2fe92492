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

#include "espkit/hilbert.hpp"

namespace espkit {

/** Boolean "entangled?" decisions compare a monotone against this. */
inline constexpr double kEntanglementThreshold = 1e-9;
/** Eigenvalues of rho^{T_B} below -kNegativeEigenvalueTol count as negative. */
inline constexpr double kNegativeEigenvalueTol = 1e-12;
/** Largest negative eigenvalue mass repaired to zero before failing. */
inline constexpr double kClipLimit = 1e-9;

struct CneResult {
  double lambda_star = 0.0;
  int negative_count = 0;
};

struct MonotoneSample {
  double cne = 0.0;
  double negativity = 0.0;
  double concurrence = 0.0;
  int negative_count = 0;
  double clipped_mass = 0.0;  // PSD repair applied inside concurrence
};

/** Smallest eigenvalue of rho^{T_B}. */
CneResult cne(const DensityOperator& rho_ab);
/** Same, for 4x4 Hermitian input that need not be positive (series output). */
CneResult cne(const Matrix& rho_ab);

/** Sum of |negative eigenvalues| of rho^{T_B}. */
double negativity(const DensityOperator& rho_ab);

/**
 * Wootters concurrence max(0, 2 gamma_max - sum gamma) with gamma the
 * square roots of the spectrum of sqrt(rho) rho' sqrt(rho).
 *
 * @throws NumericsError if more than kClipLimit of negative mass must be
 *   clipped from rho or from the intermediate product
 */
double concurrence(const DensityOperator& rho_ab);

MonotoneSample monotone_sample(const DensityOperator& rho_ab);

}  // namespace espkit
