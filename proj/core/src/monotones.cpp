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

#include "espkit/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "espkit/errors.hpp"

namespace espkit {

namespace {

void require_qubit_pair(const Matrix& m, const char* what) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw DimensionError(std::string(what) + ": expected a 4x4 two-qubit operator");
  }
}

CneResult cne_from_spectrum(const std::vector<double>& ev) {
  CneResult r;
  r.lambda_star = ev.front();
  for (double x : ev) r.negative_count += x < -kNegativeEigenvalueTol ? 1 : 0;
  return r;
}

double negativity_from_spectrum(const std::vector<double>& ev) {
  double n = 0.0;
  for (double x : ev) n += x < 0.0 ? -x : 0.0;
  return n;
}

// Clips eigenvalue dust to zero; returns the clipped mass.
double clip_spectrum(std::vector<double>& ev, const char* what) {
  double clipped = 0.0;
  for (double& x : ev) {
    if (x < 0.0) {
      clipped += -x;
      x = 0.0;
    }
  }
  if (clipped > kClipLimit) {
    throw NumericsError(std::string(what) + ": negative eigenvalue mass " +
                        std::to_string(clipped) + " exceeds the clip limit");
  }
  return clipped;
}

constexpr double kRankCut = 1e-14;

struct ConcurrenceResult {
  double value = 0.0;
  double clipped = 0.0;
};

ConcurrenceResult concurrence_impl(const Matrix& rho) {
  HermitianSpectrum spec = hermitian_eig(rho);
  ConcurrenceResult r;
  r.clipped = clip_spectrum(spec.eigenvalues, "concurrence");
  // Numerical rank cut: eigenvalue dust would otherwise enter as sqrt(dust).
  const double cut = kRankCut * spec.eigenvalues.back();
  for (double& x : spec.eigenvalues) {
    if (x <= cut) x = 0.0;
  }
  const Matrix sqrt_rho =
      spectral_function(spec, [](double lam) { return cplx{std::sqrt(lam), 0.0}; });
  const Matrix yy = kron(pauli_y(), pauli_y());
  // gamma_i are the singular values of A = sqrt(rho) Y sqrt(rho)^*, read off
  // the Hermitian dilation [[0, A], [A^dagger, 0]] to avoid squaring them.
  const Matrix a = sqrt_rho * yy * sqrt_rho.conjugate();
  Matrix dilation(8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = a(i, j);
      dilation(4 + j, i) = std::conj(a(i, j));
    }
  }
  const std::vector<double> ev = hermitian_eigenvalues(dilation);
  double sum = 0.0;
  double top = 0.0;
  for (std::size_t k = 4; k < 8; ++k) {
    const double g = std::abs(ev[k]);
    sum += g;
    top = std::max(top, g);
  }
  r.value = std::max(0.0, 2.0 * top - sum);
  return r;
}

}  // namespace

CneResult cne(const Matrix& rho_ab) {
  require_qubit_pair(rho_ab, "cne");
  return cne_from_spectrum(hermitian_eigenvalues(partial_transpose_b(rho_ab)));
}

CneResult cne(const DensityOperator& rho_ab) { return cne(rho_ab.matrix()); }

double negativity(const DensityOperator& rho_ab) {
  require_qubit_pair(rho_ab.matrix(), "negativity");
  return negativity_from_spectrum(
      hermitian_eigenvalues(partial_transpose_b(rho_ab.matrix())));
}

double concurrence(const DensityOperator& rho_ab) {
  require_qubit_pair(rho_ab.matrix(), "concurrence");
  return concurrence_impl(rho_ab.matrix()).value;
}

MonotoneSample monotone_sample(const DensityOperator& rho_ab) {
  require_qubit_pair(rho_ab.matrix(), "monotone_sample");
  const auto ev = hermitian_eigenvalues(partial_transpose_b(rho_ab.matrix()));
  const CneResult c = cne_from_spectrum(ev);
  const ConcurrenceResult conc = concurrence_impl(rho_ab.matrix());
  MonotoneSample s;
  s.cne = c.lambda_star;
  s.negative_count = c.negative_count;
  s.negativity = negativity_from_spectrum(ev);
  s.concurrence = conc.value;
  s.clipped_mass = conc.clipped;
  return s;
}

}  // namespace espkit
