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

#include "espkit/states.hpp"

#include <cmath>
#include <numeric>

#include "espkit/errors.hpp"

namespace espkit {

namespace {

constexpr std::array<BellKind, 4> kBellOrder = {
    BellKind{BellFamily::alpha, +1, 0.0}, BellKind{BellFamily::alpha, -1, 0.0},
    BellKind{BellFamily::beta, +1, 0.0}, BellKind{BellFamily::beta, -1, 0.0}};

// Common denominator of every table entry.
constexpr long kLcm = 12;

void check_table_sum(const std::array<RationalWeight, 4>& row, WeightingId id) {
  long a = 0;
  long b = 0;
  for (const auto& w : row) {
    a += w.a * (kLcm / w.d);
    b += w.b * (kLcm / w.d);
  }
  if (a != kLcm || b != 0) {
    throw NumericsError("weighting " + to_string(id) + " does not sum to 1");
  }
}

CVector env_level(SpinMagnitude s, int two_m) {
  if (std::abs(two_m) > s.two_s || (s.two_s - two_m) % 2 != 0) {
    throw PreconditionError("environment level 2m=" + std::to_string(two_m) +
                            " is not valid for 2S=" + std::to_string(s.two_s));
  }
  CVector v(s.dim(), cplx{0.0, 0.0});
  v[static_cast<std::size_t>((s.two_s - two_m) / 2)] = 1.0;
  return v;
}

}  // namespace

Ket bell_ket(const BellKind& kind) {
  if (!(kind.p >= 0.0 && kind.p < 1.0)) {
    throw PreconditionError("bell_ket: p must lie in [0, 1), got " + std::to_string(kind.p));
  }
  if (kind.sign != 1 && kind.sign != -1) {
    throw PreconditionError("bell_ket: sign must be +1 or -1");
  }
  const double hi = std::sqrt(0.5 * (1.0 + kind.p));
  const double lo = kind.sign * std::sqrt(0.5 * (1.0 - kind.p));
  CVector amps(4, cplx{0.0, 0.0});
  if (kind.family == BellFamily::alpha) {
    amps[0] = hi;
    amps[3] = lo;
  } else {
    amps[1] = hi;
    amps[2] = lo;
  }
  return Ket(SystemDims::qubit_pair(), std::move(amps));
}

std::optional<WeightingId> parse_weighting_id(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'W' && text[0] != 'w')) return std::nullopt;
  int n = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    n = 10 * n + (c - '0');
    if (n > 14) return std::nullopt;
  }
  if (n < 1) return std::nullopt;
  return static_cast<WeightingId>(n);
}

std::string to_string(WeightingId id) {
  return "W" + std::to_string(static_cast<int>(id));
}

std::array<RationalWeight, 4> weighting_table(WeightingId id) {
  constexpr RationalWeight z{0, 0, 1};
  constexpr RationalWeight hp{1, 1, 2};   // (1+eps)/2
  constexpr RationalWeight hm{1, -1, 2};  // (1-eps)/2
  constexpr RationalWeight qm{1, -1, 4};  // (1-eps)/4
  constexpr RationalWeight sm{1, -1, 6};  // (1-eps)/6
  std::array<RationalWeight, 4> row;
  switch (id) {
    case WeightingId::W1: row = {hp, hm, z, z}; break;
    case WeightingId::W2: row = {hp, z, hm, z}; break;
    case WeightingId::W3: row = {hp, z, z, hm}; break;
    case WeightingId::W4: row = {z, hp, hm, z}; break;
    case WeightingId::W5: row = {z, hp, z, hm}; break;
    case WeightingId::W6: row = {z, z, hp, hm}; break;
    case WeightingId::W7: row = {hp, qm, qm, z}; break;
    case WeightingId::W8: row = {z, hp, qm, qm}; break;
    case WeightingId::W9: row = {qm, z, hp, qm}; break;
    case WeightingId::W10: row = {qm, qm, z, hp}; break;
    case WeightingId::W11: row = {hp, sm, sm, sm}; break;
    case WeightingId::W12: row = {sm, hp, sm, sm}; break;
    case WeightingId::W13: row = {sm, sm, hp, sm}; break;
    case WeightingId::W14: row = {sm, sm, sm, hp}; break;
  }
  check_table_sum(row, id);
  return row;
}

EspWeighting EspWeighting::custom(const std::array<double, 4>& weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw PreconditionError("custom weighting: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-14) {
    throw PreconditionError("custom weighting: weights sum to " + std::to_string(sum));
  }
  EspWeighting out;
  out.weights = weights;
  return out;
}

EspClass EspWeighting::classification() const {
  int count = 0;
  if (id) {
    for (const auto& w : weighting_table(*id)) count += w.is_identically_zero() ? 0 : 1;
  } else {
    for (double w : weights) count += w > 0.0 ? 1 : 0;
  }
  return EspClass{count > 2, count};
}

EspWeighting esp_weighting(WeightingId id, double eps) {
  if (!(eps > -1.0 && eps < 1.0)) {
    throw PreconditionError("esp_weighting: epsilon must lie in (-1, 1), got " +
                            std::to_string(eps));
  }
  EspWeighting out;
  out.id = id;
  out.epsilon = eps;
  const auto row = weighting_table(id);
  for (std::size_t i = 0; i < 4; ++i) out.weights[i] = row[i](eps);
  return out;
}

DensityOperator bell_mixture(const std::array<double, 4>& weights) {
  Matrix rho(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    if (weights[i] == 0.0) continue;
    rho += cplx{weights[i], 0.0} * Matrix::outer(bell_ket(kBellOrder[i]).amplitudes());
  }
  return DensityOperator(SystemDims::qubit_pair(), std::move(rho));
}

DensityOperator mixed_initial(const EspWeighting& w, SpinMagnitude s) {
  const Matrix env = Matrix::outer(env_level(s, s.two_s));
  return DensityOperator(SystemDims::for_spin(s), kron(env, bell_mixture(w.weights).matrix()),
                         DensityOperator::Check::structural);
}

Ket pure_initial(const EspWeighting& w, SpinMagnitude s) {
  std::size_t nonzero = 0;
  for (double x : w.weights) nonzero += x > 0.0 ? 1 : 0;
  if (nonzero != s.dim()) {
    throw PreconditionError("pure_initial: " + std::to_string(nonzero) +
                            " nonzero weights but 2S+1 = " + std::to_string(s.dim()));
  }
  CVector psi(SystemDims::for_spin(s).total(), cplx{0.0, 0.0});
  std::size_t level = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(w.weights[i] > 0.0)) continue;
    const CVector bell = bell_ket(kBellOrder[i]).amplitudes();
    const double amp = std::sqrt(w.weights[i]);
    for (std::size_t k = 0; k < 4; ++k) psi[4 * level + k] += amp * bell[k];
    ++level;
  }
  return Ket(SystemDims::for_spin(s), std::move(psi));
}

DensityOperator product_initial(const ProductSpinSpec& spec, SpinMagnitude s) {
  const Matrix qubits = Matrix::outer(
      kron(qubit_spinor(spec.theta_a, spec.phi_a), qubit_spinor(spec.theta_b, spec.phi_b)));
  Matrix env;
  if (const int* two_m = std::get_if<int>(&spec.env)) {
    env = Matrix::outer(env_level(s, *two_m));
  } else {
    const auto& weights = std::get<std::vector<double>>(spec.env);
    if (weights.size() != s.dim()) {
      throw PreconditionError("product_initial: " + std::to_string(weights.size()) +
                              " environment weights for 2S+1 = " + std::to_string(s.dim()));
    }
    double sum = 0.0;
    for (double x : weights) {
      if (!(x >= 0.0)) throw PreconditionError("product_initial: negative environment weight");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw PreconditionError("product_initial: environment weights sum to " +
                              std::to_string(sum));
    }
    env = Matrix::diagonal(weights);
  }
  return DensityOperator(SystemDims::for_spin(s), kron(env, qubits),
                         DensityOperator::Check::structural);
}

}  // namespace espkit
