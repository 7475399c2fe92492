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

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "espkit/densemat.hpp"
#include "espkit/hilbert.hpp"

namespace espkit {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

/** Exchange vector (Jx, Jy, Jz) in units of |Jz|. */
struct ExchangeCoupling {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;

  ExchangeCoupling scaled(double f) const { return {f * jx, f * jy, f * jz}; }
  ExchangeCoupling operator-() const { return scaled(-1.0); }
  Vec3 as_vec() const { return {jx, jy, jz}; }
  bool operator==(const ExchangeCoupling&) const = default;
};

/** sum_a J_a (S_a^C sigma_a^A + S_a^C sigma_a^B) on C (x) A (x) B. */
Matrix spin_star_hamiltonian(const ExchangeCoupling& j, SpinMagnitude s);

/** sum_a J_a sigma_a^A sigma_a^B on A (x) B. */
Matrix direct_hamiltonian(const ExchangeCoupling& jdir);

using WarningHandler = std::function<void(const std::string&)>;

/** Validity window of the leading-order direct-exchange formulas. */
inline constexpr double kDirectDtWindow = 0.05;

/**
 * Leading-order concurrence 2|dt (Jy - Jx cos theta_b)| for qubit A along z
 * and qubit B at polar angle theta_b in the xz plane, both evolving under
 * the direct exchange. Calls warn (default: std::clog) when |dt| exceeds
 * kDirectDtWindow.
 */
double direct_immediate_concurrence(const ExchangeCoupling& jdir, double theta_b,
                                    double dt, const WarningHandler& warn = {});

/**
 * Coordinate-free form
 * 2|dt| |J.(nA x nB) + J.[nA x (nA x nB)] (nA.nB)|.
 *
 * @throws PreconditionError if n_a or n_b is not a unit vector
 */
double direct_immediate_concurrence_free(const ExchangeCoupling& jdir, const Vec3& n_a,
                                         const Vec3& n_b, double dt);

/** Single-qubit spinor cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>. */
CVector qubit_spinor(double theta, double phi);

/**
 * Product initial state. The environment is either a pure S_z level
 * (stored as 2m) or a diagonal mixture with weights in descending-m order.
 */
struct ProductSpinSpec {
  double theta_a = 0.0;
  double phi_a = 0.0;
  double theta_b = 0.0;
  double phi_b = 0.0;
  std::variant<int, std::vector<double>> env = 1;

  static ProductSpinSpec basis(bool a_up, bool b_up, int two_m);
};

}  // namespace espkit
