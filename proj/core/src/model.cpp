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

#include "espkit/model.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "espkit/errors.hpp"

namespace espkit {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Matrix spin_star_hamiltonian(const ExchangeCoupling& j, SpinMagnitude s) {
  const SystemDims dims = SystemDims::for_spin(s);
  const SpinOperators sc = spin_operators(s);
  const Matrix i2 = Matrix::identity(2);
  const Matrix sigma[3] = {pauli_x(), pauli_y(), pauli_z()};
  const Matrix* spin[3] = {&sc.x, &sc.y, &sc.z};
  const double jv[3] = {j.jx, j.jy, j.jz};
  Matrix h(dims.total(), dims.total());
  for (int a = 0; a < 3; ++a) {
    if (jv[a] == 0.0) continue;
    const Matrix qubits = kron(sigma[a], i2) + kron(i2, sigma[a]);
    h += cplx{jv[a], 0.0} * kron(*spin[a], qubits);
  }
  return h;
}

Matrix direct_hamiltonian(const ExchangeCoupling& jdir) {
  return cplx{jdir.jx, 0.0} * kron(pauli_x(), pauli_x()) +
         cplx{jdir.jy, 0.0} * kron(pauli_y(), pauli_y()) +
         cplx{jdir.jz, 0.0} * kron(pauli_z(), pauli_z());
}

double direct_immediate_concurrence(const ExchangeCoupling& jdir, double theta_b,
                                    double dt, const WarningHandler& warn) {
  if (std::abs(dt) > kDirectDtWindow) {
    const std::string msg = "direct_immediate_concurrence: |dt| = " +
                            std::to_string(std::abs(dt)) +
                            " is outside the leading-order window";
    if (warn) {
      warn(msg);
    } else {
      std::clog << "warning: " << msg << '\n';
    }
  }
  return 2.0 * std::abs(dt * (jdir.jy - jdir.jx * std::cos(theta_b)));
}

double direct_immediate_concurrence_free(const ExchangeCoupling& jdir, const Vec3& n_a,
                                         const Vec3& n_b, double dt) {
  if (std::abs(norm(n_a) - 1.0) > 1e-12 || std::abs(norm(n_b) - 1.0) > 1e-12) {
    throw PreconditionError("direct_immediate_concurrence_free: n_a and n_b must be unit vectors");
  }
  const Vec3 j = jdir.as_vec();
  const Vec3 ab = cross(n_a, n_b);
  const double value = dot(j, ab) + dot(j, cross(n_a, ab)) * dot(n_a, n_b);
  return 2.0 * std::abs(dt) * std::abs(value);
}

CVector qubit_spinor(double theta, double phi) {
  double c = std::cos(0.5 * theta);
  double s = std::sin(0.5 * theta);
  // Snap the cos(pi/2) residue so basis states are exact.
  if (std::abs(c) < 1e-15) c = 0.0;
  if (std::abs(s) < 1e-15) s = 0.0;
  return {cplx{c, 0.0}, std::polar(s, phi)};
}

ProductSpinSpec ProductSpinSpec::basis(bool a_up, bool b_up, int two_m) {
  ProductSpinSpec spec;
  spec.theta_a = a_up ? 0.0 : std::numbers::pi;
  spec.theta_b = b_up ? 0.0 : std::numbers::pi;
  spec.env = two_m;
  return spec;
}

}  // namespace espkit
