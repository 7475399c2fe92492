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

#include <cstddef>

#include "espkit/densemat.hpp"

namespace espkit {

/** Spin quantum number S stored as the integer 2S. */
struct SpinMagnitude {
  int two_s = 1;

  /** Accepts S as a half-integer value, e.g. 0.5, 1, 1.5. */
  static SpinMagnitude from_value(double s);

  double value() const { return 0.5 * two_s; }
  std::size_t dim() const { return static_cast<std::size_t>(two_s) + 1; }
  bool operator==(const SpinMagnitude&) const = default;
};

/**
 * Layout of the composite space C (x) A (x) B. A reduced two-qubit space
 * is represented with dim_c == 1.
 */
struct SystemDims {
  std::size_t dim_c = 1;
  static constexpr std::size_t dim_a = 2;
  static constexpr std::size_t dim_b = 2;

  static SystemDims for_spin(SpinMagnitude s) { return SystemDims{s.dim()}; }
  static SystemDims qubit_pair() { return SystemDims{1}; }

  std::size_t total() const { return dim_c * dim_a * dim_b; }
  bool is_qubit_pair() const { return dim_c == 1; }
  bool operator==(const SystemDims&) const = default;
};

enum class Slot { C, A, B };

struct SpinOperators {
  Matrix x;
  Matrix y;
  Matrix z;
};

/** Spin-S matrices in the S_z eigenbasis ordered m = S, S-1, ..., -S. */
SpinOperators spin_operators(SpinMagnitude s);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/** op acting on one slot, identity on the other two. */
Matrix embed(const Matrix& op, Slot slot, const SystemDims& dims);

/** [Tr_C rho]_{ab,a'b'} = sum_m rho_{mab,ma'b'}. */
Matrix partial_trace_c(const Matrix& rho, const SystemDims& dims);
/** [rho^{T_B}]_{ab,a'b'} = rho_{ab',a'b} on a 4x4 two-qubit matrix. */
Matrix partial_transpose_b(const Matrix& rho_ab);
Matrix partial_transpose_a(const Matrix& rho_ab);

/** Measured deviations from the density-operator invariants. */
struct DensityDiagnostics {
  double trace_defect = 0.0;
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
};

/**
 * Unit-trace Hermitian positive semidefinite operator on C (x) A (x) B
 * (or on A (x) B alone).
 */
class DensityOperator {
 public:
  enum class Check {
    full,       // trace, Hermiticity and positivity
    structural  // trace and Hermiticity only
  };

  static constexpr double kTraceTol = 1e-12;
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kPsdTol = 1e-10;

  DensityOperator(SystemDims dims, Matrix m, Check check = Check::full);

  const SystemDims& dims() const { return dims_; }
  const Matrix& matrix() const { return m_; }

  DensityDiagnostics diagnostics() const;
  double purity() const;

 private:
  SystemDims dims_;
  Matrix m_;
};

DensityDiagnostics measure_density(const Matrix& m);

class Ket {
 public:
  static constexpr double kNormTol = 1e-12;

  Ket(SystemDims dims, CVector amplitudes);

  const SystemDims& dims() const { return dims_; }
  const CVector& amplitudes() const { return amps_; }
  DensityOperator density() const;

 private:
  SystemDims dims_;
  CVector amps_;
};

DensityOperator partial_trace_c(const DensityOperator& rho);

}  // namespace espkit
