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

#include "espkit/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "espkit/errors.hpp"

namespace espkit {

SpinMagnitude SpinMagnitude::from_value(double s) {
  const double twice = 2.0 * s;
  const double r = std::round(twice);
  if (!(s >= 0.0) || std::abs(twice - r) > 1e-12 || r > 64.0) {
    throw PreconditionError("spin magnitude must be a non-negative half-integer, got " +
                            std::to_string(s));
  }
  return SpinMagnitude{static_cast<int>(r)};
}

SpinOperators spin_operators(SpinMagnitude s) {
  const std::size_t d = s.dim();
  const double S = s.value();
  Matrix sp(d, d);
  Matrix sz(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double m = S - static_cast<double>(k);
    sz(k, k) = m;
    // S+ |m> = sqrt(S(S+1) - m(m+1)) |m+1>, and |m+1> sits at index k-1
    if (k > 0) sp(k - 1, k) = std::sqrt(S * (S + 1.0) - m * (m + 1.0));
  }
  const Matrix sm = sp.adjoint();
  SpinOperators ops;
  ops.x = cplx{0.5, 0.0} * (sp + sm);
  ops.y = cplx{0.0, -0.5} * (sp - sm);
  ops.z = sz;
  return ops;
}

Matrix pauli_x() { return Matrix{{0.0, 1.0}, {1.0, 0.0}}; }
Matrix pauli_y() { return Matrix{{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}; }
Matrix pauli_z() { return Matrix{{1.0, 0.0}, {0.0, -1.0}}; }

Matrix embed(const Matrix& op, Slot slot, const SystemDims& dims) {
  const std::size_t want = slot == Slot::C ? dims.dim_c : 2;
  if (!op.is_square() || op.rows() != want) {
    throw DimensionError("embed: operator is " + std::to_string(op.rows()) + "x" +
                         std::to_string(op.cols()) + ", slot needs " +
                         std::to_string(want));
  }
  const Matrix ic = Matrix::identity(dims.dim_c);
  const Matrix i2 = Matrix::identity(2);
  switch (slot) {
    case Slot::C:
      return kron(op, kron(i2, i2));
    case Slot::A:
      return kron(ic, kron(op, i2));
    case Slot::B:
    default:
      return kron(ic, kron(i2, op));
  }
}

Matrix partial_trace_c(const Matrix& rho, const SystemDims& dims) {
  if (!rho.is_square() || rho.rows() != dims.total()) {
    throw DimensionError("partial_trace_c: expected " + std::to_string(dims.total()) +
                         "x" + std::to_string(dims.total()) + " input");
  }
  Matrix out(4, 4);
  for (std::size_t m = 0; m < dims.dim_c; ++m) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) out(i, j) += rho(4 * m + i, 4 * m + j);
    }
  }
  return out;
}

Matrix partial_transpose_b(const Matrix& rho_ab) {
  if (rho_ab.rows() != 4 || rho_ab.cols() != 4) {
    throw DimensionError("partial_transpose_b: expected a 4x4 two-qubit matrix");
  }
  Matrix out(4, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t ap = 0; ap < 2; ++ap) {
        for (std::size_t bp = 0; bp < 2; ++bp) {
          out(2 * a + b, 2 * ap + bp) = rho_ab(2 * a + bp, 2 * ap + b);
        }
      }
    }
  }
  return out;
}

Matrix partial_transpose_a(const Matrix& rho_ab) {
  if (rho_ab.rows() != 4 || rho_ab.cols() != 4) {
    throw DimensionError("partial_transpose_a: expected a 4x4 two-qubit matrix");
  }
  Matrix out(4, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t ap = 0; ap < 2; ++ap) {
        for (std::size_t bp = 0; bp < 2; ++bp) {
          out(2 * a + b, 2 * ap + bp) = rho_ab(2 * ap + b, 2 * a + bp);
        }
      }
    }
  }
  return out;
}

DensityDiagnostics measure_density(const Matrix& m) {
  DensityDiagnostics d;
  d.trace_defect = std::abs(m.trace() - cplx{1.0, 0.0});
  d.hermiticity_defect = hermiticity_defect(m);
  const auto ev = hermitian_eigenvalues(m);
  d.min_eigenvalue = ev.empty() ? 0.0 : ev.front();
  return d;
}

DensityOperator::DensityOperator(SystemDims dims, Matrix m, Check check)
    : dims_(dims), m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() != dims_.total()) {
    throw DimensionError("DensityOperator: matrix is " + std::to_string(m_.rows()) +
                         "x" + std::to_string(m_.cols()) + ", dims need " +
                         std::to_string(dims_.total()));
  }
  const double tr = std::abs(m_.trace() - cplx{1.0, 0.0});
  if (tr > kTraceTol) {
    throw PreconditionError("DensityOperator: trace deviates from 1 by " +
                            std::to_string(tr));
  }
  const double herm = hermiticity_defect(m_);
  if (herm > kHermitianTol) {
    throw PreconditionError("DensityOperator: Hermiticity defect " +
                            std::to_string(herm));
  }
  if (check == Check::full) {
    const double lo = hermitian_eigenvalues(m_).front();
    if (lo < -kPsdTol) {
      throw PreconditionError("DensityOperator: negative eigenvalue " +
                              std::to_string(lo));
    }
  }
}

DensityDiagnostics DensityOperator::diagnostics() const { return measure_density(m_); }

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

Ket::Ket(SystemDims dims, CVector amplitudes) : dims_(dims), amps_(std::move(amplitudes)) {
  if (amps_.size() != dims_.total()) {
    throw DimensionError("Ket: " + std::to_string(amps_.size()) +
                         " amplitudes, dims need " + std::to_string(dims_.total()));
  }
  const double dev = std::abs(vector_norm(amps_) - 1.0);
  if (dev > kNormTol) {
    throw PreconditionError("Ket: norm deviates from 1 by " + std::to_string(dev));
  }
  const double n = vector_norm(amps_);
  for (auto& a : amps_) a /= n;
}

DensityOperator Ket::density() const {
  return DensityOperator(dims_, Matrix::outer(amps_), DensityOperator::Check::structural);
}

DensityOperator partial_trace_c(const DensityOperator& rho) {
  return DensityOperator(SystemDims::qubit_pair(),
                         partial_trace_c(rho.matrix(), rho.dims()),
                         DensityOperator::Check::structural);
}

}  // namespace espkit
