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

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace espkit {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/**
 * Dense complex matrix in row-major storage.
 *
 * Sized for the operators of this library (at most 32x32), so every
 * operation is a plain loop without blocking or expression templates.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix diagonal(const std::vector<cplx>& d);
  static Matrix diagonal(const std::vector<double>& d);
  /** |v><v| for a column vector v. */
  static Matrix outer(const CVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<cplx>& entries() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conjugate() const;
  cplx trace() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(cplx s);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cplx s, Matrix a);
Matrix operator*(Matrix a, cplx s);
CVector operator*(const Matrix& a, const CVector& v);

double frobenius_norm(const Matrix& a);
double frobenius_distance(const Matrix& a, const Matrix& b);
double max_abs_entry(const Matrix& a);
/** max_ij |A_ij - conj(A_ji)|. */
double hermiticity_defect(const Matrix& a);
/** Hermitian within tol * max(1, ||A||_F). */
bool is_hermitian(const Matrix& a, double tol = 1e-12);
Matrix hermitian_part(const Matrix& a);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

double vector_norm(const CVector& v);
cplx inner(const CVector& a, const CVector& b);
CVector kron(const CVector& a, const CVector& b);

struct HermitianSpectrum {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // columns
  int sweeps = 0;
};

/**
 * Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
 * rotations. The input is symmetrized as (A + A^dagger)/2 first.
 *
 * @throws DimensionError for non-square input
 * @throws NumericsError if 100 sweeps do not reach convergence
 */
HermitianSpectrum hermitian_eig(const Matrix& a);
std::vector<double> hermitian_eigenvalues(const Matrix& a);

/** V diag(f(lambda)) V^dagger. */
Matrix spectral_function(const HermitianSpectrum& spec,
                         const std::function<cplx(double)>& f);

/** exp(-i H t) from a precomputed spectrum of H. */
Matrix spectral_exp_skew(const HermitianSpectrum& spec, double t);
Matrix spectral_exp_skew(const Matrix& h, double t);

}  // namespace espkit
