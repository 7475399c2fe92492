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

#include "espkit/densemat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "espkit/errors.hpp"

namespace espkit {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiTol = 1e-14;

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("Matrix: entry count " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols);
}

Matrix Matrix::diagonal(const std::vector<cplx>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::outer(const CVector& v) {
  Matrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

Matrix Matrix::conjugate() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = std::conj(x);
  return m;
}

cplx Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace: matrix is not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= -1.0; }
Matrix operator*(cplx s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, cplx s) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("operator*: inner dimensions " +
                         std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CVector operator*(const Matrix& a, const CVector& v) {
  if (a.cols() != v.size()) throw DimensionError("operator*: vector length");
  CVector out(a.rows(), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    s += std::norm(a.entries()[k] - b.entries()[k]);
  }
  return std::sqrt(s);
}

double max_abs_entry(const Matrix& a) {
  double m = 0.0;
  for (const auto& x : a.entries()) m = std::max(m, std::abs(x));
  return m;
}

double hermiticity_defect(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("hermiticity_defect: not square");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

bool is_hermitian(const Matrix& a, double tol) {
  if (!a.is_square()) return false;
  return hermiticity_defect(a) <= tol * std::max(1.0, frobenius_norm(a));
}

Matrix hermitian_part(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("hermitian_part: not square");
  Matrix h(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    }
  }
  return h;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double vector_norm(const CVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

cplx inner(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw DimensionError("inner: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

HermitianSpectrum hermitian_eig(const Matrix& input) {
  if (!input.is_square()) {
    throw DimensionError("hermitian_eig: matrix is " +
                         std::to_string(input.rows()) + "x" +
                         std::to_string(input.cols()));
  }
  const std::size_t n = input.rows();
  Matrix a = hermitian_part(input);
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);
  const double target = kJacobiTol * scale;

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep == kMaxSweeps) {
      throw NumericsError("hermitian_eig: no convergence after " +
                          std::to_string(sweep) + " sweeps (off-diagonal " +
                          std::to_string(off_diagonal_norm(a)) + ")");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        const cplx phase = b / mag;  // e^{i phi}
        const double ap = a(p, p).real();
        const double aq = a(q, q).real();
        const double theta = (aq - ap) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const cplx gpp = c;
        const cplx gpq = s;
        const cplx gqp = -s * std::conj(phase);
        const cplx gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  HermitianSpectrum out;
  out.sweeps = sweep;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& a) {
  return hermitian_eig(a).eigenvalues;
}

Matrix spectral_function(const HermitianSpectrum& spec,
                         const std::function<cplx(double)>& f) {
  const std::size_t n = spec.eigenvalues.size();
  const Matrix& v = spec.eigenvectors;
  std::vector<cplx> fl(n);
  for (std::size_t k = 0; k < n; ++k) fl[k] = f(spec.eigenvalues[k]);
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += v(i, k) * fl[k] * std::conj(v(j, k));
      out(i, j) = s;
    }
  }
  return out;
}

Matrix spectral_exp_skew(const HermitianSpectrum& spec, double t) {
  if (t == 0.0) return Matrix::identity(spec.eigenvalues.size());
  return spectral_function(spec, [t](double lam) {
    return std::polar(1.0, -lam * t);
  });
}

Matrix spectral_exp_skew(const Matrix& h, double t) {
  return spectral_exp_skew(hermitian_eig(h), t);
}

}  // namespace espkit
