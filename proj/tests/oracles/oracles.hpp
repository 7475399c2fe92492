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

// Reference implementations used only by the tests. Each one takes a route
// that shares no code with the library function it checks.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "espkit/densemat.hpp"
#include "espkit/model.hpp"

namespace espkit::oracle {

/**
 * Number of eigenvalues of the Hermitian matrix a below x: the count of
 * negative pivots of an unpivoted LDL^H factorization of a - x I
 * (Sylvester inertia, i.e. a Sturm count over the leading principal minors
 * of the characteristic polynomial).
 */
inline std::size_t count_below(const Matrix& a, double x) {
  const std::size_t n = a.rows();
  std::vector<cplx> m(n * n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = a(i, j) - (i == j ? x : 0.0);
      scale = std::max(scale, std::abs(m[i * n + j]));
    }
  }
  const double tiny = 1e-300 + 1e-30 * scale;
  std::size_t negatives = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = m[k * n + k].real();
    if (std::abs(d) < tiny) d = -tiny;
    if (d < 0.0) ++negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx l = m[i * n + k] / d;
      for (std::size_t j = k + 1; j < n; ++j) m[i * n + j] -= l * std::conj(m[j * n + k]);
    }
  }
  return negatives;
}

/** Ascending eigenvalues of a Hermitian matrix by inertia bisection. */
inline std::vector<double> bisection_eigenvalues(const Matrix& a) {
  const std::size_t n = a.rows();
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::abs(a(i, i).real());
    for (std::size_t j = 0; j < n; ++j) r += j == i ? 0.0 : std::abs(a(i, j));
    radius = std::max(radius, r);
  }
  radius = radius * 1.01 + 1e-12;
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lo = -radius;
    double hi = radius;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * radius; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(a, mid) > k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out[k] = 0.5 * (lo + hi);
  }
  return out;
}

/** exp(-i h t) by scaling and squaring a 64-term Taylor series. */
inline Matrix taylor_exp(const Matrix& h, double t) {
  const std::size_t n = h.rows();
  Matrix x = cplx{0.0, -t} * h;
  double nrm = frobenius_norm(x);
  int squarings = 0;
  while (nrm > 0.5) {
    nrm *= 0.5;
    ++squarings;
  }
  x = cplx{std::ldexp(1.0, -squarings), 0.0} * x;
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = (cplx{1.0 / k, 0.0} * term) * x;
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/** Tr_C by explicit index summation: [rho]_{ab,a'b'} = sum_m rho_{mab,ma'b'}. */
inline Matrix index_partial_trace(const Matrix& rho, std::size_t dim_c) {
  Matrix out(4, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t ap = 0; ap < 2; ++ap)
        for (std::size_t bp = 0; bp < 2; ++bp) {
          cplx s = 0.0;
          for (std::size_t m = 0; m < dim_c; ++m) {
            s += rho(m * 4 + a * 2 + b, m * 4 + ap * 2 + bp);
          }
          out(a * 2 + b, ap * 2 + bp) = s;
        }
  return out;
}

/** Concurrence 2|ad - bc| of a normalized two-qubit pure state. */
inline double pure_concurrence(const CVector& psi) {
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

/** w |singlet><singlet| + (1 - w) I/4. */
inline Matrix werner(double w) {
  Matrix m(4, 4);
  const double r = 0.5;
  m(1, 1) = r;
  m(2, 2) = r;
  m(1, 2) = -r;
  m(2, 1) = -r;
  Matrix out = cplx{w, 0.0} * m;
  for (std::size_t i = 0; i < 4; ++i) out(i, i) += (1.0 - w) / 4.0;
  return out;
}

/** Smallest partial-transpose eigenvalue of the Werner state. */
inline double werner_min_pt(double w) { return std::min((1.0 - 3.0 * w) / 4.0, (1.0 + w) / 4.0); }

/**
 * First-order concurrence of exp(-i h dt) psi0 for a product state psi0:
 * C = |dt| |psi0^T (Y h + h^T Y) psi0| with Y = sigma_y (x) sigma_y.
 */
inline double first_order_concurrence(const Matrix& h, const CVector& psi0, double dt) {
  Matrix y(4, 4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  const Matrix m = y * h + h.transpose() * y;
  cplx s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s += psi0[i] * m(i, j) * psi0[j];
  return std::abs(dt) * std::abs(s);
}

/** Rodrigues rotation of v about the unit axis k by angle a. */
inline Vec3 rotate(const Vec3& v, const Vec3& k, double a) {
  const double c = std::cos(a);
  const double s = std::sin(a);
  const Vec3 kxv = cross(k, v);
  const double kv = dot(k, v);
  return Vec3{v.x * c + kxv.x * s + k.x * kv * (1 - c), v.y * c + kxv.y * s + k.y * kv * (1 - c),
              v.z * c + kxv.z * s + k.z * kv * (1 - c)};
}

// ---------------------------------------------------------------------------
// Seeded random generators

inline Matrix ginibre(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx{g(rng), g(rng)};
  return m;
}

/** G G^dagger / Tr for a rows x rank Ginibre matrix G. */
inline Matrix random_density(std::mt19937_64& rng, std::size_t n, std::size_t rank) {
  const Matrix g = ginibre(rng, n, rank);
  Matrix rho = g * g.adjoint();
  const cplx tr = rho.trace();
  return cplx{1.0 / tr.real(), 0.0} * rho;
}

inline Matrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  const Matrix g = ginibre(rng, n, n);
  return cplx{0.5, 0.0} * (g + g.adjoint());
}

/** Haar-ish unitary from Gram-Schmidt on a Ginibre matrix. */
inline Matrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  Matrix g = ginibre(rng, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx p = 0.0;
      for (std::size_t i = 0; i < n; ++i) p += std::conj(g(i, k)) * g(i, j);
      for (std::size_t i = 0; i < n; ++i) g(i, j) -= p * g(i, k);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) g(i, j) /= nrm;
  }
  return g;
}

/** Convex mixture of random product states (separable by construction). */
inline Matrix random_separable(std::mt19937_64& rng, std::size_t terms) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix rho(4, 4);
  double total = 0.0;
  for (std::size_t k = 0; k < terms; ++k) {
    const Matrix a = random_density(rng, 2, 1 + k % 2);
    const Matrix b = random_density(rng, 2, 1 + (k / 2) % 2);
    const double w = u(rng);
    rho += cplx{w, 0.0} * kron(a, b);
    total += w;
  }
  return cplx{1.0 / total, 0.0} * rho;
}

/** Uniform point on the probability simplex. */
inline std::array<double, 4> random_weights(std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::array<double, 4> w{};
  double s = 0.0;
  for (auto& x : w) {
    x = e(rng);
    s += x;
  }
  for (auto& x : w) x /= s;
  return w;
}

}  // namespace espkit::oracle
