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

#include <catch_amalgamated.hpp>

#include <numbers>

#include "espkit/densemat.hpp"
#include "espkit/errors.hpp"
#include "espkit/hilbert.hpp"
#include "espkit/model.hpp"
#include "oracles/oracles.hpp"

using namespace espkit;
using Catch::Approx;

TEST_CASE("identity spectrum", "[densemat]") {
  const auto s = hermitian_eig(Matrix::identity(4));
  REQUIRE(s.eigenvalues.size() == 4);
  for (double v : s.eigenvalues) CHECK(v == 1.0);
}

TEST_CASE("sigma_y spectrum", "[densemat]") {
  const auto ev = hermitian_eigenvalues(pauli_y());
  CHECK(ev[0] == Approx(-1.0));
  CHECK(ev[1] == Approx(1.0));
}

TEST_CASE("random Hermitian 8x8 matches the inertia oracle", "[densemat]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix h = oracle::random_hermitian(rng, 8);
    const auto ev = hermitian_eigenvalues(h);
    const auto ref = oracle::bisection_eigenvalues(h);
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(ev[i] - ref[i]) < 1e-9);
  }
}

TEST_CASE("eigenvectors reconstruct the matrix", "[densemat]") {
  std::mt19937_64 rng(11);
  const Matrix h = oracle::random_hermitian(rng, 12);
  const auto s = hermitian_eig(h);
  const Matrix rec = spectral_function(s, [](double x) { return cplx{x, 0.0}; });
  CHECK(frobenius_distance(rec, h) < 1e-12 * frobenius_norm(h));
  CHECK(frobenius_distance(s.eigenvectors.adjoint() * s.eigenvectors, Matrix::identity(12)) <
        1e-12);
}

TEST_CASE("eigensolver rejects non-square input", "[densemat]") {
  CHECK_THROWS_AS(hermitian_eig(Matrix(2, 3)), DimensionError);
}

TEST_CASE("exp at t = 0 is the identity", "[densemat]") {
  std::mt19937_64 rng(3);
  const Matrix h = oracle::random_hermitian(rng, 5);
  CHECK(spectral_exp_skew(h, 0.0) == Matrix::identity(5));
}

TEST_CASE("exp of sigma_z at t = pi/2", "[densemat]") {
  const Matrix u = spectral_exp_skew(pauli_z(), std::numbers::pi / 2);
  CHECK(std::abs(u(0, 0) - cplx{0.0, -1.0}) < 1e-15);
  CHECK(std::abs(u(1, 1) - cplx{0.0, 1.0}) < 1e-15);
  CHECK(std::abs(u(0, 1)) < 1e-15);
}

TEST_CASE("exp of the spin-star Hamiltonian matches the Taylor oracle", "[densemat]") {
  const Matrix h = spin_star_hamiltonian({1.0, 1.0, 1.0}, SpinMagnitude{1});
  CHECK(frobenius_distance(spectral_exp_skew(h, 0.3), oracle::taylor_exp(h, 0.3)) < 1e-10);
  const Matrix h3 = spin_star_hamiltonian({1.0, 0.5, -0.7}, SpinMagnitude{3});
  CHECK(frobenius_distance(spectral_exp_skew(h3, 2.0), oracle::taylor_exp(h3, 2.0)) < 1e-10);
}

TEST_CASE("kron identities", "[densemat]") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
  const Matrix yy = kron(pauli_y(), pauli_y());
  const double anti[] = {-1.0, 1.0, 1.0, -1.0};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx want = j == 3 - i ? cplx{anti[i], 0.0} : cplx{0.0, 0.0};
      CHECK(std::abs(yy(i, j) - want) < 1e-15);
    }
  }
}

TEST_CASE("mixed-product property of kron", "[densemat]") {
  std::mt19937_64 rng(5);
  const Matrix a = oracle::ginibre(rng, 2, 2);
  const Matrix b = oracle::ginibre(rng, 3, 3);
  const Matrix c = oracle::ginibre(rng, 2, 2);
  const Matrix d = oracle::ginibre(rng, 3, 3);
  CHECK(frobenius_distance(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
}

TEST_CASE("Hermiticity helpers", "[densemat]") {
  Matrix m{{1.0, cplx{2.0, 1.0}}, {cplx{2.0, -1.0}, 3.0}};
  CHECK(is_hermitian(m));
  CHECK(hermiticity_defect(m) == 0.0);
  m(0, 1) += 1e-6;
  CHECK_FALSE(is_hermitian(m));
  CHECK(is_hermitian(hermitian_part(m)));
}
