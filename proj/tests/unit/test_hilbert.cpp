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

#include "espkit/dynamics.hpp"
#include "espkit/errors.hpp"
#include "espkit/hilbert.hpp"
#include "espkit/model.hpp"
#include "espkit/monotones.hpp"
#include "espkit/states.hpp"
#include "oracles/oracles.hpp"

using namespace espkit;
using Catch::Approx;

namespace {

double commutator_defect(const SpinOperators& s) {
  const cplx i{0.0, 1.0};
  double d = max_abs_entry(commutator(s.x, s.y) - i * s.z);
  d = std::max(d, max_abs_entry(commutator(s.y, s.z) - i * s.x));
  d = std::max(d, max_abs_entry(commutator(s.z, s.x) - i * s.y));
  return d;
}

}  // namespace

TEST_CASE("spin-1/2 operators are half the Pauli matrices", "[hilbert]") {
  const SpinOperators s = spin_operators(SpinMagnitude{1});
  CHECK(max_abs_entry(s.x - cplx{0.5, 0.0} * pauli_x()) < 1e-15);
  CHECK(max_abs_entry(s.y - cplx{0.5, 0.0} * pauli_y()) < 1e-15);
  CHECK(max_abs_entry(s.z - cplx{0.5, 0.0} * pauli_z()) < 1e-15);
}

TEST_CASE("spin-1 S_z is diag(1, 0, -1)", "[hilbert]") {
  const SpinOperators s = spin_operators(SpinMagnitude{2});
  CHECK(max_abs_entry(s.z - Matrix::diagonal(std::vector<double>{1.0, 0.0, -1.0})) < 1e-15);
}

TEST_CASE("spin algebra for S up to 5/2", "[hilbert]") {
  for (int two_s = 1; two_s <= 5; ++two_s) {
    const SpinMagnitude m{two_s};
    const SpinOperators s = spin_operators(m);
    CHECK(commutator_defect(s) < 1e-12);
    const double casimir = m.value() * (m.value() + 1.0);
    const Matrix c2 = s.x * s.x + s.y * s.y + s.z * s.z;
    CHECK(max_abs_entry(c2 - cplx{casimir, 0.0} * Matrix::identity(m.dim())) < 1e-12);
  }
}

TEST_CASE("spin magnitude parsing", "[hilbert]") {
  CHECK(SpinMagnitude::from_value(1.5).two_s == 3);
  CHECK_THROWS_AS(SpinMagnitude::from_value(0.3), PreconditionError);
  CHECK_THROWS_AS(SpinMagnitude::from_value(-1.0), PreconditionError);
}

TEST_CASE("embedding into the A slot", "[hilbert]") {
  const SystemDims dims = SystemDims::for_spin(SpinMagnitude{1});
  const Matrix want = kron(kron(Matrix::identity(2), pauli_z()), Matrix::identity(2));
  CHECK(embed(pauli_z(), Slot::A, dims) == want);
}

TEST_CASE("disjoint slots commute and traces multiply", "[hilbert]") {
  std::mt19937_64 rng(17);
  const SystemDims dims = SystemDims::for_spin(SpinMagnitude{2});
  const Matrix x = oracle::ginibre(rng, 2, 2);
  const Matrix y = oracle::ginibre(rng, 2, 2);
  CHECK(max_abs_entry(commutator(embed(x, Slot::A, dims), embed(y, Slot::B, dims))) < 1e-13);
  const Matrix c = oracle::ginibre(rng, 3, 3);
  CHECK(std::abs(embed(c, Slot::C, dims).trace() - 4.0 * c.trace()) < 1e-13);
  CHECK_THROWS_AS(embed(c, Slot::A, dims), DimensionError);
}

TEST_CASE("partial trace of a product recovers the AB factor", "[hilbert]") {
  std::mt19937_64 rng(19);
  const Matrix c = oracle::random_density(rng, 3, 3);
  const Matrix ab = oracle::random_density(rng, 4, 4);
  const SystemDims dims = SystemDims::for_spin(SpinMagnitude{2});
  CHECK(frobenius_distance(partial_trace_c(kron(c, ab), dims), ab) < 1e-15);
}

TEST_CASE("singlet marginal has negativity 1/2", "[hilbert]") {
  const Ket singlet = bell_ket({BellFamily::beta, -1, 0.0});
  const Matrix up = Matrix::diagonal(std::vector<double>{1.0, 0.0});
  const DensityOperator rho(SystemDims::for_spin(SpinMagnitude{1}),
                            kron(up, singlet.density().matrix()));
  CHECK(negativity(partial_trace_c(rho)) == Approx(0.5));
}

TEST_CASE("partial trace of an evolved state matches index summation", "[hilbert]") {
  const SpinMagnitude s{1};
  const Matrix h = spin_star_hamiltonian({1.0, 1.0, 1.0}, s);
  const DensityOperator rho0 = product_initial(ProductSpinSpec::basis(true, false, 1), s);
  const DensityOperator rho = evolve_exact(h, rho0, 0.5);
  const Matrix ab = partial_trace_c(rho.matrix(), rho.dims());
  CHECK(std::abs(ab.trace() - 1.0) < 1e-12);
  CHECK(max_abs_entry(ab - oracle::index_partial_trace(rho.matrix(), 2)) < 1e-15);
}

TEST_CASE("partial transpose of a product basis state", "[hilbert]") {
  const Matrix uu = Matrix::diagonal(std::vector<double>{1.0, 0.0, 0.0, 0.0});
  CHECK(partial_transpose_b(uu) == uu);
}

TEST_CASE("partial transpose of the singlet", "[hilbert]") {
  const Matrix s = bell_ket({BellFamily::beta, -1, 0.0}).density().matrix();
  const auto ev = hermitian_eigenvalues(partial_transpose_b(s));
  CHECK(ev[0] == Approx(-0.5));
  for (int i = 1; i < 4; ++i) CHECK(ev[i] == Approx(0.5));
}

TEST_CASE("partial transposes on A and B share a spectrum", "[hilbert]") {
  std::mt19937_64 rng(23);
  const Matrix rho = oracle::random_density(rng, 4, 4);
  const auto a = hermitian_eigenvalues(partial_transpose_a(rho));
  const auto b = hermitian_eigenvalues(partial_transpose_b(rho));
  for (int i = 0; i < 4; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-13);
}

TEST_CASE("Bell mixture partial-transpose spectrum is 1/2 - w", "[hilbert]") {
  const std::array<double, 4> w{0.1, 0.2, 0.3, 0.4};
  const auto ev = hermitian_eigenvalues(partial_transpose_b(bell_mixture(w).matrix()));
  const std::vector<double> want{0.5 - 0.4, 0.5 - 0.3, 0.5 - 0.2, 0.5 - 0.1};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - want[i]) < 1e-12);
}

TEST_CASE("density operator validation", "[hilbert]") {
  const SystemDims ab = SystemDims::qubit_pair();
  CHECK_THROWS_AS(DensityOperator(ab, Matrix::identity(4)), PreconditionError);
  Matrix neg = Matrix::diagonal(std::vector<double>{1.1, -0.1, 0.0, 0.0});
  CHECK_THROWS_AS(DensityOperator(ab, neg), PreconditionError);
  CHECK_NOTHROW(DensityOperator(ab, neg, DensityOperator::Check::structural));
  CHECK_THROWS_AS(DensityOperator(ab, Matrix::identity(3)), DimensionError);
  const DensityOperator mixed(ab, cplx{0.25, 0.0} * Matrix::identity(4));
  CHECK(mixed.purity() == Approx(0.25));
}

TEST_CASE("ket normalization", "[hilbert]") {
  CHECK_THROWS_AS(Ket(SystemDims::qubit_pair(), {1.0, 1.0, 0.0, 0.0}), PreconditionError);
  const Ket k(SystemDims::qubit_pair(), {0.0, 1.0, 0.0, 0.0});
  CHECK(k.density().purity() == Approx(1.0));
}
