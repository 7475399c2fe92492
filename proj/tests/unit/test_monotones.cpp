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

#include "espkit/errors.hpp"
#include "espkit/monotones.hpp"
#include "espkit/states.hpp"
#include "oracles/oracles.hpp"

using namespace espkit;
using Catch::Approx;

namespace {

DensityOperator singlet() { return bell_ket({BellFamily::beta, -1, 0.0}).density(); }

DensityOperator up_up() {
  return DensityOperator(SystemDims::qubit_pair(),
                         Matrix::diagonal(std::vector<double>{1.0, 0.0, 0.0, 0.0}));
}

}  // namespace

TEST_CASE("CNE of basic states", "[monotones]") {
  const CneResult s = cne(singlet());
  CHECK(s.lambda_star == Approx(-0.5));
  CHECK(s.negative_count == 1);
  const CneResult p = cne(up_up());
  CHECK(p.lambda_star == Approx(0.0).margin(1e-15));
  CHECK(p.negative_count == 0);
  const CneResult m = cne(bell_mixture({0.505, 0.495, 0.0, 0.0}));
  CHECK(m.lambda_star == Approx(-0.005).margin(1e-15));
  CHECK(m.negative_count == 1);
}

TEST_CASE("negativity of basic states", "[monotones]") {
  CHECK(negativity(singlet()) == Approx(0.5));
  CHECK(negativity(up_up()) == 0.0);
  const DensityOperator w(SystemDims::qubit_pair(), oracle::werner(0.5));
  CHECK(negativity(w) == Approx(0.125));
}

TEST_CASE("Werner family against the closed-form spectrum", "[monotones]") {
  for (double w = 0.0; w <= 1.0; w += 0.05) {
    const DensityOperator rho(SystemDims::qubit_pair(), oracle::werner(w));
    CHECK(cne(rho).lambda_star == Approx(oracle::werner_min_pt(w)).margin(1e-14));
    CHECK(negativity(rho) == Approx(std::max(0.0, -oracle::werner_min_pt(w))).margin(1e-14));
    CHECK(concurrence(rho) == Approx(std::max(0.0, (3.0 * w - 1.0) / 2.0)).margin(1e-12));
  }
}

TEST_CASE("concurrence of basic states", "[monotones]") {
  CHECK(concurrence(singlet()) == Approx(1.0));
  CHECK(concurrence(up_up()) == Approx(0.0).margin(1e-15));
  const Ket k(SystemDims::qubit_pair(), {std::sqrt(0.8), 0.0, 0.0, std::sqrt(0.2)});
  CHECK(concurrence(k.density()) == Approx(0.8));
}

TEST_CASE("concurrence of Bell mixtures is 2 max(w) - 1", "[monotones]") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 50; ++k) {
    const auto w = oracle::random_weights(rng);
    const double wmax = *std::max_element(w.begin(), w.end());
    CHECK(concurrence(bell_mixture(w)) == Approx(std::max(0.0, 2.0 * wmax - 1.0)).margin(1e-12));
  }
}

TEST_CASE("pure-state concurrence against 2|ad - bc|", "[monotones]") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    const Matrix g = oracle::ginibre(rng, 4, 1);
    CVector psi(4);
    double n = 0.0;
    for (std::size_t i = 0; i < 4; ++i) n += std::norm(g(i, 0));
    for (std::size_t i = 0; i < 4; ++i) psi[i] = g(i, 0) / std::sqrt(n);
    const Ket ket(SystemDims::qubit_pair(), psi);
    CHECK(concurrence(ket.density()) == Approx(oracle::pure_concurrence(psi)).margin(1e-12));
  }
}

TEST_CASE("monotone samples", "[monotones]") {
  const MonotoneSample s = monotone_sample(singlet());
  CHECK(s.cne == Approx(-0.5));
  CHECK(s.negativity == Approx(0.5));
  CHECK(s.concurrence == Approx(1.0));
  CHECK(s.negative_count == 1);
  const MonotoneSample p = monotone_sample(up_up());
  CHECK(p.cne >= -1e-12);
  CHECK(p.negativity == 0.0);
  CHECK(p.concurrence == Approx(0.0).margin(1e-12));
  CHECK(p.negative_count == 0);
}

TEST_CASE("monotones reject environment-sized input", "[monotones]") {
  const DensityOperator big(SystemDims{2}, cplx{0.125, 0.0} * Matrix::identity(8));
  CHECK_THROWS_AS(negativity(big), DimensionError);
}

TEST_CASE("concurrence refuses states with large negative mass", "[monotones]") {
  const Matrix bad = Matrix::diagonal(std::vector<double>{0.6, 0.5, -1e-6, -0.099999});
  CHECK_THROWS_AS(
      concurrence(DensityOperator(SystemDims::qubit_pair(), bad, DensityOperator::Check::structural)),
      NumericsError);
}
