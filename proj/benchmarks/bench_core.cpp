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

#include <benchmark/benchmark.h>

#include <random>

#include "espkit/espkit.hpp"

namespace {

using namespace espkit;

Matrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = cplx{g(rng), g(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

void bm_hermitian_eig(benchmark::State& state) {
  const Matrix a = random_hermitian(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(a));
}
BENCHMARK(bm_hermitian_eig)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_propagator(benchmark::State& state) {
  const SpinMagnitude s{static_cast<int>(state.range(0))};
  const Propagator prop(spin_star_hamiltonian({0.4, -0.9, 1.3}, s));
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    benchmark::DoNotOptimize(prop.unitary(t));
  }
}
BENCHMARK(bm_propagator)->Arg(1)->Arg(3)->Arg(7);

void bm_monotone_sample(benchmark::State& state) {
  const DensityOperator rho =
      partial_trace_c(mixed_initial(esp_weighting(WeightingId::W13, 0.2), SpinMagnitude{1}));
  for (auto _ : state) benchmark::DoNotOptimize(monotone_sample(rho));
}
BENCHMARK(bm_monotone_sample);

void bm_trajectory(benchmark::State& state) {
  const SpinMagnitude s{3};
  const Matrix h = spin_star_hamiltonian({-0.5, -0.5, -1.0}, s);
  const InitialState init = pure_initial(esp_weighting(WeightingId::W13, 0.01), s);
  EvolutionSpec spec;
  spec.t_max = 1.5;
  spec.n_steps = static_cast<std::size_t>(state.range(0));
  spec.emit_negative_times = true;
  for (auto _ : state) benchmark::DoNotOptimize(sample_trajectory(h, init, spec));
}
BENCHMARK(bm_trajectory)->Arg(100)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
