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

#include <string>
#include <variant>
#include <vector>

#include "espkit/densemat.hpp"
#include "espkit/hilbert.hpp"
#include "espkit/model.hpp"
#include "espkit/monotones.hpp"

namespace espkit {

enum class EvolutionMethod { exact, series, integrator };

std::string to_string(EvolutionMethod m);

struct EvolutionSpec {
  EvolutionMethod method = EvolutionMethod::exact;
  int series_order = 3;  // k in {1, 2, 3}, series method only
  double t_min = 0.0;
  double t_max = 1.0;
  std::size_t n_steps = 100;
  bool emit_negative_times = false;
  double integrator_step = 1e-4;

  /** @throws PreconditionError on an invalid combination of fields. */
  void validate() const;
};

/** Sorted sample times of a spec, including the mirrored negative branch. */
std::vector<double> sample_times(const EvolutionSpec& spec);

/** Caches the spectrum of H so that U(t) costs one spectral map per t. */
class Propagator {
 public:
  explicit Propagator(Matrix h);

  const Matrix& hamiltonian() const { return h_; }
  const HermitianSpectrum& spectrum() const { return spec_; }

  Matrix unitary(double t) const;
  Matrix evolve(const Matrix& rho0, double t) const;
  CVector evolve(const CVector& psi0, double t) const;

 private:
  Matrix h_;
  HermitianSpectrum spec_;
};

/** U rho0 U^dagger with U = exp(-i H t). */
DensityOperator evolve_exact(const Matrix& h, const DensityOperator& rho0, double t);

/**
 * Commutator series sum_{n<k} (-i dt)^n / n! ad_H^n(rho0), i.e. truncation
 * after the dt^0, dt^1 or dt^2 term for k = 1, 2, 3. The result is
 * Hermitian with unit trace but need not be positive.
 */
Matrix evolve_series(const Matrix& h, const Matrix& rho0, double dt, int order);
Matrix evolve_series(const Matrix& h, const DensityOperator& rho0, double dt, int order);

/** Classical fourth-order Runge-Kutta on d rho/dt = -i[H, rho]. */
Matrix evolve_integrator(const Matrix& h, const Matrix& rho0, double t, double step = 1e-4);

struct TrajectoryMeta {
  std::string label;   // free-form state description
  std::string method;  // filled by sample_trajectory
  ExchangeCoupling j;
  SpinMagnitude s;
  double max_trace_defect = 0.0;
  double max_hermiticity_defect = 0.0;
  double max_clipped_mass = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<MonotoneSample> samples;
  TrajectoryMeta meta;

  std::vector<double> negativities() const;
};

using InitialState = std::variant<DensityOperator, Ket>;

/**
 * Evolves the initial state to every time of the spec, traces out C and
 * records the monotones. Times are processed in parallel; the result does
 * not depend on the worker count.
 *
 * @throws NumericsError naming the offending time if a sample fails
 */
Trajectory sample_trajectory(const Matrix& h, const InitialState& initial,
                             const EvolutionSpec& spec, TrajectoryMeta meta = {});

/** Theta rho Theta^dagger for Theta = exp(-i pi S_y^C) (x) sigma_y (x) sigma_y K. */
DensityOperator time_reversal(const DensityOperator& rho, SpinMagnitude s);

}  // namespace espkit
