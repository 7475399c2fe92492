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

#include "espkit/dynamics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "espkit/errors.hpp"
#include "espkit/parallel.hpp"

namespace espkit {

namespace {

std::string format_time(double t) {
  std::ostringstream os;
  os.precision(17);
  os << t;
  return os.str();
}

Matrix rhs(const Matrix& h, const Matrix& rho) {
  return cplx{0.0, -1.0} * commutator(h, rho);
}

}  // namespace

std::string to_string(EvolutionMethod m) {
  switch (m) {
    case EvolutionMethod::exact:
      return "exact";
    case EvolutionMethod::series:
      return "series";
    case EvolutionMethod::integrator:
      return "integrator";
  }
  return "unknown";
}

void EvolutionSpec::validate() const {
  if (n_steps < 1) throw PreconditionError("evolution: n_steps must be at least 1");
  if (method == EvolutionMethod::series && (series_order < 1 || series_order > 3)) {
    throw PreconditionError("evolution: series_order must be 1, 2 or 3");
  }
  if (!(t_max > t_min)) throw PreconditionError("evolution: t_max must exceed t_min");
  if (emit_negative_times && t_min < 0.0) {
    throw PreconditionError("evolution: emit_negative_times requires t_min >= 0");
  }
  if (!(integrator_step > 0.0)) {
    throw PreconditionError("evolution: integrator_step must be positive");
  }
}

std::vector<double> sample_times(const EvolutionSpec& spec) {
  spec.validate();
  std::vector<double> pos(spec.n_steps + 1);
  const double span = spec.t_max - spec.t_min;
  for (std::size_t k = 0; k <= spec.n_steps; ++k) {
    pos[k] = k == spec.n_steps
                 ? spec.t_max
                 : spec.t_min + span * static_cast<double>(k) / static_cast<double>(spec.n_steps);
  }
  if (!spec.emit_negative_times) return pos;
  std::vector<double> out;
  out.reserve(2 * pos.size());
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    if (*it > 0.0) out.push_back(-*it);
  }
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

Propagator::Propagator(Matrix h) : h_(std::move(h)), spec_(hermitian_eig(h_)) {}

Matrix Propagator::unitary(double t) const { return spectral_exp_skew(spec_, t); }

Matrix Propagator::evolve(const Matrix& rho0, double t) const {
  if (rho0.rows() != h_.rows()) {
    throw DimensionError("Propagator::evolve: state and Hamiltonian dimensions differ");
  }
  if (t == 0.0) return rho0;
  const Matrix u = unitary(t);
  return u * rho0 * u.adjoint();
}

CVector Propagator::evolve(const CVector& psi0, double t) const {
  if (psi0.size() != h_.rows()) {
    throw DimensionError("Propagator::evolve: state and Hamiltonian dimensions differ");
  }
  if (t == 0.0) return psi0;
  return unitary(t) * psi0;
}

DensityOperator evolve_exact(const Matrix& h, const DensityOperator& rho0, double t) {
  if (h.rows() != rho0.dims().total()) {
    throw DimensionError("evolve_exact: state and Hamiltonian dimensions differ");
  }
  return DensityOperator(rho0.dims(), Propagator(h).evolve(rho0.matrix(), t),
                         DensityOperator::Check::structural);
}

Matrix evolve_series(const Matrix& h, const Matrix& rho0, double dt, int order) {
  if (order < 1 || order > 3) {
    throw PreconditionError("evolve_series: order must be 1, 2 or 3");
  }
  if (h.rows() != rho0.rows()) {
    throw DimensionError("evolve_series: state and Hamiltonian dimensions differ");
  }
  Matrix out = rho0;
  Matrix term = rho0;
  for (int n = 1; n < order; ++n) {
    term = cplx{0.0, -dt / n} * commutator(h, term);
    out += term;
  }
  return out;
}

Matrix evolve_series(const Matrix& h, const DensityOperator& rho0, double dt, int order) {
  return evolve_series(h, rho0.matrix(), dt, order);
}

Matrix evolve_integrator(const Matrix& h, const Matrix& rho0, double t, double step) {
  if (h.rows() != rho0.rows()) {
    throw DimensionError("evolve_integrator: state and Hamiltonian dimensions differ");
  }
  if (t == 0.0) return rho0;
  const auto n = static_cast<long>(std::ceil(std::abs(t) / step));
  const double dt = t / static_cast<double>(n);
  Matrix rho = rho0;
  for (long k = 0; k < n; ++k) {
    const Matrix k1 = rhs(h, rho);
    const Matrix k2 = rhs(h, rho + cplx{0.5 * dt, 0.0} * k1);
    const Matrix k3 = rhs(h, rho + cplx{0.5 * dt, 0.0} * k2);
    const Matrix k4 = rhs(h, rho + cplx{dt, 0.0} * k3);
    rho += cplx{dt / 6.0, 0.0} * (k1 + cplx{2.0, 0.0} * (k2 + k3) + k4);
  }
  return rho;
}

std::vector<double> Trajectory::negativities() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.negativity);
  return out;
}

Trajectory sample_trajectory(const Matrix& h, const InitialState& initial,
                             const EvolutionSpec& spec, TrajectoryMeta meta) {
  const std::vector<double> times = sample_times(spec);
  const SystemDims dims = std::visit([](const auto& x) { return x.dims(); }, initial);
  if (h.rows() != dims.total()) {
    throw DimensionError("sample_trajectory: state and Hamiltonian dimensions differ");
  }
  const Ket* ket = std::get_if<Ket>(&initial);
  const Matrix rho0 = ket ? Matrix::outer(ket->amplitudes())
                          : std::get<DensityOperator>(initial).matrix();
  const bool need_spectrum = spec.method == EvolutionMethod::exact;
  const Propagator prop = need_spectrum ? Propagator(h) : Propagator(Matrix::identity(1));

  std::vector<MonotoneSample> samples(times.size());
  std::vector<double> trace_dev(times.size(), 0.0);
  std::vector<double> herm_dev(times.size(), 0.0);

  parallel_for(times.size(), [&](std::size_t i) {
    const double t = times[i];
    try {
      Matrix full;
      switch (spec.method) {
        case EvolutionMethod::exact:
          full = ket ? Matrix::outer(prop.evolve(ket->amplitudes(), t)) : prop.evolve(rho0, t);
          break;
        case EvolutionMethod::series:
          full = evolve_series(h, rho0, t, spec.series_order);
          break;
        case EvolutionMethod::integrator:
          full = evolve_integrator(h, rho0, t, spec.integrator_step);
          break;
      }
      const Matrix ab = partial_trace_c(full, dims);
      trace_dev[i] = std::abs(ab.trace() - cplx{1.0, 0.0});
      herm_dev[i] = hermiticity_defect(ab);
      if (spec.method == EvolutionMethod::series) {
        // Truncated series output is not positive in general; concurrence
        // is undefined there.
        const CneResult c = cne(ab);
        MonotoneSample s;
        s.cne = c.lambda_star;
        s.negative_count = c.negative_count;
        for (double x : hermitian_eigenvalues(partial_transpose_b(ab))) {
          s.negativity += x < 0.0 ? -x : 0.0;
        }
        s.concurrence = std::numeric_limits<double>::quiet_NaN();
        samples[i] = s;
      } else {
        samples[i] = monotone_sample(
            DensityOperator(SystemDims::qubit_pair(), ab, DensityOperator::Check::structural));
      }
    } catch (const Error& e) {
      throw NumericsError("sample_trajectory: t = " + format_time(t) + ": " + e.what());
    }
  });

  meta.method = to_string(spec.method);
  if (spec.method == EvolutionMethod::series) {
    meta.method += ":" + std::to_string(spec.series_order);
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    meta.max_trace_defect = std::max(meta.max_trace_defect, trace_dev[i]);
    meta.max_hermiticity_defect = std::max(meta.max_hermiticity_defect, herm_dev[i]);
    meta.max_clipped_mass = std::max(meta.max_clipped_mass, samples[i].clipped_mass);
  }
  return Trajectory{times, std::move(samples), std::move(meta)};
}

DensityOperator time_reversal(const DensityOperator& rho, SpinMagnitude s) {
  if (rho.dims() != SystemDims::for_spin(s)) {
    throw DimensionError("time_reversal: state dimensions do not match the spin");
  }
  const Matrix rc = spectral_exp_skew(spin_operators(s).y, std::numbers::pi);
  const Matrix u = kron(rc, kron(pauli_y(), pauli_y()));
  return DensityOperator(rho.dims(), u * rho.matrix().conjugate() * u.adjoint(),
                         DensityOperator::Check::structural);
}

}  // namespace espkit
