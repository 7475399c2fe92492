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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "espkit/analysis.hpp"
#include "espkit/errors.hpp"

namespace espkit {

namespace {

constexpr double kMaxCondition = 1e12;
constexpr std::size_t kMinPoints = 12;

// Dense real least squares by Householder QR: returns x minimizing
// ||A x - b|| and the R factor (p x p, row-major).
struct QrSolution {
  std::vector<double> x;
  std::vector<double> r;
};

QrSolution householder_lstsq(std::vector<double> a, std::vector<double> b, std::size_t m,
                             std::size_t p) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * p + j]; };
  for (std::size_t k = 0; k < p; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < m; ++i) norm += at(i, k) * at(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = at(k, k) > 0.0 ? -norm : norm;
    std::vector<double> v(m - k);
    for (std::size_t i = k; i < m; ++i) v[i - k] = at(i, k);
    v[0] -= alpha;
    double vv = 0.0;
    for (double x : v) vv += x * x;
    if (vv == 0.0) continue;
    for (std::size_t j = k; j < p; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += v[i - k] * at(i, j);
      s = 2.0 * s / vv;
      for (std::size_t i = k; i < m; ++i) at(i, j) -= s * v[i - k];
    }
    double s = 0.0;
    for (std::size_t i = k; i < m; ++i) s += v[i - k] * b[i];
    s = 2.0 * s / vv;
    for (std::size_t i = k; i < m; ++i) b[i] -= s * v[i - k];
  }
  QrSolution out;
  out.x.assign(p, 0.0);
  out.r.assign(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) out.r[i * p + j] = at(i, j);
  }
  for (std::size_t ii = p; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < p; ++j) s -= at(ii, j) * out.x[j];
    if (at(ii, ii) == 0.0) throw ResolutionError("fit: rank-deficient design matrix");
    out.x[ii] = s / at(ii, ii);
  }
  return out;
}

double condition_number(const std::vector<double>& r, std::size_t p) {
  Matrix rtr(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < p; ++k) s += r[k * p + i] * r[k * p + j];
      rtr(i, j) = s;
    }
  }
  const auto ev = hermitian_eigenvalues(rtr);
  if (!(ev.front() > 0.0)) return std::numeric_limits<double>::infinity();
  return std::sqrt(ev.back() / ev.front());
}

}  // namespace

bool ShortTimeFit::residual_ok() const {
  return residual <= 1e-10 * std::max(1.0, std::abs(c(0)));
}

ShortTimeFit fit_polynomial(const std::vector<double>& dt, const std::vector<double>& values,
                            FitParity parity) {
  if (dt.size() != values.size()) throw DimensionError("fit: dt and value lengths differ");
  const std::size_t m = dt.size();
  if (m < kMinPoints) {
    throw ResolutionError("fit: " + std::to_string(m) + " points, need at least " +
                          std::to_string(kMinPoints));
  }
  std::vector<int> powers;
  if (parity == FitParity::even) {
    powers = {0, 2, 4, 6};
  } else {
    powers = {0, 1, 2, 3, 4, 5};
  }
  const std::size_t p = powers.size();
  double scale = 0.0;
  for (double x : dt) scale = std::max(scale, std::abs(x));
  if (!(scale > 0.0)) throw ResolutionError("fit: window is empty");

  std::vector<double> a(m * p);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = dt[i] / scale;
    for (std::size_t k = 0; k < p; ++k) a[i * p + k] = std::pow(x, powers[k]);
  }
  const QrSolution qr = householder_lstsq(a, values, m, p);

  ShortTimeFit fit;
  fit.parity = parity;
  fit.condition = condition_number(qr.r, p);
  if (!(fit.condition <= kMaxCondition)) {
    std::ostringstream os;
    os << "fit: window is ill-conditioned (condition number " << fit.condition << ")";
    throw ResolutionError(os.str());
  }
  fit.coefficients.assign(static_cast<std::size_t>(powers.back()) + 1, 0.0);
  for (std::size_t k = 0; k < p; ++k) {
    fit.coefficients[static_cast<std::size_t>(powers[k])] =
        qr.x[k] / std::pow(scale, powers[k]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < p; ++k) s += qr.x[k] * a[i * p + k];
    fit.residual = std::max(fit.residual, std::abs(s - values[i]));
  }
  fit.dt_grid = dt;
  fit.values = values;
  return fit;
}

ShortTimeFit fit_short_time(const Matrix& h, const InitialState& initial,
                            const FitOptions& options) {
  if (!(options.dt_min > 0.0 && options.dt_max > options.dt_min)) {
    throw ResolutionError("fit: window must satisfy 0 < dt_min < dt_max");
  }
  const std::size_t half = options.n_points / 2;
  if (half < 2) throw ResolutionError("fit: too few points");
  std::vector<double> dt;
  dt.reserve(2 * half);
  for (std::size_t k = 0; k < half; ++k) {
    const double x = options.dt_min + (options.dt_max - options.dt_min) *
                                          static_cast<double>(k) /
                                          static_cast<double>(half - 1);
    dt.push_back(-x);
    dt.push_back(x);
  }
  std::sort(dt.begin(), dt.end());
  const Propagator prop(h);
  const Ket* ket = std::get_if<Ket>(&initial);
  const Matrix rho0 =
      ket ? Matrix::outer(ket->amplitudes()) : std::get<DensityOperator>(initial).matrix();
  const SystemDims dims = std::visit([](const auto& x) { return x.dims(); }, initial);
  std::vector<double> values(dt.size());
  for (std::size_t i = 0; i < dt.size(); ++i) {
    values[i] = cne(partial_trace_c(prop.evolve(rho0, dt[i]), dims)).lambda_star;
  }
  return fit_polynomial(dt, values, options.parity);
}

}  // namespace espkit
