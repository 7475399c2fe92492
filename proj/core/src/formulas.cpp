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

#include <cmath>
#include <limits>

#include "espkit/analysis.hpp"
#include "espkit/errors.hpp"

namespace espkit {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

CneExpansion table1(FormulaKind kind, const FormulaParams& prm) {
  const double s = prm.s.value();
  const double jx = prm.j.jx;
  const double jy = prm.j.jy;
  CneExpansion e;
  switch (kind) {
    case FormulaKind::table1_uuu:
      if (sign_of(jx) != sign_of(jy)) {
        throw PreconditionError("TableI_uuu requires sign(Jx) = sign(Jy)");
      }
      e.c2 = s * (std::abs(jx) > std::abs(jy) ? jy * (jy - jx) : jx * (jx - jy));
      break;
    case FormulaKind::table1_uud: {
      const double q = jx * jx + jy * jy;
      e.c2 = s * (q - std::sqrt(q * q + 4.0 * jx * jx * jy * jy));
      break;
    }
    case FormulaKind::table1_udd:
      if (sign_of(jx) != -sign_of(jy)) {
        throw PreconditionError("TableI_udd requires sign(Jx) = -sign(Jy)");
      }
      e.c2 = s * (std::abs(jx) > std::abs(jy) ? jy * (jx + jy) : jx * (jx + jy));
      break;
    default:
      break;
  }
  return e;
}

CneExpansion table2(WeightingId id, const FormulaParams& prm) {
  const double eps = prm.epsilon;
  const double x2 = prm.j.jx * prm.j.jx;
  const double y2 = prm.j.jy * prm.j.jy;
  if (!(eps > -1.0 && eps < 1.0)) {
    throw PreconditionError("TableII requires epsilon in (-1, 1)");
  }
  CneExpansion e;
  e.c0 = -eps / 2.0;
  auto dt4 = [&e](double c4) {
    e.c2 = 0.0;
    e.c4 = c4;
    e.leading_order = 4;
    e.top_order = 4;
  };
  switch (id) {
    case WeightingId::W1:
    case WeightingId::W3:
      e.c2 = x2 * (1.0 + eps) / 2.0;
      break;
    case WeightingId::W2:
      e.c2 = x2 * eps;
      break;
    case WeightingId::W4:
      e.c2 = y2 * eps;
      break;
    case WeightingId::W5:
      e.c2 = y2 * (1.0 + eps) / 2.0;
      break;
    case WeightingId::W6:
      if (eps == 0.0) throw PreconditionError("TableII_W6 requires epsilon != 0");
      if (eps > 0.0) {
        e.c2 = (1.0 + eps) * (x2 + y2) / 2.0;
        e.c4 = -x2 * y2 * (1.0 + eps) * (3.0 + 7.0 * eps) / (12.0 * eps);
        e.top_order = 4;
      } else {
        e.c0 = eps / 2.0;
        dt4(x2 * y2 * (1.0 + eps) * (1.0 + eps) / (4.0 * eps));
      }
      e.partial_top_term = true;
      break;
    case WeightingId::W7:
      e.c2 = x2 * (1.0 + 3.0 * eps) / 4.0;
      break;
    case WeightingId::W8:
      e.c2 = y2 * (1.0 + 3.0 * eps) / 4.0;
      break;
    case WeightingId::W9:
      e.c2 = x2 * (1.0 + 3.0 * eps) / 4.0 + y2 * (1.0 + eps) / 2.0;
      break;
    case WeightingId::W10:
      dt4(-x2 * y2 * (eps - 1.0) * (eps - 1.0) / (8.0 * (1.0 + eps)));
      break;
    case WeightingId::W11:
      e.c2 = x2 * (1.0 + 2.0 * eps) / 3.0;
      break;
    case WeightingId::W12:
      e.c2 = y2 * (1.0 + 2.0 * eps) / 3.0;
      break;
    case WeightingId::W13:
      e.c2 = (x2 + y2) * (1.0 + 2.0 * eps) / 3.0;
      break;
    case WeightingId::W14:
      dt4(-x2 * y2 * (eps - 1.0) * (eps - 1.0) / (3.0 + 6.0 * eps));
      break;
  }
  return e;
}

std::vector<double> env_weights_or_top(const FormulaParams& prm) {
  if (!prm.env_weights.empty()) return prm.env_weights;
  std::vector<double> w(prm.s.dim(), 0.0);
  w[0] = 1.0;
  return w;
}

}  // namespace

std::string AnalyticCneFormula::name() const {
  switch (kind) {
    case FormulaKind::table1_uuu:
      return "TableI_uuu";
    case FormulaKind::table1_uud:
      return "TableI_uud";
    case FormulaKind::table1_udd:
      return "TableI_udd";
    case FormulaKind::table2:
      return "TableII_" + to_string(weighting);
    case FormulaKind::eq21:
      return "Eq21";
    case FormulaKind::eq29_alpha:
      return "Eq29_alpha";
    case FormulaKind::eq30_beta:
      return "Eq30_beta";
  }
  return "?";
}

std::optional<AnalyticCneFormula> AnalyticCneFormula::parse(std::string_view text) {
  for (const auto& f : all()) {
    if (f.name() == text) return f;
  }
  return std::nullopt;
}

std::vector<AnalyticCneFormula> AnalyticCneFormula::all() {
  std::vector<AnalyticCneFormula> out = {{FormulaKind::table1_uuu},
                                         {FormulaKind::table1_uud},
                                         {FormulaKind::table1_udd}};
  for (int w = 1; w <= 14; ++w) {
    out.push_back({FormulaKind::table2, static_cast<WeightingId>(w)});
  }
  out.push_back({FormulaKind::eq21});
  out.push_back({FormulaKind::eq29_alpha});
  out.push_back({FormulaKind::eq30_beta});
  return out;
}

CneExpansion formula_expansion(const AnalyticCneFormula& f, const FormulaParams& prm) {
  switch (f.kind) {
    case FormulaKind::table1_uuu:
    case FormulaKind::table1_uud:
    case FormulaKind::table1_udd:
      return table1(f.kind, prm);
    case FormulaKind::table2:
      return table2(f.weighting, prm);
    case FormulaKind::eq21: {
      const std::vector<double> w = env_weights_or_top(prm);
      double mean_m = 0.0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        mean_m += (prm.s.value() - static_cast<double>(k)) * w[k];
      }
      CneExpansion e;
      e.c2 = prm.j.jz * prm.j.jz / 2.0 * mean_m * mean_m *
             (-2.0 + std::cos(2.0 * prm.theta_a) + std::cos(2.0 * prm.theta_b));
      return e;
    }
    case FormulaKind::eq29_alpha:
    case FormulaKind::eq30_beta: {
      if (!(prm.p >= 0.0 && prm.p < 1.0)) {
        throw PreconditionError(f.name() + " requires p in [0, 1)");
      }
      CneExpansion e;
      e.c0 = -std::sqrt(1.0 - prm.p * prm.p) / 2.0;
      if (f.kind == FormulaKind::eq29_alpha) {
        const double sj = prm.s.value() * prm.j.jz;
        e.c2 = e.c0 * 8.0 * sj * sj;
      } else {
        e.leading_order = 0;
        e.top_order = 0;
      }
      return e;
    }
  }
  throw PreconditionError("unknown formula");
}

double evaluate_formula(const AnalyticCneFormula& f, const FormulaParams& prm, double dt) {
  const CneExpansion e = formula_expansion(f, prm);
  const double d2 = dt * dt;
  return e.c0 + e.c2 * d2 + e.c4 * d2 * d2;
}

Matrix formula_hamiltonian(const FormulaParams& prm) {
  return spin_star_hamiltonian(prm.j, prm.s);
}

InitialState formula_initial_state(const AnalyticCneFormula& f, const FormulaParams& prm) {
  switch (f.kind) {
    case FormulaKind::table1_uuu:
      return product_initial(ProductSpinSpec::basis(true, true, prm.s.two_s), prm.s);
    case FormulaKind::table1_uud:
      return product_initial(ProductSpinSpec::basis(true, false, prm.s.two_s), prm.s);
    case FormulaKind::table1_udd:
      return product_initial(ProductSpinSpec::basis(false, false, prm.s.two_s), prm.s);
    case FormulaKind::table2:
      return mixed_initial(esp_weighting(f.weighting, prm.epsilon), prm.s);
    case FormulaKind::eq21: {
      ProductSpinSpec spec;
      spec.theta_a = prm.theta_a;
      spec.theta_b = prm.theta_b;
      spec.env = env_weights_or_top(prm);
      return product_initial(spec, prm.s);
    }
    case FormulaKind::eq29_alpha:
    case FormulaKind::eq30_beta: {
      const BellFamily fam =
          f.kind == FormulaKind::eq29_alpha ? BellFamily::alpha : BellFamily::beta;
      CVector env(prm.s.dim(), cplx{0.0, 0.0});
      env[0] = 1.0;
      const Ket bell = bell_ket({fam, prm.bell_sign, prm.p});
      return Ket(SystemDims::for_spin(prm.s), kron(env, bell.amplitudes()));
    }
  }
  throw PreconditionError("unknown formula");
}

std::string to_string(ValidationMode m) {
  return m == ValidationMode::full_numerics ? "full_numerics" : "truncated_series";
}

double numeric_cne(const Matrix& h, const InitialState& initial, double dt, ValidationMode mode,
                   int series_order) {
  const Ket* ket = std::get_if<Ket>(&initial);
  const Matrix rho0 =
      ket ? Matrix::outer(ket->amplitudes()) : std::get<DensityOperator>(initial).matrix();
  const SystemDims dims = std::visit([](const auto& x) { return x.dims(); }, initial);
  const Matrix full = mode == ValidationMode::full_numerics
                          ? Propagator(h).evolve(rho0, dt)
                          : evolve_series(h, rho0, dt, series_order);
  return cne(partial_trace_c(full, dims)).lambda_star;
}

ValidationReport validate_formula(const AnalyticCneFormula& f, const FormulaParams& prm,
                                  ValidationMode mode, const ValidationOptions& options) {
  const CneExpansion e = formula_expansion(f, prm);
  const bool short_series = f.kind == FormulaKind::eq21 || f.kind == FormulaKind::eq29_alpha ||
                            f.kind == FormulaKind::eq30_beta;
  const int order =
      options.series_order > 0 ? options.series_order : (short_series ? 2 : 3);
  const Matrix h = formula_hamiltonian(prm);
  const InitialState init = formula_initial_state(f, prm);

  ValidationReport rep;
  rep.formula = f.name();
  rep.mode = mode;
  // Expansions are even in dt, so the first undisplayed order is top + 2.
  rep.next_order = e.top_order + 2;
  const double q = rep.next_order;

  auto deviation = [&](double dt) {
    return std::abs(numeric_cne(h, init, dt, mode, order) - evaluate_formula(f, prm, dt));
  };

  double hmax = 0.0;
  for (double dt : options.dts) hmax = std::max(hmax, std::abs(dt));
  const double d1 = deviation(hmax);
  const double d2 = deviation(hmax / 2.0);
  const double d4 = deviation(hmax / 4.0);
  rep.k_estimate = std::max(d1 / std::pow(hmax, q), d2 / std::pow(hmax / 2.0, q));
  rep.observed_order = std::numeric_limits<double>::quiet_NaN();
  bool order_ok = true;
  if (d1 > options.floor && d2 > 0.0) {
    rep.observed_order = std::log2(d1 / d2);
    if (d2 > options.floor && d4 > 0.0) {
      rep.observed_order = 0.5 * (rep.observed_order + std::log2(d2 / d4));
    }
    order_ok = rep.observed_order >= q - 0.5;
  }

  rep.pass = true;
  for (double dt : options.dts) {
    DeviationRow row;
    row.dt = dt;
    row.numeric = numeric_cne(h, init, dt, mode, order);
    row.analytic = evaluate_formula(f, prm, dt);
    row.deviation = std::abs(row.numeric - row.analytic);
    if (e.partial_top_term) {
      const double top = std::abs(e.c4) * std::pow(dt, 4);
      row.tolerance = std::max(options.floor, 0.1 * top);
      row.pass = row.deviation <= row.tolerance;
    } else {
      row.tolerance = std::max(options.floor, 1.5 * rep.k_estimate * std::pow(std::abs(dt), q));
      row.pass = row.deviation <= row.tolerance && (order_ok || row.deviation <= options.floor);
    }
    rep.max_abs_deviation = std::max(rep.max_abs_deviation, row.deviation);
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace espkit
