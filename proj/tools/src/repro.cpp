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
#include <sstream>

#include "espkit_cli/commands.hpp"
#include "espkit_cli/csv.hpp"
#include "espkit_cli/reference.hpp"

namespace espkit::cli {

namespace {

constexpr double kZeroAbsTol = 1e-6;
constexpr double kC0AbsTol = 1e-6;
constexpr double kMirrorTol = 1e-10;

struct CurveJob {
  std::string name;
  Matrix h;
  InitialState initial;
  EvolutionSpec spec;
};

std::vector<Trajectory> run_curves(const std::vector<CurveJob>& jobs) {
  std::vector<Trajectory> out(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    TrajectoryMeta meta;
    meta.label = jobs[i].name;
    out[i] = sample_trajectory(jobs[i].h, jobs[i].initial, jobs[i].spec, meta);
  });
  return out;
}

std::string fmt(double x) { return format_double(x); }

std::string spin_tag(SpinMagnitude s) {
  return s.two_s % 2 == 0 ? "s" + std::to_string(s.two_s / 2) : "s" + std::to_string(s.two_s) + "-2";
}

std::string coupling_text(const ExchangeCoupling& j) {
  return "J=(" + fmt(j.jx) + "," + fmt(j.jy) + "," + fmt(j.jz) + ")";
}

std::string sign_tag(double eps) { return eps > 0.0 ? "pos" : "neg"; }

double rel_dev(double fitted, double analytic) {
  return std::abs(fitted - analytic) / std::abs(analytic);
}

bool coefficient_ok(double fitted, double analytic, double tol_rel) {
  if (analytic == 0.0) return std::abs(fitted) <= kZeroAbsTol;
  return rel_dev(fitted, analytic) <= tol_rel;
}

// ---------------------------------------------------------------------------

ReproResult repro_table1(double tol_rel) {
  ReproResult res;
  res.target = "table1";
  std::ostringstream csv;
  csv << "formula,jx,jy,jz,s_c,fitted_c2,analytic_c2,abs_dev,rel_dev,pass\n";
  for (const ProductConfig& pc : product_configs()) {
    for (const ExchangeCoupling& j : product_couplings()) {
      for (int two_s : {1, 2}) {
        const AnalyticCneFormula f{pc.formula, WeightingId::W1};
        FormulaParams prm;
        prm.j = j;
        prm.s = SpinMagnitude{two_s};
        CneExpansion e;
        try {
          e = formula_expansion(f, prm);
        } catch (const PreconditionError&) {
          continue;  // sign guard excludes this coupling
        }
        const ShortTimeFit fit =
            fit_short_time(formula_hamiltonian(prm), formula_initial_state(f, prm));
        const double c2 = fit.c(2);
        const bool ok = coefficient_ok(c2, e.c2, tol_rel) && fit.residual_ok();
        const double rel = e.c2 == 0.0 ? std::abs(c2) : rel_dev(c2, e.c2);
        csv << f.name() << ',' << fmt(j.jx) << ',' << fmt(j.jy) << ',' << fmt(j.jz) << ','
            << fmt(prm.s.value()) << ',' << fmt(c2) << ',' << fmt(e.c2) << ','
            << fmt(std::abs(c2 - e.c2)) << ',' << fmt(rel) << ',' << (ok ? "true" : "false")
            << '\n';
        res.checks.push_back({f.name() + " " + coupling_text(j) + " S=" + fmt(prm.s.value()), ok,
                              "fitted c2=" + fmt(c2) + " analytic c2=" + fmt(e.c2)});
      }
    }
  }
  res.table_csv = csv.str();
  return res;
}

// ---------------------------------------------------------------------------

EvolutionSpec esp_window(double t_max, std::size_t n_steps) {
  EvolutionSpec spec;
  spec.t_min = 0.0;
  spec.t_max = t_max;
  spec.n_steps = n_steps;
  spec.emit_negative_times = true;
  return spec;
}

struct Table2Row {
  WeightingId id;
  double eps;
  TrajectoryLabel expected;
};

ReproResult repro_table2(double tol_rel) {
  ReproResult res;
  res.target = "table2";
  std::vector<Table2Row> rows;
  for (const EspRow& r : esp_rows()) {
    rows.push_back({r.id, (r.sign == 0 ? 1.0 : r.sign) * kEspEpsilon, r.label});
  }
  // W6 is tabulated at both signs; the extra row is checked but not tabulated.
  rows.push_back({WeightingId::W6, -kEspEpsilon, TrajectoryLabel::p3});

  std::vector<CurveJob> jobs;
  for (const Table2Row& r : rows) {
    FormulaParams prm;
    prm.j = kEspCoupling;
    prm.s = SpinMagnitude{1};
    prm.epsilon = r.eps;
    const AnalyticCneFormula f{FormulaKind::table2, r.id};
    jobs.push_back({f.name(), formula_hamiltonian(prm), formula_initial_state(f, prm),
                    esp_window(1.5, 600)});
  }
  const std::vector<Trajectory> trajs = run_curves(jobs);

  std::ostringstream csv;
  csv << "weighting,epsilon,fitted_c0,analytic_c0,fitted_c2,analytic_c2,fitted_c4,analytic_c4,"
         "leading_order,leading_rel_dev,formula_check,expected_label,detected_label,pass\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Table2Row& r = rows[i];
    FormulaParams prm;
    prm.j = kEspCoupling;
    prm.s = SpinMagnitude{1};
    prm.epsilon = r.eps;
    const AnalyticCneFormula f{FormulaKind::table2, r.id};
    const CneExpansion e = formula_expansion(f, prm);
    const ShortTimeFit fit = fit_short_time(formula_hamiltonian(prm), formula_initial_state(f, prm));
    const double fitted_lead = e.leading_order == 2 ? fit.c(2) : fit.c(4);
    const double analytic_lead = e.leading_order == 2 ? e.c2 : e.c4;
    const bool c0_ok = std::abs(fit.c(0) - e.c0) <= kC0AbsTol;
    const bool lead_ok = coefficient_ok(fitted_lead, analytic_lead, tol_rel);
    const ValidationReport vr = validate_formula(f, prm, ValidationMode::full_numerics);
    ClassificationOptions co;
    const Classification c = classify_trajectory(trajs[i], co);
    const bool label_ok = c.label == r.expected;
    const bool ok = c0_ok && lead_ok && vr.pass && label_ok && fit.residual_ok();
    const std::string detected = c.label ? to_string(*c.label) : "none";
    if (i < esp_rows().size()) {
      csv << to_string(r.id) << ',' << fmt(r.eps) << ',' << fmt(fit.c(0)) << ',' << fmt(e.c0)
          << ',' << fmt(fit.c(2)) << ',' << fmt(e.c2) << ',' << fmt(fit.c(4)) << ','
          << fmt(e.c4) << ',' << e.leading_order << ',' << fmt(rel_dev(fitted_lead, analytic_lead))
          << ',' << (vr.pass ? "pass" : "fail") << ',' << to_string(r.expected) << ','
          << detected << ',' << (ok ? "true" : "false") << '\n';
    }
    std::ostringstream detail;
    detail << "c0 " << fmt(fit.c(0)) << " vs " << fmt(e.c0) << "; c" << e.leading_order << " "
           << fmt(fitted_lead) << " vs " << fmt(analytic_lead) << "; formula check "
           << (vr.pass ? "pass" : "fail") << " (max dev " << fmt(vr.max_abs_deviation)
           << "); label " << detected << " vs " << to_string(r.expected);
    res.checks.push_back({f.name() + " eps=" + fmt(r.eps), ok, detail.str()});
  }
  res.table_csv = csv.str();
  return res;
}

// ---------------------------------------------------------------------------

ReproResult repro_fig2() {
  ReproResult res;
  res.target = "fig2";
  const char panels[] = {'a', 'b', 'c', 'd'};
  EvolutionSpec spec;
  spec.t_min = 0.0;
  spec.t_max = 10.0;
  spec.n_steps = 2000;

  std::vector<CurveJob> jobs;
  for (std::size_t p = 0; p < 4; ++p) {
    const ExchangeCoupling& j = product_couplings()[p];
    for (int two_s : {1, 2}) {
      const SpinMagnitude s{two_s};
      for (const ProductConfig& pc : product_configs()) {
        const std::string name = std::string(1, panels[p]) + "_" + pc.tag + "_" + spin_tag(s);
        jobs.push_back({name, spin_star_hamiltonian(j, s),
                        product_initial(ProductSpinSpec::basis(pc.a_up, pc.b_up, s.two_s), s),
                        spec});
      }
    }
  }
  const std::vector<Trajectory> trajs = run_curves(jobs);
  for (std::size_t i = 0; i < jobs.size(); ++i) res.curves.emplace_back(jobs[i].name, trajs[i]);
  auto find = [&](const std::string& name) -> const Trajectory& {
    for (const auto& [n, t] : res.curves) {
      if (n == name) return t;
    }
    throw Error("fig2: missing curve " + name);
  };

  // No finite-duration transitions for S = 1/2.
  for (const auto& [name, traj] : res.curves) {
    if (name.find("_s1-2") == std::string::npos) continue;
    const auto events = detect_transitions(traj);
    std::size_t tfd = 0;
    for (const auto& e : events) tfd += e.kind == TransitionKind::tfd ? 1 : 0;
    res.checks.push_back({"no TFD " + name, tfd == 0, std::to_string(tfd) + " TFD events"});
  }
  // Long-time TFD around t = 4 for S = 1 at J = (1, +-0.5, 1).
  for (const char* name : {"c_uuu_s1", "c_udd_s1", "d_uuu_s1", "d_udd_s1"}) {
    const auto events = detect_transitions(find(name));
    bool found = false;
    std::ostringstream detail;
    for (const auto& e : events) {
      if (e.kind != TransitionKind::tfd) continue;
      detail << to_string(e.order) << " " << fmt(*e.t_death) << "/" << fmt(*e.t_birth) << " ";
      const double lo = std::min(*e.t_death, *e.t_birth);
      const double hi = std::max(*e.t_death, *e.t_birth);
      if (e.order == TransitionOrder::death_to_birth && lo >= 3.0 && hi <= 5.0) found = true;
    }
    res.checks.push_back({std::string("TFD in [3,5] ") + name, found,
                          detail.str().empty() ? "no TFD events" : detail.str()});
  }
  // Flipping Jy exchanges |up,up,up> and |up,down,down>.
  const std::pair<const char*, const char*> mirrors[] = {
      {"b_uuu", "a_udd"}, {"b_udd", "a_uuu"}, {"b_uud", "a_uud"},
      {"d_uuu", "c_udd"}, {"d_udd", "c_uuu"}, {"d_uud", "c_uud"}};
  for (const auto& [x, y] : mirrors) {
    for (const char* st : {"_s1-2", "_s1"}) {
      const Trajectory& tx = find(std::string(x) + st);
      const Trajectory& ty = find(std::string(y) + st);
      double dev = 0.0;
      for (std::size_t k = 0; k < tx.samples.size(); ++k) {
        dev = std::max(dev, std::abs(tx.samples[k].negativity - ty.samples[k].negativity));
      }
      res.checks.push_back({std::string("Jy mirror ") + x + st + " = " + y + st,
                            dev <= kMirrorTol, "max |dN| = " + fmt(dev)});
    }
  }
  return res;
}

// ---------------------------------------------------------------------------

ReproResult repro_fig4() {
  ReproResult res;
  res.target = "fig4";
  std::vector<CurveJob> jobs;
  std::vector<std::pair<const EspRow*, double>> keys;
  for (const EspRow& r : esp_rows()) {
    for (double eps : {kEspEpsilon, -kEspEpsilon}) {
      const EspWeighting w = esp_weighting(r.id, eps);
      const SpinMagnitude s{1};
      jobs.push_back({to_string(r.id) + "_" + sign_tag(eps), spin_star_hamiltonian(kEspCoupling, s),
                      mixed_initial(w, s), esp_window(1.5, 600)});
      keys.emplace_back(&r, eps);
    }
  }
  const std::vector<Trajectory> trajs = run_curves(jobs);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    res.curves.emplace_back(jobs[i].name, trajs[i]);
    const EspRow& r = *keys[i].first;
    const double eps = keys[i].second;
    const bool tabulated = r.sign == 0 || (r.sign > 0) == (eps > 0.0);
    if (!tabulated) continue;
    const Classification c = classify_trajectory(trajs[i]);
    const std::string detected = c.label ? to_string(*c.label) : "none";
    res.checks.push_back({"label " + jobs[i].name, c.label == r.label,
                          detected + " vs " + to_string(r.label) + " (" + c.diagnostics + ")"});
  }
  return res;
}

// ---------------------------------------------------------------------------

ReproResult repro_fig5() {
  ReproResult res;
  res.target = "fig5";
  constexpr double kQuietWindow = 0.3;
  std::vector<CurveJob> jobs;
  std::vector<std::pair<WeightingId, double>> keys;
  for (const EspRow& r : esp_rows()) {
    for (double eps : {kEspEpsilon, -kEspEpsilon}) {
      const EspWeighting w = esp_weighting(r.id, eps);
      const SpinMagnitude s = purifying_spin(w);
      jobs.push_back({to_string(r.id) + "_" + sign_tag(eps), spin_star_hamiltonian(kEspCoupling, s),
                      pure_initial(w, s), esp_window(0.5, 500)});
      keys.emplace_back(r.id, eps);
    }
  }
  const std::vector<Trajectory> trajs = run_curves(jobs);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    res.curves.emplace_back(jobs[i].name, trajs[i]);
    const int n = static_cast<int>(keys[i].first);
    const double eps = keys[i].second;
    const Trajectory& tr = trajs[i];
    if (n <= 6) {
      std::size_t near = 0;
      for (const Crossing& c : find_crossings(tr.times, tr.negativities())) {
        near += std::abs(c.t) <= kQuietWindow ? 1 : 0;
      }
      res.checks.push_back({"no crossing in [-0.3,0.3] " + jobs[i].name, near == 0,
                            std::to_string(near) + " crossings"});
      continue;
    }
    const bool pos_row = n == 9 || n == 13;
    if (pos_row != (eps > 0.0)) continue;
    const Classification c = classify_trajectory(tr);
    const auto events = detect_transitions(tr);
    std::size_t tfd = 0;
    for (const auto& e : events) tfd += e.kind == TransitionKind::tfd ? 1 : 0;
    const TrajectoryLabel want = pos_row ? TrajectoryLabel::p6 : TrajectoryLabel::p4;
    const std::string detected = c.label ? to_string(*c.label) : "none";
    res.checks.push_back({"label " + jobs[i].name, c.label == want && tfd > 0,
                          detected + " vs " + to_string(want) + ", " + std::to_string(tfd) +
                              " TFD events"});
  }

  // W4 at negative epsilon dips towards zero without reaching it near t = 0.11.
  for (const auto& [name, tr] : res.curves) {
    if (name != "W4_neg") continue;
    const auto neg = tr.negativities();
    double t_min = 0.0;
    double n_min = 0.0;
    bool found = false;
    for (std::size_t k = 1; k + 1 < neg.size(); ++k) {
      if (tr.times[k] <= 0.0) continue;
      if (neg[k] < neg[k - 1] && neg[k] <= neg[k + 1]) {
        t_min = tr.times[k];
        n_min = neg[k];
        found = true;
        break;
      }
    }
    const bool ok = found && std::abs(t_min - 0.11) <= 0.02 && n_min > kEntanglementThreshold;
    res.checks.push_back({"local minimum W4_neg", ok,
                          found ? "t=" + fmt(t_min) + " N=" + fmt(n_min) : "no local minimum"});
  }
  return res;
}

}  // namespace

const std::vector<std::string>& repro_targets() {
  static const std::vector<std::string> t = {"table1", "table2", "fig2", "fig4", "fig5"};
  return t;
}

ReproResult run_repro(const std::string& target, double tol_rel) {
  if (target == "table1") return repro_table1(tol_rel);
  if (target == "table2") return repro_table2(tol_rel);
  if (target == "fig2") return repro_fig2();
  if (target == "fig4") return repro_fig4();
  if (target == "fig5") return repro_fig5();
  throw ConfigError("unknown repro target '" + target +
                    "' (expected table1, table2, fig2, fig4 or fig5)");
}

}  // namespace espkit::cli
