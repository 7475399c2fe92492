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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "espkit/dynamics.hpp"
#include "espkit/states.hpp"

namespace espkit {

// ---------------------------------------------------------------------------
// Transition detection

enum class TransitionKind { esd, esb, tfd };
enum class TransitionOrder { none, death_to_birth, birth_to_death };

/** Trajectory shapes near t = 0, labelled p0..p6. */
enum class TrajectoryLabel { p0, p1, p2, p3, p4, p5, p6 };

std::string to_string(TransitionKind k);
std::string to_string(TransitionOrder o);
std::string to_string(TrajectoryLabel l);
std::optional<TrajectoryLabel> parse_trajectory_label(std::string_view text);

struct TransitionEvent {
  TransitionKind kind = TransitionKind::esd;
  std::optional<double> t_death;
  std::optional<double> t_birth;
  double duration = 0.0;  // |t_birth - t_death| for TFD, 0 otherwise
  TransitionOrder order = TransitionOrder::none;
  std::optional<TrajectoryLabel> trajectory_label;
};

struct DetectionParams {
  double threshold = kEntanglementThreshold;
  std::optional<double> min_duration;  // default: 5 sample spacings
};

/** A threshold crossing of the negativity, refined by linear interpolation. */
struct Crossing {
  double t = 0.0;
  bool is_death = false;
};

/**
 * Crossings that bound a zero-negativity dwell of at least min_duration.
 * Shorter dips below threshold are treated as touches and dropped.
 *
 * @throws ResolutionError if the largest sample spacing exceeds
 *   min_duration / 3
 * @throws PreconditionError if times are not strictly increasing
 */
std::vector<Crossing> find_crossings(const std::vector<double>& times,
                                     const std::vector<double>& negativity,
                                     const DetectionParams& params = {});

/**
 * Events from the crossings: every adjacent crossing pair is a TFD (a death
 * followed by a birth, or a birth followed by a death); a lone crossing is
 * an ESD or ESB.
 */
std::vector<TransitionEvent> detect_transitions(const std::vector<double>& times,
                                                const std::vector<double>& negativity,
                                                const DetectionParams& params = {});
std::vector<TransitionEvent> detect_transitions(const Trajectory& traj,
                                                const DetectionParams& params = {});

// ---------------------------------------------------------------------------
// Short-time fitting of lambda*(dt)

enum class FitParity { even, full };

struct FitOptions {
  double dt_min = 1e-3;
  double dt_max = 1e-2;
  std::size_t n_points = 24;  // split evenly between dt > 0 and dt < 0
  FitParity parity = FitParity::even;
};

struct ShortTimeFit {
  std::vector<double> coefficients;  // index = power of dt
  double residual = 0.0;             // max |fit - data| on the grid
  double condition = 0.0;            // of the scaled design matrix
  std::vector<double> dt_grid;
  std::vector<double> values;
  FitParity parity = FitParity::even;

  double c(std::size_t power) const {
    return power < coefficients.size() ? coefficients[power] : 0.0;
  }
  bool residual_ok() const;
};

/**
 * Least-squares polynomial fit of lambda*(dt) along exact evolution. Even
 * fits use {1, dt^2, dt^4, dt^6}; full fits use degree 5.
 *
 * @throws ResolutionError if the window is ill-conditioned (cond > 1e12)
 *   or holds fewer than 12 points
 */
ShortTimeFit fit_short_time(const Matrix& h, const InitialState& initial,
                            const FitOptions& options = {});
/** Fit of given samples (dt, lambda*). */
ShortTimeFit fit_polynomial(const std::vector<double>& dt, const std::vector<double>& values,
                            FitParity parity);

// ---------------------------------------------------------------------------
// Closed-form CNE expressions

enum class FormulaKind { table1_uuu, table1_uud, table1_udd, table2, eq21, eq29_alpha, eq30_beta };

struct AnalyticCneFormula {
  FormulaKind kind = FormulaKind::table1_uuu;
  WeightingId weighting = WeightingId::W1;  // table2 only

  std::string name() const;
  static std::optional<AnalyticCneFormula> parse(std::string_view name);
  static std::vector<AnalyticCneFormula> all();
};

struct FormulaParams {
  ExchangeCoupling j{1.0, 1.0, 1.0};
  SpinMagnitude s{1};
  double epsilon = 0.0;               // table2
  double theta_a = 0.0;               // eq21
  double theta_b = 0.0;               // eq21
  std::vector<double> env_weights;    // eq21, descending m; empty = |m=S>
  double p = 0.0;                     // eq29/eq30
  int bell_sign = +1;                 // eq29/eq30
};

/** lambda*(dt) ~ c0 + c2 dt^2 + c4 dt^4. */
struct CneExpansion {
  double c0 = 0.0;
  double c2 = 0.0;
  double c4 = 0.0;
  int leading_order = 2;  // first dt power with a displayed coefficient
  int top_order = 2;      // highest displayed dt power
  /** True when the top term is only the leading part of its coefficient. */
  bool partial_top_term = false;
};

/**
 * Displayed expansion of a formula.
 *
 * @throws PreconditionError naming the violated sign condition
 */
CneExpansion formula_expansion(const AnalyticCneFormula& f, const FormulaParams& params);
double evaluate_formula(const AnalyticCneFormula& f, const FormulaParams& params, double dt);

/** Initial state described by the formula. */
InitialState formula_initial_state(const AnalyticCneFormula& f, const FormulaParams& params);
Matrix formula_hamiltonian(const FormulaParams& params);

enum class ValidationMode { full_numerics, truncated_series };

std::string to_string(ValidationMode m);

struct DeviationRow {
  double dt = 0.0;
  double numeric = 0.0;
  double analytic = 0.0;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::string formula;
  ValidationMode mode = ValidationMode::full_numerics;
  std::vector<DeviationRow> rows;
  double max_abs_deviation = 0.0;
  double k_estimate = 0.0;
  int next_order = 4;
  double observed_order = 0.0;  // NaN when deviations sit at the floor
  bool pass = false;
};

struct ValidationOptions {
  std::vector<double> dts = {1e-3, 1e-2};
  int series_order = 0;  // 0 selects the formula's own truncation
  double floor = 1e-10;
};

/**
 * Compares numerics against the closed form. Each dt passes if the
 * deviation is within max(floor, 1.5 K dt^q), K taken from a Richardson
 * triple at the largest dt and q the first undisplayed order; the observed
 * order must also reach q - 1/2. Formulas whose top term is a leading part
 * only are held to 10% of that term instead.
 */
ValidationReport validate_formula(const AnalyticCneFormula& f, const FormulaParams& params,
                                  ValidationMode mode, const ValidationOptions& options = {});

/** lambda*(dt) computed along the chosen route. */
double numeric_cne(const Matrix& h, const InitialState& initial, double dt,
                   ValidationMode mode, int series_order);

// ---------------------------------------------------------------------------
// Classification and symmetries

struct ClassificationOptions {
  double threshold = kEntanglementThreshold;
  std::optional<double> min_duration;
  std::optional<double> near_window;  // only crossings with |t| <= window
};

struct Classification {
  std::optional<TrajectoryLabel> label;
  double negativity_at_zero = 0.0;
  double cne_at_zero = 0.0;
  std::optional<Crossing> before;  // nearest crossing at t < 0
  std::optional<Crossing> after;   // nearest crossing at t > 0
  std::string diagnostics;
};

/**
 * Labels the trajectory shape around t = 0 from the t = 0 sample and the
 * nearest crossing on each side.
 *
 * @throws PreconditionError if the trajectory has no t = 0 sample or no
 *   negative times
 */
Classification classify_trajectory(const Trajectory& traj, const ClassificationOptions& options = {});

/** Copies the label onto events whose death and birth straddle t = 0. */
void annotate_events(std::vector<TransitionEvent>& events, const Classification& c);

struct SymmetryConfig {
  ExchangeCoupling j;
  SpinMagnitude s{1};
  DensityOperator initial;
  double t_max = 2.0;
  std::size_t n_steps = 200;
  double t_reversal = 2.0;
  std::vector<double> dts = {1e-3, 1e-2};
};

struct SymmetryReport {
  double unitary_negation_dev = 0.0;     // max |U(J,-t) - U(-J,t)|
  double negativity_negation_dev = 0.0;  // max |N_J(-t) - N_{-J}(t)|
  double time_reversal_dev = 0.0;        // |N(rewound) - N(0)|
  double dt2_dev = 0.0;                  // max |N(dt) - N(-dt)|
  std::size_t events_forward = 0;
  std::size_t events_mirrored = 0;
  double event_time_dev = 0.0;  // death times of J vs birth times of -J
  bool events_match = true;
};

SymmetryReport symmetry_suite(const SymmetryConfig& config);

}  // namespace espkit
