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

#include "espkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "espkit/errors.hpp"

namespace espkit {

std::string to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::esd:
      return "ESD";
    case TransitionKind::esb:
      return "ESB";
    case TransitionKind::tfd:
      return "TFD";
  }
  return "?";
}

std::string to_string(TransitionOrder o) {
  switch (o) {
    case TransitionOrder::none:
      return "none";
    case TransitionOrder::death_to_birth:
      return "death_to_birth";
    case TransitionOrder::birth_to_death:
      return "birth_to_death";
  }
  return "?";
}

std::string to_string(TrajectoryLabel l) {
  return "p" + std::to_string(static_cast<int>(l));
}

std::optional<TrajectoryLabel> parse_trajectory_label(std::string_view text) {
  if (text.size() != 2 || text[0] != 'p' || text[1] < '0' || text[1] > '6') {
    return std::nullopt;
  }
  return static_cast<TrajectoryLabel>(text[1] - '0');
}

std::vector<Crossing> find_crossings(const std::vector<double>& times,
                                     const std::vector<double>& negativity,
                                     const DetectionParams& params) {
  if (times.size() != negativity.size()) {
    throw DimensionError("find_crossings: times and negativity lengths differ");
  }
  const std::size_t n = times.size();
  if (n < 2) return {};
  double spacing = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = times[i] - times[i - 1];
    if (!(d > 0.0)) throw PreconditionError("find_crossings: times must be strictly increasing");
    spacing = std::max(spacing, d);
  }
  const double min_duration = params.min_duration.value_or(5.0 * spacing);
  if (spacing > min_duration / 3.0) {
    std::ostringstream os;
    os << "find_crossings: sample spacing " << spacing << " exceeds min_duration/3 = "
       << min_duration / 3.0;
    throw ResolutionError(os.str());
  }
  const double thr = params.threshold;
  auto cross_time = [&](std::size_t i, std::size_t j) {
    // Linear interpolation of (negativity - thr) between samples i and j.
    const double a = negativity[i] - thr;
    const double b = negativity[j] - thr;
    if (a == b) return 0.5 * (times[i] + times[j]);
    return times[i] + a / (a - b) * (times[j] - times[i]);
  };

  std::vector<Crossing> out;
  std::size_t i = 0;
  while (i < n) {
    if (negativity[i] > thr) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && negativity[j + 1] <= thr) ++j;
    const bool open_left = i == 0;
    const bool open_right = j == n - 1;
    if (!(open_left && open_right)) {
      const double start = open_left ? times.front() : cross_time(i - 1, i);
      const double end = open_right ? times.back() : cross_time(j, j + 1);
      if (end - start >= min_duration) {
        if (!open_left) out.push_back({start, true});
        if (!open_right) out.push_back({end, false});
      }
    }
    i = j + 1;
  }
  return out;
}

std::vector<TransitionEvent> detect_transitions(const std::vector<double>& times,
                                                const std::vector<double>& negativity,
                                                const DetectionParams& params) {
  const std::vector<Crossing> cs = find_crossings(times, negativity, params);
  std::vector<TransitionEvent> events;
  if (cs.size() == 1) {
    TransitionEvent e;
    if (cs[0].is_death) {
      e.kind = TransitionKind::esd;
      e.t_death = cs[0].t;
    } else {
      e.kind = TransitionKind::esb;
      e.t_birth = cs[0].t;
    }
    events.push_back(e);
    return events;
  }
  for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
    const Crossing& a = cs[k];
    const Crossing& b = cs[k + 1];
    TransitionEvent e;
    e.kind = TransitionKind::tfd;
    if (a.is_death) {
      e.t_death = a.t;
      e.t_birth = b.t;
      e.order = TransitionOrder::death_to_birth;
    } else {
      e.t_birth = a.t;
      e.t_death = b.t;
      e.order = TransitionOrder::birth_to_death;
    }
    e.duration = std::abs(*e.t_birth - *e.t_death);
    events.push_back(e);
  }
  return events;
}

std::vector<TransitionEvent> detect_transitions(const Trajectory& traj,
                                                const DetectionParams& params) {
  return detect_transitions(traj.times, traj.negativities(), params);
}

Classification classify_trajectory(const Trajectory& traj, const ClassificationOptions& options) {
  const auto zero = std::find(traj.times.begin(), traj.times.end(), 0.0);
  if (zero == traj.times.end()) {
    throw PreconditionError("classify_trajectory: trajectory has no t = 0 sample");
  }
  if (traj.times.front() >= 0.0) {
    throw PreconditionError("classify_trajectory: trajectory has no negative times");
  }
  const auto i0 = static_cast<std::size_t>(zero - traj.times.begin());
  if (i0 + 1 >= traj.times.size()) {
    throw PreconditionError("classify_trajectory: trajectory has no positive times");
  }
  const std::vector<double> neg = traj.negativities();
  const double thr = options.threshold;

  Classification out;
  out.negativity_at_zero = neg[i0];
  out.cne_at_zero = traj.samples[i0].cne;

  DetectionParams dp{thr, options.min_duration};
  for (const Crossing& c : find_crossings(traj.times, neg, dp)) {
    if (options.near_window && std::abs(c.t) > *options.near_window) continue;
    if (c.t < 0.0) out.before = c;  // crossings are sorted, keep the last
    if (c.t > 0.0 && !out.after) out.after = c;
  }

  std::ostringstream diag;
  diag << "N(0)=" << out.negativity_at_zero << " cne(0)=" << out.cne_at_zero;
  if (out.before) diag << " before=" << (out.before->is_death ? "D@" : "B@") << out.before->t;
  if (out.after) diag << " after=" << (out.after->is_death ? "D@" : "B@") << out.after->t;

  const bool entangled = out.negativity_at_zero > thr;
  const bool boundary = !entangled && std::abs(out.cne_at_zero) <= thr;

  if (boundary) {
    const bool left = neg[i0 - 1] > thr;
    const bool right = neg[i0 + 1] > thr;
    if (left && right) {
      out.label = TrajectoryLabel::p1;
    } else if (!left && !right) {
      out.label = TrajectoryLabel::p2;
    } else {
      out.label = TrajectoryLabel::p0;
    }
  } else if (entangled) {
    if (!out.before && !out.after) {
      out.label = TrajectoryLabel::p3;
    } else if (out.before && out.after && !out.before->is_death && out.after->is_death) {
      out.label = TrajectoryLabel::p6;
    } else {
      diag << " (entangled at t=0 with one-sided or inconsistent crossings)";
    }
  } else {
    if (!out.before && !out.after) {
      out.label = TrajectoryLabel::p5;
    } else if (out.before && out.after && out.before->is_death && !out.after->is_death) {
      out.label = TrajectoryLabel::p4;
    } else {
      diag << " (separable at t=0 with one-sided or inconsistent crossings)";
    }
  }
  out.diagnostics = diag.str();
  return out;
}

void annotate_events(std::vector<TransitionEvent>& events, const Classification& c) {
  if (!c.label) return;
  for (TransitionEvent& e : events) {
    if (e.kind != TransitionKind::tfd) continue;
    const double lo = std::min(*e.t_death, *e.t_birth);
    const double hi = std::max(*e.t_death, *e.t_birth);
    if (lo < 0.0 && hi > 0.0) e.trajectory_label = c.label;
  }
}

SymmetryReport symmetry_suite(const SymmetryConfig& config) {
  SymmetryReport rep;
  const Matrix h = spin_star_hamiltonian(config.j, config.s);
  const Matrix hneg = spin_star_hamiltonian(-config.j, config.s);
  const Propagator forward(h);
  const Propagator mirrored(hneg);

  EvolutionSpec grid;
  grid.t_min = 0.0;
  grid.t_max = config.t_max;
  grid.n_steps = config.n_steps;
  grid.emit_negative_times = true;
  const Trajectory tj = sample_trajectory(h, config.initial, grid);
  const Trajectory tm = sample_trajectory(hneg, config.initial, grid);
  const std::size_t n = tj.times.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = tj.times[i];
    const Matrix d = forward.unitary(-t) - mirrored.unitary(t);
    rep.unitary_negation_dev = std::max(rep.unitary_negation_dev, max_abs_entry(d));
    // the grid is symmetric, so index n-1-i holds -t
    rep.negativity_negation_dev =
        std::max(rep.negativity_negation_dev,
                 std::abs(tj.samples[n - 1 - i].negativity - tm.samples[i].negativity));
  }

  // Rewind: evolve, flip all spins, evolve again for the same time.
  const DensityOperator rho_t = evolve_exact(h, config.initial, config.t_reversal);
  const DensityOperator flipped = time_reversal(rho_t, config.s);
  const DensityOperator back = evolve_exact(h, flipped, config.t_reversal);
  const double n0 = negativity(partial_trace_c(config.initial));
  rep.time_reversal_dev = std::abs(negativity(partial_trace_c(back)) - n0);

  for (double dt : config.dts) {
    const double np = negativity(partial_trace_c(evolve_exact(h, config.initial, dt)));
    const double nm = negativity(partial_trace_c(evolve_exact(h, config.initial, -dt)));
    rep.dt2_dev = std::max(rep.dt2_dev, std::abs(np - nm));
  }

  // Event correspondence: a death of the J-run at t is a birth of the
  // -J-run at -t.
  std::vector<double> tpos;
  std::vector<double> npos_j;
  std::vector<double> tneg;
  std::vector<double> nneg_m;
  for (std::size_t i = 0; i < n; ++i) {
    if (tj.times[i] >= 0.0) {
      tpos.push_back(tj.times[i]);
      npos_j.push_back(tj.samples[i].negativity);
    }
    if (tm.times[i] <= 0.0) {
      tneg.push_back(tm.times[i]);
      nneg_m.push_back(tm.samples[i].negativity);
    }
  }
  const auto cf = find_crossings(tpos, npos_j);
  const auto cm = find_crossings(tneg, nneg_m);
  rep.events_forward = cf.size();
  rep.events_mirrored = cm.size();
  rep.events_match = cf.size() == cm.size();
  if (rep.events_match) {
    for (std::size_t k = 0; k < cf.size(); ++k) {
      const Crossing& a = cf[k];
      const Crossing& b = cm[cm.size() - 1 - k];
      if (a.is_death == b.is_death) rep.events_match = false;
      rep.event_time_dev = std::max(rep.event_time_dev, std::abs(a.t + b.t));
    }
  }
  return rep;
}

}  // namespace espkit
