// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/controller/controller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>

#include "fast/errors.hpp"
#include "fast/kernels/kernels.hpp"
#include "fast/numfmt.hpp"

namespace fast {

namespace {

struct RowView {
  std::vector<std::size_t> ids;
  std::vector<double> constraint;
  std::vector<double> value;  // objective in the intent's sign
  std::vector<double> score;  // smaller is better for both MIN and MAX
};

RowView viewRows(const CompiledIntent& intent, const ControllerModel& model) {
  if (model.empty()) throw EmptyConfigurationSpace("controller model has no rows");
  const bool maximize = intent.spec().optimization == OptimizationType::Max;
  RowView v;
  for (const auto& r : model.rows) {
    const double f = intent.objective(r.measures);
    v.ids.push_back(r.id);
    v.value.push_back(f);
    v.score.push_back(maximize ? -f : f);
    v.constraint.push_back(intent.constrained() ? r.measures[intent.constraintIndex()] : 0.0);
  }
  return v;
}

struct Candidate {
  double score;
  std::size_t primary;    // index into RowView
  std::size_t secondary;  // index into RowView
  double alpha;
};

bool better(const Candidate& a, const Candidate& b, const RowView& v) {
  return std::tuple(a.score, v.ids[a.primary], v.ids[a.secondary]) <
         std::tuple(b.score, v.ids[b.primary], v.ids[b.secondary]);
}

Schedule finish(const Candidate& c, const RowView& v, std::size_t windowSize, bool constrained) {
  Schedule s;
  s.windowSize = std::max<std::size_t>(windowSize, 1);
  s.primary = v.ids[c.primary];
  s.secondary = v.ids[c.secondary];
  s.alpha = c.alpha;
  s.objectiveEstimate = c.alpha * v.value[c.primary] + (1.0 - c.alpha) * v.value[c.secondary];
  if (s.constant()) s.objectiveEstimate = v.value[c.primary];
  if (constrained) {
    const double k = static_cast<double>(s.primaryCount());
    const double w = static_cast<double>(s.windowSize);
    s.predictedConstraint = (k * v.constraint[c.primary] + (w - k) * v.constraint[c.secondary]) / w;
  }
  return s;
}

}  // namespace

std::size_t Schedule::primaryCount() const noexcept {
  if (constant()) return windowSize;
  const double k = std::floor(alpha * static_cast<double>(windowSize) + 0.5);
  return static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(windowSize)));
}

std::size_t Schedule::at(std::size_t index) const noexcept {
  return index % windowSize < primaryCount() ? primary : secondary;
}

Schedule computeScheduleUnconstrained(const CompiledIntent& intent, const ControllerModel& model,
                                      std::size_t windowSize) {
  const RowView v = viewRows(intent, model);
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.ids.size(); ++i) {
    if (v.score[i] < v.score[best]) best = i;
  }
  return finish(Candidate{v.score[best], best, best, 1.0}, v, windowSize, false);
}

Schedule computeScheduleConstrained(const CompiledIntent& intent, const ControllerModel& model, double lambda,
                                    std::size_t windowSize) {
  const RowView v = viewRows(intent, model);
  const double goal = intent.goal() * lambda;
  const std::size_t n = v.ids.size();

  bool found = false;
  Candidate best{};
  auto offer = [&](const Candidate& c) {
    if (!found || better(c, best, v)) {
      best = c;
      found = true;
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (v.constraint[i] == goal) offer(Candidate{v.score[i], i, i, 1.0});
  }

  std::vector<double> alpha(n);
  std::vector<double> value(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t rest = n - i - 1;
    kernels::pairInterpolate(v.constraint[i], v.score[i], std::span(v.constraint).subspan(i + 1, rest),
                             std::span(v.score).subspan(i + 1, rest), goal, std::span(alpha).first(rest),
                             std::span(value).first(rest));
    for (std::size_t t = 0; t < rest; ++t) {
      if (std::isnan(alpha[t])) continue;
      const std::size_t j = i + 1 + t;
      if (alpha[t] >= 1.0) {
        offer(Candidate{v.score[i], i, i, 1.0});
      } else if (alpha[t] <= 0.0) {
        offer(Candidate{v.score[j], j, j, 1.0});
      } else {
        offer(Candidate{value[t], i, j, alpha[t]});
      }
    }
  }

  if (found) return finish(best, v, windowSize, true);

  std::size_t nearest = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const double di = std::fabs(v.constraint[i] - goal);
    const double dn = std::fabs(v.constraint[nearest] - goal);
    if (di < dn || (di == dn && v.score[i] < v.score[nearest])) nearest = i;
  }
  Schedule s = finish(Candidate{v.score[nearest], nearest, nearest, 1.0}, v, windowSize, true);
  s.bracketed = false;
  return s;
}

Schedule computeSchedule(const CompiledIntent& intent, const ControllerModel& model, double lambda,
                         std::size_t windowSize) {
  return intent.constrained() ? computeScheduleConstrained(intent, model, lambda, windowSize)
                              : computeScheduleUnconstrained(intent, model, windowSize);
}

std::vector<std::size_t> realizeSchedule(const Schedule& s) {
  std::vector<std::size_t> out(s.windowSize, s.secondary);
  std::fill_n(out.begin(), s.primaryCount(), s.primary);
  return out;
}

FeedbackState feedbackUpdate(FeedbackState state, double predictedConstraint, double observedWindowAverage) {
  if (!(predictedConstraint > 0.0) || !(observedWindowAverage > 0.0)) {
    throw NonPositiveMeasure("feedback needs positive predicted and observed values, got " +
                             formatDouble(predictedConstraint) + " and " + formatDouble(observedWindowAverage));
  }
  state.lambda = (1.0 - state.gain) * state.lambda + state.gain * (predictedConstraint / observedWindowAverage);
  return state;
}

double scheduleCost(const CompiledIntent& intent, const ControllerModel& model, double goal) {
  const RowView v = viewRows(intent, model);
  const std::size_t n = v.ids.size();
  double best = std::numeric_limits<double>::infinity();
  bool feasible = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (v.constraint[i] == goal) {
      best = std::min(best, v.score[i]);
      feasible = true;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      // | 1    1   | |wi|   | 1  |
      // | c_i  c_j | |wj| = |goal|
      const double det = v.constraint[j] - v.constraint[i];
      if (det == 0.0) continue;
      const double wi = (v.constraint[j] - goal) / det;
      const double wj = (goal - v.constraint[i]) / det;
      if (wi < 0.0 || wj < 0.0) continue;
      best = std::min(best, wi * v.score[i] + wj * v.score[j]);
      feasible = true;
    }
  }
  if (!feasible) throw Infeasible("no weighting of model rows meets goal " + formatDouble(goal));
  return intent.spec().optimization == OptimizationType::Max ? -best : best;
}

std::string renderDecisionLog(const std::vector<DecisionRecord>& log) {
  std::ostringstream out;
  out << "window,primaryId,secondaryId,alpha,lambda,predictedConstraint,objectiveEstimate\n";
  for (const auto& d : log) {
    out << d.window << ',' << d.primaryId << ',' << d.secondaryId << ',' << formatDouble(d.alpha) << ','
        << formatDouble(d.lambda) << ',' << formatDouble(d.predictedConstraint) << ','
        << formatDouble(d.objectiveEstimate) << '\n';
  }
  return out.str();
}

}  // namespace fast
