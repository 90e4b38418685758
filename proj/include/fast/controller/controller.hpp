// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fast/intent/compiler.hpp"
#include "fast/profiler/model.hpp"

namespace fast {

/// Two-configuration window plan: `primary` for the first round(alpha*w)
/// iterations, `secondary` for the rest. Constant schedules have
/// primary == secondary and alpha == 1.
struct Schedule {
  std::size_t windowSize = 1;
  std::size_t primary = 0;
  std::size_t secondary = 0;
  double alpha = 1.0;
  /// alpha-weighted objective of the two rows, in the intent's own sign.
  double objectiveEstimate = 0.0;
  /// Model constraint average over the realized window (0 when unconstrained).
  double predictedConstraint = 0.0;
  /// False when no pair bracketed the goal and the nearest row was chosen.
  bool bracketed = true;

  bool constant() const noexcept { return primary == secondary; }
  /// Number of leading iterations that use `primary`.
  std::size_t primaryCount() const noexcept;
  /// Configuration id for window index `index` (taken modulo windowSize).
  std::size_t at(std::size_t index) const noexcept;

  bool operator==(const Schedule&) const = default;
};

/// Grid search: constant schedule on the best row, ties to the lowest id.
Schedule computeScheduleUnconstrained(const CompiledIntent& intent, const ControllerModel& model,
                                      std::size_t windowSize);

/// Best bracketing pair for the effective goal `goal * lambda`; falls back to
/// the row nearest that goal when nothing brackets it.
Schedule computeScheduleConstrained(const CompiledIntent& intent, const ControllerModel& model, double lambda,
                                    std::size_t windowSize);

/// Dispatches on whether the intent carries a constraint.
Schedule computeSchedule(const CompiledIntent& intent, const ControllerModel& model, double lambda,
                         std::size_t windowSize);

/// Configuration id per window index.
std::vector<std::size_t> realizeSchedule(const Schedule& s);

struct FeedbackState {
  double lambda = 1.0;
  double gain = 0.3;

  void reset() noexcept { lambda = 1.0; }
};

/// lambda <- (1-gain)*lambda + gain*predicted/observed. Throws
/// NonPositiveMeasure when either value is not strictly positive.
FeedbackState feedbackUpdate(FeedbackState state, double predictedConstraint, double observedWindowAverage);

/// Optimal value of the single-equality LP over weights on model rows,
/// solved pair by pair via the 2x2 system {w_i + w_j = 1, w_i*c_i + w_j*c_j = goal}.
/// Throws Infeasible when no row or pair can meet the goal.
double scheduleCost(const CompiledIntent& intent, const ControllerModel& model, double goal);

struct DecisionRecord {
  std::size_t window = 0;
  std::size_t primaryId = 0;
  std::size_t secondaryId = 0;
  double alpha = 1.0;
  double lambda = 1.0;
  double predictedConstraint = 0.0;
  double objectiveEstimate = 0.0;
};

std::string renderDecisionLog(const std::vector<DecisionRecord>& log);

}  // namespace fast
