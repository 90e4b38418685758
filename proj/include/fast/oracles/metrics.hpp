// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "fast/oracles/timeline.hpp"
#include "fast/runtime/trace.hpp"

namespace fast {

struct TraceMetrics {
  /// Mean over windows of |window mean of m_c - window mean goal| / |goal|.
  double mape = 0.0;
  /// Sum over windows of the objective on window-mean measures, expressed in
  /// the initial intent's direction (a later min/max flip is folded back).
  double cumulativeObjective = 0.0;
};

/// Per-window view used by metrics and plot data.
struct WindowSummary {
  std::size_t window = 0;
  std::size_t first = 0;
  std::size_t count = 0;
  double constraintAvg = 0.0;
  double goal = 0.0;
  double objective = 0.0;  // active objective on the window means
  std::vector<std::size_t> configIds;
};

/// The intent active at a window's first iteration supplies its objective,
/// direction and constraint measure; the goal is averaged per iteration. A
/// trailing partial window counts as a window.
std::vector<WindowSummary> summarizeWindows(const Trace& trace, const IntentTimeline& timeline,
                                            std::size_t windowSize);

/// Throws ZeroGoal when a window's goal is 0 and Error on an empty trace or an
/// unconstrained window.
TraceMetrics computeMetrics(const Trace& trace, const IntentTimeline& timeline, std::size_t windowSize);

/// Windowed MAPE restricted to windows [skip, end).
double windowMape(const Trace& trace, const IntentTimeline& timeline, std::size_t windowSize, std::size_t skip);

/// 0 when f1 <= f2, else (f1 - f2) / max(|f1|, |f2|).
double objectiveAdvantage(double f1, double f2);

}  // namespace fast
