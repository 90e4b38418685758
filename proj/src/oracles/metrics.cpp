// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/oracles/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fast/errors.hpp"
#include "fast/intent/compiler.hpp"
#include "fast/kernels/kernels.hpp"

namespace fast {

namespace {

std::vector<double> reorder(const std::vector<double>& values, const std::vector<std::string>& from,
                            const IntentSpec& to) {
  std::vector<double> out;
  out.reserve(to.measures.size());
  for (const auto& m : to.measures) {
    auto it = std::find(from.begin(), from.end(), m.name);
    if (it == from.end()) throw SchemaMismatch("trace has no column for measure '" + m.name + "'");
    out.push_back(values[static_cast<std::size_t>(it - from.begin())]);
  }
  return out;
}

}  // namespace

std::vector<WindowSummary> summarizeWindows(const Trace& trace, const IntentTimeline& timeline,
                                            std::size_t windowSize) {
  if (windowSize == 0) throw Error("window size must be at least 1");
  std::vector<WindowSummary> out;
  const std::size_t nm = trace.measureNames.size();
  std::vector<double> column;
  for (std::size_t first = 0; first < trace.size(); first += windowSize) {
    const std::size_t count = std::min(windowSize, trace.size() - first);
    WindowSummary s;
    s.window = first / windowSize;
    s.first = first;
    s.count = count;

    std::vector<double> means(nm);
    for (std::size_t m = 0; m < nm; ++m) {
      column.clear();
      for (std::size_t i = first; i < first + count; ++i) column.push_back(trace.records[i].measures[m]);
      means[m] = kernels::mean(column);
    }
    const IntentSpec& spec = timeline.intentAt(first);
    const CompiledIntent intent(spec);
    const std::vector<double> ordered = reorder(means, trace.measureNames, spec);
    s.objective = intent.objective(ordered);
    if (spec.constrained()) {
      s.constraintAvg = ordered[intent.constraintIndex()];
      column.clear();
      for (std::size_t i = first; i < first + count; ++i) column.push_back(timeline.goalAt(i));
      s.goal = kernels::mean(column);
    }
    for (std::size_t i = first; i < first + count; ++i) {
      const auto& id = trace.records[i].configId;
      if (id && (s.configIds.empty() || s.configIds.back() != *id)) s.configIds.push_back(*id);
    }
    out.push_back(std::move(s));
  }
  return out;
}

TraceMetrics computeMetrics(const Trace& trace, const IntentTimeline& timeline, std::size_t windowSize) {
  if (trace.empty()) throw Error("cannot compute metrics of an empty trace");
  const auto windows = summarizeWindows(trace, timeline, windowSize);
  const bool initialMax = timeline.initial().optimization == OptimizationType::Max;
  TraceMetrics m;
  double errors = 0.0;
  double score = 0.0;  // minimisation-equivalent sum
  for (const auto& w : windows) {
    const IntentSpec& spec = timeline.intentAt(w.first);
    if (!spec.constrained()) throw Error("MAPE needs a constrained intent; window " + std::to_string(w.window) + " has none");
    if (w.goal == 0.0) throw ZeroGoal("constraint goal is 0 in window " + std::to_string(w.window));
    errors += std::fabs(w.constraintAvg - w.goal) / std::fabs(w.goal);
    score += spec.optimization == OptimizationType::Max ? -w.objective : w.objective;
  }
  m.mape = errors / static_cast<double>(windows.size());
  m.cumulativeObjective = initialMax ? -score : score;
  return m;
}

double windowMape(const Trace& trace, const IntentTimeline& timeline, std::size_t windowSize, std::size_t skip) {
  const auto windows = summarizeWindows(trace, timeline, windowSize);
  if (skip >= windows.size()) throw Error("no windows left after skipping " + std::to_string(skip));
  double errors = 0.0;
  for (std::size_t i = skip; i < windows.size(); ++i) {
    if (windows[i].goal == 0.0) throw ZeroGoal("constraint goal is 0 in window " + std::to_string(i));
    errors += std::fabs(windows[i].constraintAvg - windows[i].goal) / std::fabs(windows[i].goal);
  }
  return errors / static_cast<double>(windows.size() - skip);
}

double objectiveAdvantage(double f1, double f2) {
  if (f1 <= f2) return 0.0;
  return (f1 - f2) / std::max(std::fabs(f1), std::fabs(f2));
}

}  // namespace fast
