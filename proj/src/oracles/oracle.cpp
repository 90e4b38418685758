// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/oracles/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <tuple>

#include "fast/errors.hpp"
#include "fast/intent/compiler.hpp"

namespace fast {

OracleAChoice buildOracleA(const std::vector<FixedTrace>& fixed, const IntentTimeline& timeline,
                           const VerdictConfig& cfg, std::size_t windowSize) {
  if (fixed.empty()) throw Error("Oracle A needs at least one fixed-configuration trace");
  const bool maximize = timeline.initial().optimization == OptimizationType::Max;
  std::vector<TraceMetrics> metrics;
  for (const auto& f : fixed) metrics.push_back(computeMetrics(f.trace, timeline, windowSize));

  auto score = [&](std::size_t i) { return maximize ? -metrics[i].cumulativeObjective : metrics[i].cumulativeObjective; };
  auto key = [&](std::size_t i) {
    const bool meets = metrics[i].mape <= cfg.T;
    // Traces meeting T rank by objective; the rest by error, then objective.
    return meets ? std::tuple(0, score(i), 0.0, fixed[i].configId)
                 : std::tuple(1, metrics[i].mape, score(i), fixed[i].configId);
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < fixed.size(); ++i) {
    if (key(i) < key(best)) best = i;
  }
  return OracleAChoice{best, metrics[best]};
}

Trace buildOracleB(const std::vector<FixedTrace>& fixed, const IntentTimeline& timeline) {
  if (fixed.empty()) throw Error("Oracle B needs at least one fixed-configuration trace");
  std::size_t length = fixed.front().trace.size();
  for (const auto& f : fixed) length = std::min(length, f.trace.size());

  Trace out;
  out.knobNames = fixed.front().trace.knobNames;
  out.measureNames = fixed.front().trace.measureNames;
  for (const auto& f : fixed) {
    if (f.trace.knobNames != out.knobNames || f.trace.measureNames != out.measureNames) {
      throw SchemaMismatch("fixed traces disagree on their columns");
    }
  }

  const TimelineSegment* segment = nullptr;
  std::optional<CompiledIntent> intent;
  std::vector<std::size_t> order;  // trace measure column per intent measure
  for (std::size_t i = 0; i < length; ++i) {
    const TimelineSegment& seg = timeline.at(i);
    if (&seg != segment) {
      segment = &seg;
      intent.emplace(seg.spec);
      if (!seg.spec.constrained()) throw Error("Oracle B needs a constrained intent");
      order.clear();
      for (const auto& m : seg.spec.measures) order.push_back(out.measureColumn(m.name));
    }
    const double goal = seg.spec.constraintGoal->value;
    const bool maximize = seg.spec.optimization == OptimizationType::Max;
    const std::size_t mc = order[intent->constraintIndex()];

    std::optional<std::tuple<double, double, std::size_t>> bestKey;
    std::size_t best = 0;
    std::vector<double> ordered(order.size());
    for (std::size_t t = 0; t < fixed.size(); ++t) {
      const TraceRecord& r = fixed[t].trace.records[i];
      if (!timeline.admissible(i, out.knobNames, r.knobs)) continue;
      for (std::size_t m = 0; m < order.size(); ++m) ordered[m] = r.measures[order[m]];
      const double f = intent->objective(ordered);
      const auto key = std::tuple(std::fabs(r.measures[mc] - goal), maximize ? -f : f, fixed[t].configId);
      if (!bestKey || key < *bestKey) {
        bestKey = key;
        best = t;
      }
    }
    if (!bestKey) throw EmptyAvailability("no admissible configuration at iteration " + std::to_string(i));
    TraceRecord rec = fixed[best].trace.records[i];
    rec.iteration = i;
    rec.configId = fixed[best].configId;
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::filesystem::path fixedTracePath(const std::filesystem::path& dir, std::size_t configId) {
  return dir / ("fixed_" + std::to_string(configId) + ".csv");
}

std::vector<FixedTrace> loadFixedTraces(const std::filesystem::path& dir, const std::vector<std::string>& measureNames) {
  if (!std::filesystem::is_directory(dir)) throw IOError("trace directory '" + dir.string() + "' does not exist");
  static const std::regex pattern(R"(fixed_(\d+)\.csv)");
  std::vector<FixedTrace> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::smatch m;
    const std::string file = entry.path().filename().string();
    if (!std::regex_match(file, m, pattern)) continue;
    const std::size_t id = std::stoul(m[1].str());
    Trace t = loadTrace(entry.path(), measureNames);
    for (auto& r : t.records) r.configId = id;
    out.push_back(FixedTrace{id, std::move(t)});
  }
  if (out.empty()) throw IOError("no fixed_<id>.csv traces in '" + dir.string() + "'");
  std::sort(out.begin(), out.end(), [](const FixedTrace& a, const FixedTrace& b) { return a.configId < b.configId; });
  return out;
}

}  // namespace fast
