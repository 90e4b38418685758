// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "fast/oracles/metrics.hpp"
#include "fast/oracles/timeline.hpp"
#include "fast/runtime/trace.hpp"

namespace fast {

/// A fixed-configuration execution and the model id of its configuration.
struct FixedTrace {
  std::size_t configId = 0;
  Trace trace;
};

struct VerdictConfig {
  double T = 0.05;   // Oracle A constraint threshold
  double TE = 0.05;  // Oracle B constraint threshold
  double TF = 0.05;  // Oracle B objective threshold
};

struct OracleAChoice {
  std::size_t index = 0;  // into the fixed trace list
  TraceMetrics metrics;
};

/// Among fixed traces with E <= T, the best F; when none meets T, the
/// lowest E. Remaining ties go to the lower configuration id.
OracleAChoice buildOracleA(const std::vector<FixedTrace>& fixed, const IntentTimeline& timeline,
                           const VerdictConfig& cfg, std::size_t windowSize);

/// Iteration by iteration, the admissible record closest to the goal, then
/// the better objective, then the lower configuration id. Throws
/// EmptyAvailability when restrictions exclude every fixed trace somewhere.
Trace buildOracleB(const std::vector<FixedTrace>& fixed, const IntentTimeline& timeline);

/// Reads every "fixed_<id>.csv" in `dir`, sorted by id.
std::vector<FixedTrace> loadFixedTraces(const std::filesystem::path& dir, const std::vector<std::string>& measureNames);

std::filesystem::path fixedTracePath(const std::filesystem::path& dir, std::size_t configId);

}  // namespace fast
