// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "fast/oracles/metrics.hpp"
#include "fast/oracles/oracle.hpp"
#include "fast/oracles/verdict.hpp"
#include "fast/runtime/runtime.hpp"

namespace fast::demo {

inline constexpr int kScenarioCount = 6;

enum class OracleKind { A, B };

/// One row of the application-agnostic test suite.
struct ScenarioSpec {
  int id = 0;
  std::string description;
  Verdict expected = Verdict::Pass;
  OracleKind oracle = OracleKind::B;
  IntentSpec intent;
  PerturbationScript script;
  std::size_t iterations = 0;
};

/// Throws Error for ids outside 1..6.
ScenarioSpec scenarioSpec(int id);

struct ScenarioOptions {
  std::size_t windowSize = 20;
  std::size_t profileIterations = 250;
  VerdictConfig thresholds;
  PlatformParams platform;
  /// When set, traces, model and oracle are written here.
  std::optional<std::filesystem::path> outDir;
};

struct ScenarioResult {
  ScenarioSpec spec;
  Verdict actual = Verdict::Fail;
  TraceMetrics fast;
  TraceMetrics oracle;
  std::optional<std::size_t> oracleAConfig;
  RunResult run;
  Trace oracleTrace;
};

ScenarioResult runScenario(int id, const ScenarioOptions& options);

}  // namespace fast::demo
