// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fast/oracles/metrics.hpp"
#include "fast/profiler/model.hpp"
#include "fast/runtime/runtime.hpp"

namespace fast::demo {

/// Surveillance-camera run: an operator pins the encoder to its best quality
/// for a stretch of frames, then hands control back.
struct CctvOptions {
  std::size_t frames = 1000;
  std::size_t windowSize = 20;
  std::size_t profileIterations = 250;
  /// Restrict/control iterations; no script when `scripted` is false.
  bool scripted = true;
  std::size_t restrictAt = 200;
  std::size_t controlAt = 400;
  double pinnedQuantizer = 20;
  double goal = 17.0;
  PlatformParams platform;
};

struct CctvResult {
  IntentSpec intent;
  ControllerModel model;
  RunResult run;
  std::vector<WindowSummary> windows;
  std::vector<double> windowQuality;
  std::vector<double> windowEnergy;
  /// Window index range [restrictWindow, controlWindow) is restricted.
  std::size_t restrictWindow = 0;
  std::size_t controlWindow = 0;
  double mape = 0.0;
  double qualityInside = 0.0;
  double qualityOutside = 0.0;
  double energyInside = 0.0;
  double energyOutside = 0.0;
  double energyBefore = 0.0;
  /// First window after control whose mean energy is within 10% of
  /// energyBefore, counted from the control window.
  std::optional<std::size_t> windowsToRecover;
};

CctvResult runCctv(const CctvOptions& options);

}  // namespace fast::demo
