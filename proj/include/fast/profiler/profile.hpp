// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

#include "fast/profiler/model.hpp"
#include "fast/runtime/runtime.hpp"

namespace fast {

struct ProfileOptions {
  std::size_t iterationsPerConfig = 100;
  /// Leading iterations per configuration left out of the averages.
  std::size_t warmup = 0;
  std::size_t windowSize = 20;
  PlatformParams platform;
  /// Called after each configuration with (index, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Runs a fresh application instance in every configuration of the intent's
/// space and averages each measure per configuration.
ControllerModel profile(const IntentSpec& spec, const AppFactory& app, const ProfileOptions& options);

}  // namespace fast
