// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fast/lint/manifest.hpp"
#include "fast/runtime/runtime.hpp"

namespace fast::demo {

struct AppOptions {
  /// Inputs to process; 0 leaves termination to the runtime's budget.
  std::size_t inputs = 0;
  std::uint64_t seed = 7;
};

std::vector<std::string> appNames();

/// Throws Error for an unknown name.
AppFactory appFactory(std::string_view name, AppOptions options = {});

/// Intent text the demo ships with.
std::string_view defaultIntent(std::string_view app);

/// Declared/captured sets observed from a short run of the app plus the
/// dataflow edges of its body.
KnobManifest appManifest(std::string_view app);

}  // namespace fast::demo
