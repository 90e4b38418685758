// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "fast/intent/compiler.hpp"

namespace fast {

/// One value per intent knob, in declaration order.
using Configuration = std::vector<double>;

struct ConfigurationSpace {
  std::vector<std::string> knobNames;
  std::vector<Configuration> configurations;

  KnobBinding binding(std::size_t i) const;
};

/// Cross product of all knob ranges filtered by the knob constraint. The
/// first declared knob varies fastest, each knob walking its range in
/// declaration order. Throws EmptyConfigurationSpace when nothing survives.
ConfigurationSpace expandConfigurationSpace(const CompiledIntent& intent);
ConfigurationSpace expandConfigurationSpace(const IntentSpec& spec);

}  // namespace fast
