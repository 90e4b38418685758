// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/intent/config_space.hpp"

#include "fast/errors.hpp"

namespace fast {

KnobBinding ConfigurationSpace::binding(std::size_t i) const {
  KnobBinding b;
  for (std::size_t k = 0; k < knobNames.size(); ++k) b.emplace(knobNames[k], configurations.at(i)[k]);
  return b;
}

ConfigurationSpace expandConfigurationSpace(const CompiledIntent& intent) {
  const auto& knobs = intent.spec().knobs;
  ConfigurationSpace space;
  space.knobNames = intent.spec().knobNames();

  std::vector<std::size_t> digit(knobs.size(), 0);
  Configuration current(knobs.size());
  while (true) {
    for (std::size_t k = 0; k < knobs.size(); ++k) current[k] = knobs[k].range[digit[k]].value;
    if (intent.knobConstraint(current)) space.configurations.push_back(current);
    // Mixed-radix increment, least significant digit first.
    std::size_t k = 0;
    while (k < knobs.size() && ++digit[k] == knobs[k].range.size()) digit[k++] = 0;
    if (k == knobs.size()) break;
  }
  if (space.configurations.empty()) {
    throw EmptyConfigurationSpace("knob constraint of intent '" + intent.spec().name + "' rejects every configuration");
  }
  return space;
}

ConfigurationSpace expandConfigurationSpace(const IntentSpec& spec) {
  return expandConfigurationSpace(CompiledIntent(spec));
}

}  // namespace fast
