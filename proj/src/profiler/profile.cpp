// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/profiler/profile.hpp"

#include "fast/errors.hpp"
#include "fast/intent/config_space.hpp"
#include "fast/profiler/stats.hpp"

namespace fast {

ControllerModel profile(const IntentSpec& spec, const AppFactory& app, const ProfileOptions& options) {
  if (options.iterationsPerConfig == 0) throw Error("profiling needs at least one iteration per configuration");
  const ConfigurationSpace space = expandConfigurationSpace(spec);

  ControllerModel model;
  model.knobNames = spec.knobNames();
  model.measureNames = spec.measureNames();
  for (std::size_t id = 0; id < space.configurations.size(); ++id) {
    RuntimeConfig cfg;
    cfg.mode = ControlMode::Fixed;
    cfg.fixedConfiguration = space.configurations[id];
    cfg.iterationBudget = options.warmup + options.iterationsPerConfig;
    cfg.windowSize = options.windowSize;
    cfg.platform = options.platform;
    Runtime rt(cfg);
    rt.loadIntent(spec);
    const RunResult run = app(rt)->run(spec.name);

    std::vector<StreamingStats> stats(model.measureNames.size());
    for (std::size_t i = options.warmup; i < run.trace.records.size(); ++i) {
      const auto& values = run.trace.records[i].measures;
      for (std::size_t m = 0; m < stats.size(); ++m) stats[m].push(values[m]);
    }
    if (stats.empty() || stats.front().count == 0) {
      if (!stats.empty()) {
        throw MissingMeasure("configuration " + std::to_string(id) + " produced no iterations after warm-up");
      }
    }
    ModelRow row{id, space.configurations[id], {}};
    for (const auto& s : stats) row.measures.push_back(s.mean);
    model.rows.push_back(std::move(row));
    if (options.progress) options.progress(id + 1, space.configurations.size());
  }
  return model;
}

}  // namespace fast
