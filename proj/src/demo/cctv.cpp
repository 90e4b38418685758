// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/demo/cctv.hpp"

#include <cmath>

#include "fast/demo/apps.hpp"
#include "fast/intent/parser.hpp"
#include "fast/kernels/kernels.hpp"
#include "fast/numfmt.hpp"
#include "fast/profiler/profile.hpp"

namespace fast::demo {

CctvResult runCctv(const CctvOptions& options) {
  CctvResult r;
  r.intent = parseIntent(defaultIntent("camlike"));
  r.intent.constraintGoal = Number::real(options.goal);
  validateIntent(r.intent);

  ProfileOptions po;
  po.iterationsPerConfig = options.profileIterations;
  po.windowSize = options.windowSize;
  po.platform = options.platform;
  r.model = profile(r.intent, appFactory("camlike", {}), po);

  RuntimeConfig cfg;
  cfg.windowSize = options.windowSize;
  cfg.platform = options.platform;
  PerturbationScript script;
  if (options.scripted) {
    script = parsePerturbationScript(std::to_string(options.restrictAt) + ",restrict,quantizer " +
                                     formatDouble(options.pinnedQuantizer) + "\n" +
                                     std::to_string(options.controlAt) + ",control,quantizer\n");
    cfg.perturbations = script;
  }
  Runtime rt(cfg);
  rt.loadIntent(r.intent);
  rt.setModel(r.intent.name, r.model);
  r.run = appFactory("camlike", {options.frames, 7})(rt)->run(r.intent.name);

  const IntentTimeline timeline(r.intent);
  r.windows = summarizeWindows(r.run.trace, timeline, options.windowSize);
  r.mape = computeMetrics(r.run.trace, timeline, options.windowSize).mape;

  const std::size_t q = r.run.trace.measureColumn("quality");
  const std::size_t e = r.run.trace.measureColumn("energy");
  std::vector<double> qs;
  std::vector<double> es;
  for (const auto& w : r.windows) {
    qs.clear();
    es.clear();
    for (std::size_t i = w.first; i < w.first + w.count; ++i) {
      qs.push_back(r.run.trace.records[i].measures[q]);
      es.push_back(r.run.trace.records[i].measures[e]);
    }
    r.windowQuality.push_back(kernels::mean(qs));
    r.windowEnergy.push_back(kernels::mean(es));
  }

  // Windows start being restricted at the first boundary at or after the event.
  auto windowOf = [&](std::size_t it) { return (it + options.windowSize - 1) / options.windowSize; };
  r.restrictWindow = options.scripted ? windowOf(options.restrictAt) : r.windows.size();
  r.controlWindow = options.scripted ? windowOf(options.controlAt) : r.windows.size();

  std::vector<double> qIn, qOut, eIn, eOut, eBefore;
  for (std::size_t w = 0; w < r.windows.size(); ++w) {
    const bool inside = w >= r.restrictWindow && w < r.controlWindow;
    (inside ? qIn : qOut).push_back(r.windowQuality[w]);
    (inside ? eIn : eOut).push_back(r.windowEnergy[w]);
    if (w < r.restrictWindow) eBefore.push_back(r.windowEnergy[w]);
  }
  r.qualityInside = kernels::mean(qIn);
  r.qualityOutside = kernels::mean(qOut);
  r.energyInside = kernels::mean(eIn);
  r.energyOutside = kernels::mean(eOut);
  r.energyBefore = kernels::mean(eBefore);
  for (std::size_t w = r.controlWindow; w < r.windows.size(); ++w) {
    if (std::fabs(r.windowEnergy[w] - r.energyBefore) <= 0.10 * r.energyBefore) {
      r.windowsToRecover = w - r.controlWindow + 1;
      break;
    }
  }
  return r;
}

}  // namespace fast::demo
