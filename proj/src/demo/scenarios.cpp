// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/demo/scenarios.hpp"

#include "fast/csv.hpp"
#include "fast/demo/apps.hpp"
#include "fast/errors.hpp"
#include "fast/intent/parser.hpp"
#include "fast/profiler/profile.hpp"

namespace fast::demo {

namespace {

constexpr std::string_view kApp = "camlike";

constexpr std::string_view kScenarioIntent = R"(intent camlike
  min(energy)
  such that performance == 17.0
measures
  quality: Double
  performance: Double
  energy: Double
  latency: Double
knobs
  quantizer = [20, 26, 32, 38] reference 26
  coreFrequency = [600, 800, 1000, 1200, 1400, 1600, 1800, 2000, 2200]
  utilizedCores = [1, 2, 3, 4]
)";

IntentSpec withGoal(std::string_view measure, double goal) {
  IntentSpec s = parseIntent(kScenarioIntent);
  s.constraintMeasure = std::string(measure);
  s.constraintGoal = Number::real(goal);
  validateIntent(s);
  return s;
}

}  // namespace

ScenarioSpec scenarioSpec(int id) {
  ScenarioSpec s;
  s.id = id;
  s.iterations = 600;
  s.intent = withGoal("performance", 17.0);
  switch (id) {
    case 1:
      s.description = "constraint goal low -> high -> low, each held for 10 windows";
      s.script = parsePerturbationScript("200,goal,25\n400,goal,17\n");
      break;
    case 2:
      s.description = "constraint measure latency -> performance while minimising energy";
      s.intent = withGoal("latency", 0.05);
      s.script = parsePerturbationScript("300,constraintMeasure,performance 25\n");
      break;
    case 3:
      s.description = "min(energy) -> max(-energy) mid-run; behaviour must not change";
      s.script = parsePerturbationScript("300,optimizationType,max\n300,objective,-energy\n");
      break;
    case 4:
      s.description = "objective negated mid-run: energy is maximised from then on";
      s.script = parsePerturbationScript("300,objective,-energy\n");
      break;
    case 5:
      s.description = "constraint goal flips every half window; no time to settle";
      {
        std::string text;
        for (std::size_t it = 10; it < s.iterations; it += 20) {
          text += std::to_string(it) + ",goal,25\n" + std::to_string(it + 10) + ",goal,17\n";
        }
        s.script = parsePerturbationScript(text);
      }
      s.expected = Verdict::Fail;
      break;
    case 6:
      s.description = "constraint goal above what any configuration reaches";
      s.intent = withGoal("performance", 500.0);
      s.expected = Verdict::Invalid;
      s.oracle = OracleKind::A;
      break;
    default: throw Error("scenario id must be in 1.." + std::to_string(kScenarioCount));
  }
  return s;
}

ScenarioResult runScenario(int id, const ScenarioOptions& options) {
  ScenarioResult r;
  r.spec = scenarioSpec(id);
  const IntentSpec& intent = r.spec.intent;
  const AppOptions appOptions{r.spec.iterations, 7};
  const AppFactory app = appFactory(kApp, appOptions);

  ProfileOptions po;
  po.iterationsPerConfig = options.profileIterations;
  po.windowSize = options.windowSize;
  po.platform = options.platform;
  const ControllerModel model = profile(intent, appFactory(kApp, {}), po);

  RuntimeConfig cfg;
  cfg.windowSize = options.windowSize;
  cfg.perturbations = r.spec.script;
  cfg.platform = options.platform;
  {
    Runtime rt(cfg);
    rt.loadIntent(intent);
    rt.setModel(intent.name, model);
    r.run = app(rt)->run(intent.name);
  }

  std::vector<FixedTrace> fixed;
  for (const auto& row : model.rows) {
    RuntimeConfig fc;
    fc.windowSize = options.windowSize;
    fc.mode = ControlMode::Fixed;
    fc.fixedConfiguration = row.knobs;
    fc.platform = options.platform;
    Runtime rt(fc);
    rt.loadIntent(intent);
    RunResult run = app(rt)->run(intent.name);
    for (auto& rec : run.trace.records) rec.configId = row.id;
    fixed.push_back(FixedTrace{row.id, std::move(run.trace)});
  }

  const IntentTimeline timeline(intent, r.spec.script);
  r.fast = computeMetrics(r.run.trace, timeline, options.windowSize);
  if (r.spec.oracle == OracleKind::A) {
    const OracleAChoice choice = buildOracleA(fixed, timeline, options.thresholds, options.windowSize);
    r.oracle = choice.metrics;
    r.oracleAConfig = fixed[choice.index].configId;
    r.oracleTrace = fixed[choice.index].trace;
    r.actual = verdictA(r.fast, r.oracle, intent.optimization, options.thresholds);
  } else {
    r.oracleTrace = buildOracleB(fixed, timeline);
    r.oracle = computeMetrics(r.oracleTrace, timeline, options.windowSize);
    r.actual = verdictB(r.fast, r.oracle, intent.optimization, options.thresholds);
  }

  if (options.outDir) {
    const auto dir = *options.outDir / ("scenario" + std::to_string(id));
    saveTrace(r.run.trace, dir / "fast.csv");
    saveTrace(r.oracleTrace, dir / "oracle.csv");
    writeFileAtomic(dir / "decisions.csv", renderDecisionLog(r.run.decisions));
    modelSave(model, dir, intent.name);
  }
  return r;
}

}  // namespace fast::demo
