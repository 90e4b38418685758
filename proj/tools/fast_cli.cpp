// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: profile, run, oracle, verdict, lint, scenario,
// plotdata and cctv.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "fast/controller/controller.hpp"
#include "fast/csv.hpp"
#include "fast/demo/apps.hpp"
#include "fast/demo/cctv.hpp"
#include "fast/demo/scenarios.hpp"
#include "fast/errors.hpp"
#include "fast/intent/config_space.hpp"
#include "fast/intent/parser.hpp"
#include "fast/lint/lint.hpp"
#include "fast/numfmt.hpp"
#include "fast/oracles/metrics.hpp"
#include "fast/oracles/oracle.hpp"
#include "fast/oracles/verdict.hpp"
#include "fast/platform/sim_platform.hpp"
#include "fast/profiler/profile.hpp"
#include "fast/runtime/runtime.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kUsage = 2;

struct Common {
  std::string intent;
  std::string perturb;
  std::string platform;
  std::size_t window = 20;
};

fast::PlatformParams platformFrom(const Common& c) {
  return c.platform.empty() ? fast::PlatformParams{} : fast::loadPlatformParams(c.platform);
}

fast::PerturbationScript scriptFrom(const Common& c) {
  return c.perturb.empty() ? fast::PerturbationScript{} : fast::loadPerturbationScript(c.perturb);
}

fast::IntentTimeline timelineFrom(const Common& c) {
  return fast::IntentTimeline(fast::loadIntentFile(c.intent), scriptFrom(c));
}

void printMetrics(std::string_view label, const fast::TraceMetrics& m) {
  std::cout << label << ": E = " << fast::formatDouble(m.mape) << ", F = " << fast::formatDouble(m.cumulativeObjective)
            << '\n';
}

// ---------------------------------------------------------------- profile

struct ProfileArgs {
  Common common;
  std::string app;
  std::string out;
  std::size_t iters = 100;
  std::size_t warmup = 0;
};

int cmdProfile(const ProfileArgs& a) {
  const fast::IntentSpec spec = fast::loadIntentFile(a.common.intent);
  fast::ProfileOptions po;
  po.iterationsPerConfig = a.iters;
  po.warmup = a.warmup;
  po.windowSize = a.common.window;
  po.platform = platformFrom(a.common);
  const fast::ControllerModel model = fast::profile(spec, fast::demo::appFactory(a.app), po);
  fast::modelSave(model, a.out, spec.name);

  std::cout << "profiled " << model.size() << " configurations of intent '" << spec.name << "'\n";
  std::cout << "id";
  for (const auto& k : model.knobNames) std::cout << ' ' << k;
  std::cout << " |";
  for (const auto& m : model.measureNames) std::cout << ' ' << m;
  std::cout << '\n';
  for (const auto& r : model.rows) {
    std::cout << r.id;
    for (double v : r.knobs) std::cout << ' ' << fast::formatDouble(v);
    std::cout << " |";
    for (double v : r.measures) std::cout << ' ' << fast::formatDouble(v);
    std::cout << '\n';
  }
  return kOk;
}

// -------------------------------------------------------------------- run

struct RunArgs {
  Common common;
  std::string app;
  std::string model;
  std::string trace;
  std::string decisions;
  std::size_t iters = 1000;
  std::optional<std::size_t> fixedConfig;
  bool uncontrolled = false;
  double gain = 0.3;
};

int cmdRun(const RunArgs& a) {
  const fast::IntentSpec spec = fast::loadIntentFile(a.common.intent);
  fast::RuntimeConfig cfg;
  cfg.windowSize = a.common.window;
  cfg.platform = platformFrom(a.common);
  cfg.iterationBudget = a.iters;
  cfg.feedbackGain = a.gain;
  if (!a.common.perturb.empty()) cfg.perturbations = scriptFrom(a.common);
  if (!a.trace.empty()) cfg.traceSink = a.trace;
  if (!a.decisions.empty()) cfg.decisionLogSink = a.decisions;
  if (a.uncontrolled) cfg.mode = fast::ControlMode::Uncontrolled;
  if (a.fixedConfig) {
    cfg.mode = fast::ControlMode::Fixed;
    cfg.fixedConfigId = *a.fixedConfig;
  }

  fast::Runtime rt(cfg);
  rt.loadIntent(spec);
  if (!a.model.empty()) {
    rt.setModel(spec.name, fast::modelLoad(a.model, fast::CompiledIntent(spec)));
  }
  const fast::RunResult r = fast::demo::appFactory(a.app)(rt)->run(spec.name);
  std::cout << "ran " << r.trace.size() << " iterations; " << r.decisions.size() << " controller decisions; final lambda "
            << fast::formatDouble(r.finalFeedback.lambda) << '\n';
  if (spec.constrained() && !r.trace.empty()) {
    const fast::IntentTimeline timeline(spec, cfg.perturbations.value_or(fast::PerturbationScript{}));
    printMetrics("run", fast::computeMetrics(r.trace, timeline, cfg.windowSize));
  }
  return kOk;
}

// ----------------------------------------------------------------- oracle

struct OracleArgs {
  Common common;
  std::string type = "B";
  std::string traces;
  std::string out;
  double T = 0.05;
};

int cmdOracle(const OracleArgs& a) {
  const fast::IntentTimeline timeline = timelineFrom(a.common);
  const auto fixed = fast::loadFixedTraces(a.traces, timeline.initial().measureNames());
  fast::Trace oracle;
  if (a.type == "A") {
    fast::VerdictConfig vc;
    vc.T = a.T;
    const auto choice = fast::buildOracleA(fixed, timeline, vc, a.common.window);
    oracle = fixed[choice.index].trace;
    std::cout << "Oracle A: configuration " << fixed[choice.index].configId << '\n';
    printMetrics("oracle", choice.metrics);
  } else {
    oracle = fast::buildOracleB(fixed, timeline);
    std::cout << "Oracle B over " << fixed.size() << " fixed traces\n";
    printMetrics("oracle", fast::computeMetrics(oracle, timeline, a.common.window));
  }
  fast::saveTrace(oracle, a.out);
  return kOk;
}

// ---------------------------------------------------------------- verdict

struct VerdictArgs {
  Common common;
  std::string alg = "B";
  std::string fastTrace;
  std::string oracleTrace;
  double T = 0.05;
  double TF = 0.05;
};

int cmdVerdict(const VerdictArgs& a) {
  const fast::IntentTimeline timeline = timelineFrom(a.common);
  const auto measures = timeline.initial().measureNames();
  const fast::TraceMetrics f = fast::computeMetrics(fast::loadTrace(a.fastTrace, measures), timeline, a.common.window);
  const fast::TraceMetrics o =
      fast::computeMetrics(fast::loadTrace(a.oracleTrace, measures), timeline, a.common.window);
  fast::VerdictConfig vc{a.T, a.T, a.TF};
  const auto direction = timeline.initial().optimization;
  const fast::Verdict v = a.alg == "A" ? fast::verdictA(f, o, direction, vc) : fast::verdictB(f, o, direction, vc);
  printMetrics("fast", f);
  printMetrics("oracle", o);
  if (a.alg == "B") {
    const double s = direction == fast::OptimizationType::Min ? -1.0 : 1.0;
    std::cout << "advantage A(oracle, fast) = "
              << fast::formatDouble(fast::objectiveAdvantage(s * o.cumulativeObjective, s * f.cumulativeObjective))
              << '\n';
  }
  std::cout << fast::name(v) << '\n';
  return v == fast::Verdict::Pass ? kOk : kFindings;
}

// ------------------------------------------------------------------- lint

int cmdLint(const std::string& intent, const std::string& manifest) {
  const fast::LintReport r = fast::lint(fast::loadIntentFile(intent), fast::loadManifest(manifest));
  std::cout << fast::renderLintReport(r);
  return r.clean() ? kOk : kFindings;
}

// --------------------------------------------------------------- scenario

struct ScenarioArgs {
  std::vector<int> ids;
  std::string out;
  std::size_t window = 20;
  double T = 0.05;
  double TF = 0.05;
  std::string platform;
};

int cmdScenario(const ScenarioArgs& a) {
  fast::demo::ScenarioOptions so;
  so.windowSize = a.window;
  so.thresholds = fast::VerdictConfig{a.T, a.T, a.TF};
  if (!a.platform.empty()) so.platform = fast::loadPlatformParams(a.platform);
  if (!a.out.empty()) so.outDir = a.out;
  std::vector<int> ids = a.ids;
  if (ids.empty()) {
    for (int i = 1; i <= fast::demo::kScenarioCount; ++i) ids.push_back(i);
  }
  bool allMatch = true;
  for (int id : ids) {
    const auto r = fast::demo::runScenario(id, so);
    const bool match = r.actual == r.spec.expected;
    allMatch = allMatch && match;
    std::cout << "scenario " << id << " (" << r.spec.description << "): expected " << fast::name(r.spec.expected)
              << ", actual " << fast::name(r.actual) << (match ? "" : "  MISMATCH") << '\n';
    std::cout << "  fast   E = " << fast::formatDouble(r.fast.mape) << ", F = " << fast::formatDouble(r.fast.cumulativeObjective)
              << '\n';
    std::cout << "  oracle " << (r.spec.oracle == fast::demo::OracleKind::A ? "A" : "B")
              << " E = " << fast::formatDouble(r.oracle.mape) << ", F = " << fast::formatDouble(r.oracle.cumulativeObjective)
              << '\n';
  }
  return allMatch ? kOk : kFindings;
}

// --------------------------------------------------------------- plotdata

struct PlotArgs {
  Common common;
  std::string trace;
  std::string model;
  std::string out;
};

int cmdPlotdata(const PlotArgs& a) {
  const fast::IntentTimeline timeline = timelineFrom(a.common);
  fast::Trace trace = fast::loadTrace(a.trace, timeline.initial().measureNames());
  if (!a.model.empty()) {
    const auto model = fast::modelLoad(a.model, fast::CompiledIntent(timeline.initial()));
    for (auto& r : trace.records) {
      if (const auto* row = model.findConfiguration(r.knobs)) r.configId = row->id;
    }
  }
  std::ostringstream csv;
  csv << "window,constraintAvg,goal,objectiveAvg,configIds\n";
  for (const auto& w : fast::summarizeWindows(trace, timeline, a.common.window)) {
    csv << w.window << ',' << fast::formatDouble(w.constraintAvg) << ',' << fast::formatDouble(w.goal) << ','
        << fast::formatDouble(w.objective) << ',';
    for (std::size_t i = 0; i < w.configIds.size(); ++i) csv << (i ? ";" : "") << w.configIds[i];
    csv << '\n';
  }
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    fast::writeFileAtomic(a.out, csv.str());
  }
  return kOk;
}

// ------------------------------------------------------------------- cctv

struct CctvArgs {
  fast::demo::CctvOptions options;
  bool noScript = false;
  std::string trace;
  std::string decisions;
  std::string platform;
};

int cmdCctv(CctvArgs a) {
  a.options.scripted = !a.noScript;
  if (!a.platform.empty()) a.options.platform = fast::loadPlatformParams(a.platform);
  const auto r = fast::demo::runCctv(a.options);
  if (!a.trace.empty()) fast::saveTrace(r.run.trace, a.trace);
  if (!a.decisions.empty()) fast::writeFileAtomic(a.decisions, fast::renderDecisionLog(r.run.decisions));
  std::cout << "frames " << r.run.trace.size() << ", windows " << r.windows.size() << ", constraint MAPE "
            << fast::formatDouble(r.mape) << '\n';
  if (a.options.scripted) {
    std::cout << "restricted windows [" << r.restrictWindow << ", " << r.controlWindow << ")\n";
    std::cout << "quality inside " << fast::formatDouble(r.qualityInside) << " vs outside "
              << fast::formatDouble(r.qualityOutside) << '\n';
    std::cout << "energy inside " << fast::formatDouble(r.energyInside) << " vs outside "
              << fast::formatDouble(r.energyOutside) << '\n';
    std::cout << "energy back within 10% of " << fast::formatDouble(r.energyBefore) << " after "
              << (r.windowsToRecover ? std::to_string(*r.windowsToRecover) : std::string("no")) << " window(s)\n";
  }
  return kOk;
}

void addCommon(CLI::App* cmd, Common& c, bool intentRequired = true) {
  auto* opt = cmd->add_option("--intent", c.intent, "Intent specification file")->check(CLI::ExistingFile);
  if (intentRequired) opt->required();
  cmd->add_option("--perturb", c.perturb, "Perturbation script (iteration,kind,payload)")->check(CLI::ExistingFile);
  cmd->add_option("--platform", c.platform, "Simulated platform constants (key = value)")->check(CLI::ExistingFile);
  cmd->add_option("--window", c.window, "Window size in iterations")->capture_default_str()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_level(spdlog::level::warn);
  CLI::App app{"fast: intent-driven adaptive runtime tools"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Log runtime decisions");

  ProfileArgs pa;
  auto* profileCmd = app.add_subcommand("profile", "Profile every configuration of an intent and write the model");
  addCommon(profileCmd, pa.common);
  profileCmd->add_option("--app", pa.app, "Demo application (incrementer, camlike)")->required();
  profileCmd->add_option("--iters", pa.iters, "Iterations per configuration")->capture_default_str();
  profileCmd->add_option("--warmup", pa.warmup, "Leading iterations per configuration to discard")->capture_default_str();
  profileCmd->add_option("--out", pa.out, "Directory for <name>.knobtable.csv and <name>.measuretable.csv")->required();

  RunArgs ra;
  auto* runCmd = app.add_subcommand("run", "Run an application under the controller");
  addCommon(runCmd, ra.common);
  runCmd->add_option("--app", ra.app, "Demo application")->required();
  runCmd->add_option("--model", ra.model, "Directory holding the controller model");
  runCmd->add_option("--iters", ra.iters, "Iterations to run")->capture_default_str();
  runCmd->add_option("--trace", ra.trace, "Trace CSV to write");
  runCmd->add_option("--decisions", ra.decisions, "Controller decision log CSV to write");
  runCmd->add_option("--fixed-config", ra.fixedConfig, "Run uncontrolled in this configuration id");
  runCmd->add_flag("--uncontrolled", ra.uncontrolled, "Run in the reference configuration");
  runCmd->add_option("--gain", ra.gain, "Feedback filter gain")->capture_default_str();

  OracleArgs oa;
  auto* oracleCmd = app.add_subcommand("oracle", "Build Oracle A or B from fixed-configuration traces");
  addCommon(oracleCmd, oa.common);
  oracleCmd->add_option("--type", oa.type, "A or B")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  oracleCmd->add_option("--traces", oa.traces, "Directory of fixed_<id>.csv traces")->required();
  oracleCmd->add_option("--out", oa.out, "Oracle trace CSV to write")->required();
  oracleCmd->add_option("--T", oa.T, "Constraint error threshold")->capture_default_str();

  VerdictArgs va;
  auto* verdictCmd = app.add_subcommand("verdict", "Judge a FAST trace against an oracle trace");
  addCommon(verdictCmd, va.common);
  verdictCmd->add_option("--alg", va.alg, "A or B")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  verdictCmd->add_option("--fast", va.fastTrace, "FAST trace CSV")->required()->check(CLI::ExistingFile);
  verdictCmd->add_option("--oracle", va.oracleTrace, "Oracle trace CSV")->required()->check(CLI::ExistingFile);
  verdictCmd->add_option("--T", va.T, "Constraint error threshold")->capture_default_str();
  verdictCmd->add_option("--TF", va.TF, "Objective advantage threshold")->capture_default_str();

  std::string lintIntent;
  std::string lintManifest;
  auto* lintCmd = app.add_subcommand("lint", "Report unused, uncaptured and unaffected knobs");
  lintCmd->add_option("--intent", lintIntent, "Intent specification file")->required()->check(CLI::ExistingFile);
  lintCmd->add_option("--manifest", lintManifest, "Knob manifest file")->required()->check(CLI::ExistingFile);

  ScenarioArgs sa;
  auto* scenarioCmd = app.add_subcommand("scenario", "Run test-suite scenarios end to end");
  scenarioCmd->add_option("--id", sa.ids, "Scenario id(s) 1..6; all when omitted")->check(CLI::Range(1, 6));
  scenarioCmd->add_option("--out", sa.out, "Directory for traces and models");
  scenarioCmd->add_option("--window", sa.window, "Window size")->capture_default_str();
  scenarioCmd->add_option("--T", sa.T, "Constraint error threshold")->capture_default_str();
  scenarioCmd->add_option("--TF", sa.TF, "Objective advantage threshold")->capture_default_str();
  scenarioCmd->add_option("--platform", sa.platform, "Simulated platform constants")->check(CLI::ExistingFile);

  PlotArgs pl;
  auto* plotCmd = app.add_subcommand("plotdata", "Per-window CSV for plotting a trace");
  addCommon(plotCmd, pl.common);
  plotCmd->add_option("--trace", pl.trace, "Trace CSV")->required()->check(CLI::ExistingFile);
  plotCmd->add_option("--model", pl.model, "Model directory, to label configuration ids");
  plotCmd->add_option("--out", pl.out, "Output CSV (stdout when omitted)");

  CctvArgs ca;
  auto* cctvCmd = app.add_subcommand("cctv", "Surveillance-camera demo with a scripted restrict and control");
  cctvCmd->add_option("--frames", ca.options.frames, "Frames to encode")->capture_default_str();
  cctvCmd->add_option("--window", ca.options.windowSize, "Window size")->capture_default_str();
  cctvCmd->add_option("--restrict-at", ca.options.restrictAt, "Frame at which quality is pinned")->capture_default_str();
  cctvCmd->add_option("--control-at", ca.options.controlAt, "Frame at which control resumes")->capture_default_str();
  cctvCmd->add_option("--goal", ca.options.goal, "Frames per second to sustain")->capture_default_str();
  cctvCmd->add_flag("--no-script", ca.noScript, "Run without restrict/control");
  cctvCmd->add_option("--trace", ca.trace, "Trace CSV to write");
  cctvCmd->add_option("--decisions", ca.decisions, "Controller decision log CSV to write");
  cctvCmd->add_option("--platform", ca.platform, "Simulated platform constants")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (verbose) spdlog::set_level(spdlog::level::info);

  try {
    if (*profileCmd) return cmdProfile(pa);
    if (*runCmd) return cmdRun(ra);
    if (*oracleCmd) return cmdOracle(oa);
    if (*verdictCmd) return cmdVerdict(va);
    if (*lintCmd) return cmdLint(lintIntent, lintManifest);
    if (*scenarioCmd) return cmdScenario(sa);
    if (*plotCmd) return cmdPlotdata(pl);
    if (*cctvCmd) return cmdCctv(ca);
  } catch (const fast::SyntaxError& e) {
    std::cerr << "fast: " << e.what() << '\n';
    return kUsage;
  } catch (const fast::Error& e) {
    std::cerr << "fast: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
