// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/demo/apps.hpp"

#include "fast/demo/camlike.hpp"
#include "fast/demo/incrementer.hpp"
#include "fast/errors.hpp"
#include "fast/intent/parser.hpp"

namespace fast::demo {

namespace {

constexpr std::string_view kIncrementerIntent = R"(intent incrementer
  min(energy*energy/operations)
  such that latency == 0.1
measures
  latency: Double
  operations: Double
  energy: Double
knobs
  step = [1,2,3,4]
  threshold =
    [2000000,5000000,8000000]
  coreFrequency = [300,1200]
  such that
    threshold/step > 700000
)";

constexpr std::string_view kCamlikeIntent = R"(intent camlike
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

}  // namespace

std::vector<std::string> appNames() { return {"incrementer", "camlike"}; }

AppFactory appFactory(std::string_view name, AppOptions options) {
  if (name == "incrementer") {
    return [options](Runtime& rt) { return std::make_unique<Incrementer>(rt, options.inputs); };
  }
  if (name == "camlike") {
    return [options](Runtime& rt) {
      FrameSource::Params p;
      p.seed = options.seed;
      return std::make_unique<Camlike>(rt, options.inputs, p);
    };
  }
  throw Error("unknown application '" + std::string(name) + "'");
}

std::string_view defaultIntent(std::string_view app) {
  if (app == "incrementer") return kIncrementerIntent;
  if (app == "camlike") return kCamlikeIntent;
  throw Error("unknown application '" + std::string(app) + "'");
}

KnobManifest appManifest(std::string_view app) {
  const IntentSpec spec = parseIntent(defaultIntent(app));
  RuntimeConfig cfg;
  cfg.iterationBudget = 1;
  cfg.mode = ControlMode::Uncontrolled;
  Runtime rt(cfg);
  rt.loadIntent(spec);
  auto instance = appFactory(app, {})(rt);
  instance->run(spec.name);

  KnobManifest m = manifestFromRegistry(rt.registry());
  ManifestBuilder edges;
  if (app == "incrementer") {
    edges.sink("threshold", "loopCondition")
        .flow("step", "x")
        .sink("x", "loopCondition")
        .flow("loopCondition", "operations")
        .sink("operations", "measure")
        .sink("coreFrequency", std::string(kBodyNode));
  } else {
    edges.flow("quantizer", "encoder")
        .sink("encoder", "measure")
        .sink("coreFrequency", std::string(kBodyNode))
        .sink("utilizedCores", std::string(kBodyNode));
  }
  m.edges = edges.build().edges;
  return m;
}

}  // namespace fast::demo
