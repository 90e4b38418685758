// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <set>

#include "fast/csv.hpp"
#include "fast/demo/incrementer.hpp"
#include "fast/errors.hpp"
#include "fast/intent/parser.hpp"
#include "fast/profiler/profile.hpp"
#include "fast/runtime/perturbation.hpp"
#include "fast/runtime/runtime.hpp"
#include "fast/runtime/trace.hpp"
#include "test_support.hpp"

using namespace fast;

namespace {

// Two application knobs, one measure driven straight from them.
constexpr std::string_view kToyIntent =
    "intent toy min(cost) such that speed == 6\n"
    "measures speed: Double cost: Double\n"
    "knobs a = [1, 2, 3, 4] b = [1, 2]\n";

ControllerModel toyModel(const IntentSpec& spec) {
  const ConfigurationSpace space = expandConfigurationSpace(spec);
  ControllerModel m;
  m.knobNames = spec.knobNames();
  m.measureNames = spec.measureNames();
  for (std::size_t i = 0; i < space.configurations.size(); ++i) {
    const auto& c = space.configurations[i];
    m.rows.push_back({i, c, {c[0] * c[1], c[0] * c[0] + c[1]}});
  }
  return m;
}

struct Toy {
  Knob<int> a;
  Knob<int> b;
  std::function<void(std::size_t)> hook;

  explicit Toy(Runtime& rt) : a(rt.knob<int>("a", 1)), b(rt.knob<int>("b", 2)) {}

  RunResult run(Runtime& rt, std::size_t iterations) {
    std::size_t i = 0;
    return rt.optimize("toy", {a, b}, [&] {
      if (i == iterations) return false;
      if (hook) hook(i);
      rt.measure("speed", a.get() * b.get());
      rt.measure("cost", a.get() * a.get() + b.get());
      ++i;
      return true;
    });
  }
};

}  // namespace

TEST_CASE("knobs: creation and duplicates") {
  Runtime rt;
  auto step = rt.knob<double>("step", 1);
  CHECK(step.get() == 1);
  CHECK(step.reference() == 1);
  CHECK(step.name() == "step");
  CHECK_THROWS_AS(rt.knob<double>("step", 1), DuplicateKnob);
  {
    auto scoped = rt.knob<int>("scoped", 3);
    CHECK(rt.registry().find("scoped"));
  }
  // The registry does not keep knobs alive.
  CHECK_FALSE(rt.registry().find("scoped"));
  CHECK_NOTHROW(rt.knob<int>("scoped", 4));
  CHECK(rt.registry().declared() == std::vector<std::string>{"step"});
}

TEST_CASE("knobs: restrict validation") {
  Runtime rt;
  rt.loadIntent(fast::testing::incrementerIntent());
  auto step = rt.knob<double>("step", 1);
  CHECK_THROWS_AS(step.restrict(std::vector<double>{9}), InvalidRestriction);
  CHECK_THROWS_AS(step.restrict(std::vector<double>{}), EmptyRestriction);
  step.restrict(std::vector<double>{1, 2});
  CHECK(rt.registry().restrictions().empty());  // pending until the boundary
  CHECK_FALSE(rt.registry().applyPending());
  CHECK(rt.registry().restrictions().at("step") == std::set<double>{1, 2});

  step.cell()->current = 4;
  step.restrict();
  rt.registry().applyPending();
  CHECK(step.cell()->admissible() == std::vector<double>{4});

  step.control();
  CHECK(rt.registry().applyPending());
  CHECK(rt.registry().restrictions().empty());
  CHECK(step.cell()->admissible() == std::vector<double>{1, 2, 3, 4});

  // control without a restriction is a no-op.
  step.control();
  CHECK_FALSE(rt.registry().applyPending());
}

TEST_CASE("optimize: unknown intent and missing measure") {
  Runtime rt;
  auto a = rt.knob<int>("a", 1);
  CHECK_THROWS_AS(rt.optimize("nope", {a}, [] { return false; }), IntentNotFound);

  RuntimeConfig cfg;
  cfg.windowSize = 5;
  cfg.iterationBudget = 20;
  Runtime rt2(cfg);
  rt2.loadIntent(parseIntent(kToyIntent));
  auto a2 = rt2.knob<int>("a", 1);
  auto b2 = rt2.knob<int>("b", 1);
  CHECK_THROWS_AS(rt2.optimize("toy", {a2, b2}, [&] {
    rt2.measure("speed", 1);
    return true;
  }),
                  MissingMeasure);
}

TEST_CASE("optimize: uncontrolled runs the reference configuration") {
  RuntimeConfig cfg;
  cfg.windowSize = 4;
  Runtime rt(cfg);
  IntentSpec spec = parseIntent(kToyIntent);
  spec.knobs[0].reference = Number::integer(3);  // intent reference overrides the code's 1
  rt.loadIntent(spec);
  Toy toy(rt);
  std::size_t unknownCalls = 0;
  toy.hook = [&](std::size_t) {
    rt.measure("unknownMeasure", 1.0);
    ++unknownCalls;
  };
  const RunResult r = toy.run(rt, 10);
  CHECK(unknownCalls == 10);
  REQUIRE(r.trace.size() == 10);
  CHECK(r.decisions.empty());
  for (const auto& rec : r.trace.records) {
    CHECK(rec.knobs == Configuration{3, 2});
    CHECK(rec.measures == std::vector<double>{6, 11});
  }
  CHECK(r.trace.records.back().iteration == 9);
}

TEST_CASE("optimize: controlled run follows the schedule") {
  RuntimeConfig cfg;
  cfg.windowSize = 10;
  cfg.iterationBudget = 40;
  Runtime rt(cfg);
  const IntentSpec spec = parseIntent(kToyIntent);
  rt.loadIntent(spec);
  rt.setModel("toy", toyModel(spec));
  Toy toy(rt);
  const RunResult r = toy.run(rt, 1000);
  REQUIRE(r.trace.size() == 40);
  REQUIRE(r.decisions.size() == 4);
  const CompiledIntent ci(spec);
  for (const auto& d : r.decisions) {
    // speed 6 is hit exactly by a=3,b=2 with cost 11; the model is exact so
    // lambda stays at 1.
    CHECK(d.lambda == doctest::Approx(1.0));
    CHECK(d.predictedConstraint == doctest::Approx(6.0));
  }
  for (std::size_t w = 0; w < 4; ++w) {
    int switches = 0;
    for (std::size_t i = w * 10 + 1; i < (w + 1) * 10; ++i) {
      if (r.trace.records[i].knobs != r.trace.records[i - 1].knobs) ++switches;
    }
    CHECK(switches <= 1);
  }
  for (const auto& rec : r.trace.records) {
    CHECK(rec.configId.has_value());
    CHECK(ci.knobConstraint(rec.knobs));
  }
}

TEST_CASE("optimize: restrict and control take effect at window boundaries") {
  RuntimeConfig cfg;
  cfg.windowSize = 5;
  cfg.iterationBudget = 30;
  Runtime rt(cfg);
  const IntentSpec spec = parseIntent(kToyIntent);
  rt.loadIntent(spec);
  rt.setModel("toy", toyModel(spec));
  Toy toy(rt);
  std::vector<std::size_t> available(30);
  toy.hook = [&](std::size_t i) {
    available[i] = rt.availableConfigurations();
    if (i == 7) toy.a.restrict(std::vector<int>{1});
    if (i == 17) toy.a.control();
  };
  const RunResult r = toy.run(rt, 30);
  for (std::size_t i = 0; i < 30; ++i) {
    CAPTURE(i);
    if (i >= 10 && i < 20) {
      CHECK(available[i] == 2);
      CHECK(r.trace.records[i].knobs[0] == 1);
    } else {
      CHECK(available[i] == 8);
    }
  }
  CHECK(r.resetWindows == std::vector<std::size_t>{4});
  CHECK(r.decisions[4].lambda == 1.0);
}

TEST_CASE("optimize: window size one consults the controller every iteration") {
  RuntimeConfig cfg;
  cfg.windowSize = 1;
  cfg.iterationBudget = 12;
  Runtime rt(cfg);
  const IntentSpec spec = parseIntent(kToyIntent);
  rt.loadIntent(spec);
  rt.setModel("toy", toyModel(spec));
  Toy toy(rt);
  const RunResult r = toy.run(rt, 100);
  CHECK(r.trace.size() == 12);
  CHECK(r.decisions.size() == 12);
}

TEST_CASE("optimize: scripted goal change and trace sinks") {
  const auto dir = std::filesystem::temp_directory_path() / "fast_runtime_test";
  std::filesystem::create_directories(dir);
  RuntimeConfig cfg;
  cfg.windowSize = 10;
  cfg.iterationBudget = 60;
  cfg.perturbations = parsePerturbationScript("iteration,kind,payload\n25,goal,2\n");
  cfg.traceSink = dir / "trace.csv";
  cfg.decisionLogSink = dir / "decisions.csv";
  Runtime rt(cfg);
  const IntentSpec spec = parseIntent(kToyIntent);
  rt.loadIntent(spec);
  rt.setModel("toy", toyModel(spec));
  Toy toy(rt);
  const RunResult r = toy.run(rt, 1000);
  CHECK(r.resetWindows == std::vector<std::size_t>{3});
  CHECK(r.finalIntent.constraintGoal->value == 2);
  // Before the boundary at 30 the old goal still drives the schedule.
  CHECK(r.trace.records[29].measures[0] == 6);
  CHECK(r.trace.records[35].measures[0] == 2);
  // The CSV carries no configuration ids.
  Trace withoutIds = r.trace;
  for (auto& rec : withoutIds.records) rec.configId.reset();
  CHECK(loadTrace(dir / "trace.csv", spec.measureNames()) == withoutIds);
  CHECK(readTextFile(dir / "decisions.csv") == renderDecisionLog(r.decisions));
}

TEST_CASE("optimize: fixed mode by configuration id") {
  RuntimeConfig cfg;
  cfg.mode = ControlMode::Fixed;
  cfg.fixedConfigId = 5;
  cfg.iterationBudget = 7;
  Runtime rt(cfg);
  const IntentSpec spec = parseIntent(kToyIntent);
  rt.loadIntent(spec);
  Toy toy(rt);
  const RunResult r = toy.run(rt, 100);
  REQUIRE(r.trace.size() == 7);
  // Space order: a fastest, so id 5 is a=2, b=2.
  for (const auto& rec : r.trace.records) CHECK(rec.knobs == Configuration{2, 2});
}

TEST_CASE("optimize: platform knobs and measures come from the simulator") {
  RuntimeConfig cfg;
  cfg.iterationBudget = 3;
  Runtime rt(cfg);
  rt.loadIntent(fast::testing::incrementerIntent());
  demo::Incrementer app(rt);
  const RunResult r = app.run("incrementer");
  REQUIRE(r.trace.size() == 3);
  CHECK(r.trace.knobNames == std::vector<std::string>{"step", "threshold", "coreFrequency"});
  const auto& rec = r.trace.records[0];
  CHECK(rec.knobs == Configuration{1, 8000000, 1200});
  CHECK(rec.measures[1] == 8000000);
  CHECK(rec.measures[0] == doctest::Approx(8e6 * 10 / 1.2e9).epsilon(1e-12));
  CHECK(rt.registry().captured() == std::set<std::string, std::less<>>{"coreFrequency", "step", "threshold"});
}

TEST_CASE("perturbation scripts") {
  const PerturbationScript s = parsePerturbationScript(
      "iteration,kind,payload\n"
      "# comment\n"
      "300,goal,0.15\n"
      "100,constraintMeasure,latency 0.2\n"
      "100,optimizationType,max\n"
      "200,objective,energy * 2\n"
      "400,restrict,step 1 2\n"
      "450,restrict,step\n"
      "500,control,step\n");
  REQUIRE(s.events.size() == 7);
  CHECK(s.events[0].kind == PerturbationKind::ConstraintMeasure);
  CHECK(s.events[0].name == "latency");
  CHECK(s.events[0].newGoal == 0.2);
  CHECK(s.events[1].kind == PerturbationKind::OptimizationType);
  CHECK(s.events[1].optimization == OptimizationType::Max);
  CHECK(s.events[2].kind == PerturbationKind::Objective);
  CHECK(s.events[3].goal == 0.15);
  CHECK(s.events[4].values == std::vector<double>{1, 2});
  CHECK_FALSE(s.events[5].values.has_value());
  CHECK_FALSE(s.events[6].changesIntent());

  CHECK_THROWS_AS(parsePerturbationScript("10,explode,now\n"), Error);
  CHECK_THROWS_AS(parsePerturbationScript("x,goal,1\n"), Error);

  IntentSpec spec = fast::testing::incrementerIntent();
  applyToIntent(spec, s.events[2]);
  CHECK(spec.objective == Expr::apply(Op::Mul, {Expr::measure("energy"), Expr::number(Number::integer(2))}));
  Perturbation bad;
  bad.kind = PerturbationKind::Objective;
  bad.objective = Expr::measure("nothing");
  CHECK_THROWS_AS(applyToIntent(spec, bad), ValidationError);
}

TEST_CASE("traces: render and parse") {
  Trace t;
  t.knobNames = {"k"};
  t.measureNames = {"m", "n"};
  t.records = {{0, {1}, {0.1, 1.0 / 3.0}, std::nullopt}, {1, {2}, {0.2, 2.5}, std::nullopt}};
  const std::string text = renderTrace(t);
  CHECK(text.starts_with("iteration,k,m,n\n"));
  CHECK(parseTrace(text, {"m", "n"}) == t);
  CHECK_THROWS_AS(parseTrace("iteration,k,m\n0,1,2\n2,1,2\n", {"m"}), SchemaMismatch);
  CHECK(t.column("n") == std::vector<double>{1.0 / 3.0, 2.5});
}
