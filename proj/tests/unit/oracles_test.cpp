// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "fast/errors.hpp"
#include "fast/intent/parser.hpp"
#include "fast/oracles/metrics.hpp"
#include "fast/oracles/oracle.hpp"
#include "fast/oracles/timeline.hpp"
#include "fast/oracles/verdict.hpp"
#include "fast/runtime/perturbation.hpp"

using namespace fast;

namespace {

IntentSpec oracleIntent(std::string_view direction = "min") {
  return parseIntent("intent o " + std::string(direction) +
                     "(cost) such that lat == 0.1 measures lat: Double cost: Double knobs k = [0, 1, 2, 3]");
}

/// Trace with knob k fixed to `id` and the given per-iteration values.
Trace traceOf(std::size_t id, const std::vector<double>& lat, const std::vector<double>& cost) {
  Trace t;
  t.knobNames = {"k"};
  t.measureNames = {"lat", "cost"};
  for (std::size_t i = 0; i < lat.size(); ++i) {
    t.records.push_back({i, {static_cast<double>(id)}, {lat[i], cost[i]}, id});
  }
  return t;
}

Trace constantTrace(std::size_t id, double lat, double cost, std::size_t n) {
  return traceOf(id, std::vector<double>(n, lat), std::vector<double>(n, cost));
}

}  // namespace

TEST_CASE("metrics: examples") {
  const IntentTimeline tl(oracleIntent());
  const auto exact = computeMetrics(constantTrace(0, 0.1, 2, 40), tl, 20);
  CHECK(exact.mape == 0.0);
  CHECK(exact.cumulativeObjective == 4.0);

  std::vector<double> lat(40, 0.09);
  std::fill(lat.begin() + 20, lat.end(), 0.11);
  const auto two = computeMetrics(traceOf(0, lat, std::vector<double>(40, 1)), tl, 20);
  CHECK(two.mape == doctest::Approx(0.1).epsilon(1e-12));

  IntentSpec zero = oracleIntent();
  zero.constraintGoal = Number::integer(0);
  CHECK_THROWS_AS(computeMetrics(constantTrace(0, 0.1, 2, 40), IntentTimeline(zero), 20), ZeroGoal);
  CHECK_THROWS_AS(computeMetrics(Trace{{"k"}, {"lat", "cost"}, {}}, tl, 20), Error);
}

TEST_CASE("metrics: partial windows, skipping and goal changes") {
  const auto script = parsePerturbationScript("10,goal,0.2\n");
  const IntentTimeline tl(oracleIntent(), script);
  const Trace t = constantTrace(0, 0.2, 1, 25);
  const auto windows = summarizeWindows(t, tl, 10);
  REQUIRE(windows.size() == 3);
  CHECK(windows[0].goal == 0.1);
  CHECK(windows[1].goal == 0.2);
  CHECK(windows[2].count == 5);
  CHECK(computeMetrics(t, tl, 10).mape == doctest::Approx(1.0 / 3.0));
  CHECK(windowMape(t, tl, 10, 1) == 0.0);

  // A goal change mid-window is averaged per iteration.
  const IntentTimeline mid(oracleIntent(), parsePerturbationScript("5,goal,0.2\n"));
  CHECK(summarizeWindows(t, mid, 10)[0].goal == doctest::Approx(0.15));
}

TEST_CASE("metrics: a direction change is folded back into the initial sign") {
  const IntentTimeline tl(oracleIntent(), parsePerturbationScript("10,optimizationType,max\n10,objective,-cost\n"));
  const auto m = computeMetrics(constantTrace(0, 0.1, 3, 20), tl, 10);
  CHECK(m.cumulativeObjective == 6.0);
}

TEST_CASE("objectiveAdvantage: examples and properties") {
  CHECK(objectiveAdvantage(3, 3) == 0.0);
  CHECK(objectiveAdvantage(0, 0) == 0.0);
  CHECK(objectiveAdvantage(6, 4) == doctest::Approx(1.0 / 3.0));
  CHECK(objectiveAdvantage(-4, -6) == doctest::Approx(1.0 / 3.0));
  CHECK(objectiveAdvantage(4, 6) == 0.0);
  CHECK(objectiveAdvantage(1, -1) == 2.0);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int i = 0; i < 10000; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double adv = objectiveAdvantage(a, b);
    CHECK(adv >= 0.0);
    CHECK(adv <= 2.0);
    CHECK(objectiveAdvantage(a, a) == 0.0);
    // At most one direction carries an advantage, and scaling does not change it.
    CHECK((adv == 0.0 || objectiveAdvantage(b, a) == 0.0));
    CHECK(objectiveAdvantage(3 * a, 3 * b) == doctest::Approx(adv).epsilon(1e-12));
  }
}

TEST_CASE("Oracle A: selection rule") {
  const IntentTimeline tl(oracleIntent());
  VerdictConfig cfg;
  SUBCASE("exactly one trace meets T") {
    const std::vector<FixedTrace> f = {{0, constantTrace(0, 0.2, 1, 20)}, {1, constantTrace(1, 0.1, 50, 20)}};
    CHECK(buildOracleA(f, tl, cfg, 10).index == 1);
  }
  SUBCASE("two traces meet T: better objective wins") {
    const std::vector<FixedTrace> f = {{0, constantTrace(0, 0.1, 5, 20)}, {1, constantTrace(1, 0.101, 4, 20)}};
    const auto choice = buildOracleA(f, tl, cfg, 10);
    CHECK(choice.index == 1);
    CHECK(choice.metrics.cumulativeObjective == 8.0);
  }
  SUBCASE("none meets T: lowest error") {
    const std::vector<FixedTrace> f = {{0, constantTrace(0, 0.3, 1, 20)}, {1, constantTrace(1, 0.2, 9, 20)}};
    CHECK(buildOracleA(f, tl, cfg, 10).index == 1);
  }
  SUBCASE("ties go to the lower id") {
    const std::vector<FixedTrace> f = {{3, constantTrace(3, 0.1, 5, 20)}, {2, constantTrace(2, 0.1, 5, 20)}};
    CHECK(buildOracleA(f, tl, cfg, 10).index == 1);
  }
  SUBCASE("maximizing") {
    const IntentTimeline maxTl(oracleIntent("max"));
    const std::vector<FixedTrace> f = {{0, constantTrace(0, 0.1, 5, 20)}, {1, constantTrace(1, 0.1, 4, 20)}};
    CHECK(buildOracleA(f, maxTl, cfg, 10).index == 0);
  }
}

TEST_CASE("Oracle B: iteration-wise choice") {
  const IntentTimeline tl(oracleIntent());
  SUBCASE("single trace") {
    const Trace t = constantTrace(2, 0.3, 1, 10);
    CHECK(buildOracleB({{2, t}}, tl) == t);
  }
  SUBCASE("closest to the goal") {
    const std::vector<FixedTrace> f = {{0, constantTrace(0, 0.12, 1, 10)}, {1, constantTrace(1, 0.09, 9, 10)}};
    const Trace b = buildOracleB(f, tl);
    for (const auto& r : b.records) CHECK(r.configId == 1);
  }
  SUBCASE("error ties broken by objective then id") {
    const std::vector<FixedTrace> f = {{0, constantTrace(0, 0.09, 4, 10)},
                                       {1, constantTrace(1, 0.09, 3, 10)},
                                       {2, constantTrace(2, 0.09, 3, 10)}};
    for (const auto& r : buildOracleB(f, tl).records) CHECK(r.configId == 1);
  }
  SUBCASE("restrictions exclude the best trace") {
    const IntentTimeline restricted(oracleIntent(), parsePerturbationScript("3,restrict,k 0\n6,control,k\n"));
    const std::vector<FixedTrace> f = {{0, constantTrace(0, 0.2, 1, 10)}, {1, constantTrace(1, 0.1, 1, 10)}};
    const Trace b = buildOracleB(f, restricted);
    for (std::size_t i = 0; i < 10; ++i) CHECK(b.records[i].configId == (i >= 3 && i < 6 ? 0u : 1u));
  }
  SUBCASE("nothing admissible") {
    const IntentTimeline restricted(oracleIntent(), parsePerturbationScript("3,restrict,k 3\n"));
    const std::vector<FixedTrace> f = {{0, constantTrace(0, 0.2, 1, 10)}};
    CHECK_THROWS_AS(buildOracleB(f, restricted), EmptyAvailability);
  }
}

TEST_CASE("Oracle B dominates every admissible fixed trace") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.05, 0.15);
  const IntentTimeline tl(oracleIntent(), parsePerturbationScript("7,goal,0.12\n20,restrict,k 1 2\n"));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FixedTrace> f;
    for (std::size_t id = 0; id < 4; ++id) {
      std::vector<double> lat(30), cost(30);
      for (std::size_t i = 0; i < 30; ++i) {
        lat[i] = u(rng);
        cost[i] = u(rng);
      }
      f.push_back({id, traceOf(id, lat, cost)});
    }
    const Trace b = buildOracleB(f, tl);
    for (std::size_t i = 0; i < 30; ++i) {
      const double goal = tl.goalAt(i);
      for (const auto& ft : f) {
        if (!tl.admissible(i, ft.trace.knobNames, ft.trace.records[i].knobs)) continue;
        CHECK(std::fabs(b.records[i].measures[0] - goal) <= std::fabs(ft.trace.records[i].measures[0] - goal));
      }
    }
  }
}

TEST_CASE("verdict A: truth table") {
  const VerdictConfig cfg;  // T = 0.05
  // E values on either side of T, F relations better / equal / worse for FAST.
  struct Row {
    double eOracle, eFast;
    double fFast, fOracle;
    OptimizationType dir;
    Verdict expected;
  };
  using enum OptimizationType;
  const Row rows[] = {
      {0.9, 0.03, 1, 1, Min, Verdict::Pass},      {0.9, 0.9, 1, 1, Min, Verdict::Invalid},
      {0.9, 0.03, 9, 1, Max, Verdict::Pass},      {0.9, 0.9, 1, 9, Max, Verdict::Invalid},
      {0.02, 0.03, 5, 7, Min, Verdict::Pass},     {0.02, 0.03, 9, 7, Min, Verdict::Fail},
      {0.02, 0.03, 7, 7, Min, Verdict::Pass},     {0.02, 0.03, 9, 7, Max, Verdict::Pass},
      {0.02, 0.03, 5, 7, Max, Verdict::Fail},     {0.02, 0.03, 7, 7, Max, Verdict::Pass},
      {0.02, 0.9, 5, 7, Min, Verdict::Fail},      {0.02, 0.9, 9, 7, Max, Verdict::Fail},
      {0.05, 0.05, 7, 7, Min, Verdict::Pass},     {0.0500001, 0.05, 7, 7, Min, Verdict::Pass},
      {0.05, 0.0500001, 7, 7, Min, Verdict::Fail}, {0.0500001, 0.0500001, 7, 7, Min, Verdict::Invalid},
  };
  for (const Row& r : rows) {
    CAPTURE(r.eOracle);
    CAPTURE(r.eFast);
    CAPTURE(r.fFast);
    CAPTURE(r.fOracle);
    CHECK(verdictA({r.eFast, r.fFast}, {r.eOracle, r.fOracle}, r.dir, cfg) == r.expected);
  }
}

TEST_CASE("verdict B: truth table") {
  const VerdictConfig cfg;  // TE = TF = 0.05
  struct Row {
    double eFast, eOracle;
    double fFast, fOracle;
    OptimizationType dir;
    Verdict expected;
  };
  using enum OptimizationType;
  const Row rows[] = {
      {0.06, 0.0, 1, 1, Min, Verdict::Fail},   {0.06, 0.9, 1, 1, Max, Verdict::Fail},
      {0.03, 0.06, 100, 1, Min, Verdict::Pass}, {0.03, 0.06, 1, 100, Max, Verdict::Pass},
      // Both meet; the oracle's advantage on the oriented objective decides.
      {0.03, 0.01, 100, 100, Min, Verdict::Pass},
      {0.03, 0.01, 104, 100, Min, Verdict::Pass},  // advantage 4/104 < 0.05
      {0.03, 0.01, 106, 100, Min, Verdict::Fail},  // 6/106 > 0.05
      {0.03, 0.01, 90, 100, Min, Verdict::Pass},   // FAST better: no advantage
      {0.03, 0.01, 96, 100, Max, Verdict::Pass},   // 4/100
      {0.03, 0.01, 94, 100, Max, Verdict::Fail},   // 6/100
      {0.03, 0.01, 120, 100, Max, Verdict::Pass},
      {0.05, 0.0, 1, 1, Min, Verdict::Fail},       // error gap equal to TE is not close
  };
  for (const Row& r : rows) {
    CAPTURE(r.eFast);
    CAPTURE(r.fFast);
    CAPTURE(r.fOracle);
    CHECK(verdictB({r.eFast, r.fFast}, {r.eOracle, r.fOracle}, r.dir, cfg) == r.expected);
  }
  CHECK(name(Verdict::Invalid) == "INVALID");
}
