// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "fast/controller/controller.hpp"
#include "fast/errors.hpp"
#include "fast/intent/printer.hpp"
#include "test_support.hpp"

using namespace fast;
using fast::testing::smallIncrementerModel;
using fast::testing::smallModelIntent;

namespace {

ControllerModel onlyRows(const ControllerModel& m, std::initializer_list<std::size_t> keep) {
  ControllerModel out = m;
  out.rows.clear();
  for (std::size_t id : keep) out.rows.push_back(*m.findId(id));
  return out;
}

}  // namespace

TEST_CASE("unconstrained: grid search") {
  const ControllerModel m = smallIncrementerModel();
  const Schedule minEnergy = computeScheduleUnconstrained(CompiledIntent(smallModelIntent("min(energy)")), m, 20);
  CHECK(minEnergy.primary == 5);
  CHECK(minEnergy.constant());
  CHECK(minEnergy.alpha == 1.0);
  CHECK(minEnergy.objectiveEstimate == 2587574);

  // operations 19949 appears at ids 2 and 6; the lower id wins.
  const Schedule maxOps = computeScheduleUnconstrained(CompiledIntent(smallModelIntent("max(operations)")), m, 20);
  CHECK(maxOps.primary == 2);
  CHECK(maxOps.constant());

  const Schedule single =
      computeScheduleUnconstrained(CompiledIntent(smallModelIntent("min(energy)")), onlyRows(m, {3}), 20);
  CHECK(single.primary == 3);
  CHECK(computeSchedule(CompiledIntent(smallModelIntent("min(energy)")), m, 1.0, 20) == minEnergy);
}

TEST_CASE("constrained: interpolating two rows") {
  const CompiledIntent intent(smallModelIntent("min(energy) such that latency == 0.008"));
  const ControllerModel pair = onlyRows(smallIncrementerModel(), {1, 5});
  const Schedule s = computeScheduleConstrained(intent, pair, 1.0, 20);
  CHECK(s.bracketed);
  CHECK(s.primary == 1);
  CHECK(s.secondary == 5);
  CHECK(s.alpha == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
  CHECK(s.objectiveEstimate == doctest::Approx(4.0 / 7 * 5367987 + 3.0 / 7 * 2587574).epsilon(1e-12));
  CHECK(s.objectiveEstimate == doctest::Approx(4176382).epsilon(1e-6));
  CHECK(s.primaryCount() == 11);
  CHECK(s.predictedConstraint == doctest::Approx((11 * 0.011 + 9 * 0.004) / 20).epsilon(1e-12));
  CHECK(s.objectiveEstimate == doctest::Approx(scheduleCost(intent, pair, 0.008)).epsilon(1e-12));
}

TEST_CASE("constrained: full small incrementer model") {
  const CompiledIntent intent(smallModelIntent("min(energy) such that latency == 0.008"));
  const ControllerModel m = smallIncrementerModel();
  const Schedule s = computeScheduleConstrained(intent, m, 1.0, 20);
  CHECK(s.objectiveEstimate == doctest::Approx(scheduleCost(intent, m, 0.008)).epsilon(1e-9));
  // Row 4 sits exactly on the goal, so the schedule can be no worse than it.
  CHECK(s.objectiveEstimate <= 3495722);
}

TEST_CASE("constrained: exact hit and unreachable goals") {
  const ControllerModel m = smallIncrementerModel();
  SUBCASE("goal equal to a row") {
    // latency 0.011: rows 1 and 3; row 3 has the lower energy.
    const Schedule s = computeScheduleConstrained(
        CompiledIntent(smallModelIntent("min(energy) such that latency == 0.011")), m, 1.0, 20);
    CHECK(s.objectiveEstimate <= 4311562);
    CHECK(s.bracketed);
  }
  SUBCASE("goal above every row") {
    const Schedule s = computeScheduleConstrained(
        CompiledIntent(smallModelIntent("min(energy) such that latency == 5")), m, 1.0, 20);
    CHECK_FALSE(s.bracketed);
    CHECK(s.constant());
    CHECK(s.primary == 2);  // largest latency, 0.031
    CHECK(s.predictedConstraint == 0.031);
  }
  SUBCASE("goal below every row") {
    const Schedule s = computeScheduleConstrained(
        CompiledIntent(smallModelIntent("min(energy) such that latency == 0.001")), m, 1.0, 20);
    CHECK_FALSE(s.bracketed);
    CHECK(s.primary == 5);
  }
  SUBCASE("lambda scales the goal") {
    const CompiledIntent intent(smallModelIntent("min(energy) such that latency == 0.004"));
    const Schedule scaled = computeScheduleConstrained(intent, m, 2.0, 20);
    const Schedule direct = computeScheduleConstrained(
        CompiledIntent(smallModelIntent("min(energy) such that latency == 0.008")), m, 1.0, 20);
    CHECK(scaled == direct);
  }
}

TEST_CASE("constrained: min/max duality") {
  fast::testing::Generator gen(71);
  for (int trial = 0; trial < 200; ++trial) {
    const ControllerModel m = gen.model(static_cast<std::size_t>(gen.uniformInt(2, 12)), 3);
    const Expr f = gen.numeric({"m1", "m2"}, false, 2);
    const double goal = gen.uniformReal(0.5, 9.5);
    const CompiledIntent asMin(fast::testing::modelIntent(m, OptimizationType::Min, f, goal));
    const CompiledIntent asMax(
        fast::testing::modelIntent(m, OptimizationType::Max, Expr::apply(Op::Neg, {f}), goal));
    const Schedule a = computeScheduleConstrained(asMin, m, 1.0, 20);
    const Schedule b = computeScheduleConstrained(asMax, m, 1.0, 20);
    CAPTURE(printExpr(f));
    CHECK(a.primary == b.primary);
    CHECK(a.secondary == b.secondary);
    CHECK(a.alpha == b.alpha);
  }
}

TEST_CASE("constrained: restricting never improves the optimum") {
  fast::testing::Generator gen(72);
  for (int trial = 0; trial < 200; ++trial) {
    const ControllerModel m = gen.model(static_cast<std::size_t>(gen.uniformInt(3, 15)), 2);
    const double goal = gen.uniformReal(0.5, 9.5);
    const CompiledIntent intent(
        fast::testing::modelIntent(m, OptimizationType::Min, Expr::measure("m1"), goal));
    std::set<double> keep;
    for (const auto& r : m.rows) {
      if (gen.coin()) keep.insert(r.knobs[0]);
    }
    if (keep.empty()) continue;
    const ControllerModel sub = modelRestrict(m, {{"k", keep}});
    double full = 0;
    double restricted = 0;
    try {
      full = scheduleCost(intent, m, goal);
      restricted = scheduleCost(intent, sub, goal);
    } catch (const Infeasible&) {
      continue;
    }
    CHECK(restricted >= full - 1e-12 * std::max(1.0, std::abs(full)));
    const Schedule s = computeScheduleConstrained(intent, sub, 1.0, 20);
    CHECK(std::find_if(sub.rows.begin(), sub.rows.end(), [&](const ModelRow& r) { return r.id == s.primary; }) !=
          sub.rows.end());
  }
}

TEST_CASE("realize: rounding rule") {
  Schedule s;
  s.windowSize = 20;
  s.primary = 1;
  s.secondary = 5;
  s.alpha = 4.0 / 7.0;
  const auto seq = realizeSchedule(s);
  CHECK(std::count(seq.begin(), seq.end(), 1) == 11);
  CHECK(std::count(seq.begin(), seq.end(), 5) == 9);
  CHECK(std::is_sorted(seq.begin(), seq.end()));  // one switch point
  CHECK(s.at(10) == 1);
  CHECK(s.at(11) == 5);
  CHECK(s.at(31) == 5);

  s.alpha = 1.0;
  CHECK(realizeSchedule(s) == std::vector<std::size_t>(20, 1));
  s.alpha = 0.0;
  CHECK(realizeSchedule(s) == std::vector<std::size_t>(20, 5));
  s.alpha = 0.5;
  s.windowSize = 1;
  CHECK(realizeSchedule(s) == std::vector<std::size_t>{1});
}

TEST_CASE("feedback: filter law") {
  FeedbackState st;
  CHECK(feedbackUpdate(st, 0.1, 0.1).lambda == 1.0);
  CHECK(feedbackUpdate(st, 0.008, 0.010).lambda == doctest::Approx(0.94).epsilon(1e-12));
  CHECK_THROWS_AS(feedbackUpdate(st, 0.008, 0.0), NonPositiveMeasure);
  CHECK_THROWS_AS(feedbackUpdate(st, -1.0, 1.0), NonPositiveMeasure);
  st.gain = 1.0;
  CHECK(feedbackUpdate(st, 2.0, 1.0).lambda == 2.0);
  st.lambda = 3.0;
  st.reset();
  CHECK(st.lambda == 1.0);
}

TEST_CASE("scheduleCost: closed form") {
  const ControllerModel m = smallIncrementerModel();
  const CompiledIntent intent(smallModelIntent("min(energy) such that latency == 0.008"));
  CHECK(scheduleCost(intent, onlyRows(m, {4}), 0.008) == 3495722);
  CHECK_THROWS_AS(scheduleCost(intent, onlyRows(m, {0, 2}), 0.008), Infeasible);
  CHECK(scheduleCost(CompiledIntent(smallModelIntent("max(operations) such that latency == 0.008")), m,
                     0.008) >= 10000);
}

TEST_CASE("decision log rendering") {
  const std::string text = renderDecisionLog({{0, 1, 5, 0.5, 1.0, 0.0075, 3977780.5}});
  CHECK(text ==
        "window,primaryId,secondaryId,alpha,lambda,predictedConstraint,objectiveEstimate\n"
        "0,1,5,0.5,1,0.0075,3977780.5\n");
}
