// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fast/errors.hpp"
#include "fast/platform/sim_platform.hpp"
#include "test_support.hpp"

using namespace fast;

TEST_CASE("platform: cost law") {
  SimPlatform p;
  p.setFrequency(1200);
  const IterationCost c = p.cost(1000, 0.0);
  CHECK(c.latency == doctest::Approx(1000 * 10.0 / 1.2e9).epsilon(1e-12));
  CHECK(c.powerConsumption == doctest::Approx(2.0 + 1.2 * 1.2 * 1.2).epsilon(1e-12));
  CHECK(c.energy == doctest::Approx(c.latency * c.powerConsumption).epsilon(1e-12));
}

TEST_CASE("platform: linearity and Amdahl limit") {
  SimPlatform p;
  p.setFrequency(600);
  CHECK(p.cost(2000, 0.3).latency == 2 * p.cost(1000, 0.3).latency);
  const double one = p.cost(1000, 1.0).latency;
  p.setCores(4);
  CHECK(p.cost(1000, 1.0).latency == doctest::Approx(one / 4).epsilon(1e-15));
}

TEST_CASE("platform: higher frequency is faster and cheaper for fixed work") {
  SimPlatform p;
  p.setFrequency(300);
  const IterationCost slow = p.cost(10000, 0.0);
  p.setFrequency(1200);
  const IterationCost fast = p.cost(10000, 0.0);
  CHECK(fast.latency < slow.latency);
  CHECK(fast.energy < slow.energy);
}

TEST_CASE("platform: monotone in frequency and cores") {
  SimPlatform p;
  double previous = 1e300;
  for (double f = 100; f <= 3000; f += 100) {
    p.setFrequency(f);
    const double lat = p.cost(500, 0.5).latency;
    CHECK(lat < previous);
    previous = lat;
  }
  for (int cores = 1; cores < 8; ++cores) {
    p.setCores(cores);
    const double a = p.cost(500, 0.5).latency;
    p.setCores(cores + 1);
    CHECK(p.cost(500, 0.5).latency <= a);
  }
}

TEST_CASE("platform: simulated iterations are deterministic and accumulate") {
  PlatformParams params;
  params.noiseAmplitude = 0.05;
  params.seed = 42;
  SimPlatform a(params);
  SimPlatform b(params);
  double clock = 0;
  double energy = 0;
  for (int i = 0; i < 100; ++i) {
    const IterationCost x = a.simulateIteration(1000 + i, 0.2);
    const IterationCost y = b.simulateIteration(1000 + i, 0.2);
    CHECK(x.latency == y.latency);
    CHECK(x.energy == y.energy);
    CHECK(x.performance * x.latency == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x.powerConsumption * x.latency == doctest::Approx(x.energy).epsilon(1e-15));
    const double nominal = a.cost(1000 + i, 0.2).latency;
    CHECK(x.latency >= nominal * 0.95 * (1 - 1e-12));
    CHECK(x.latency <= nominal * 1.05 * (1 + 1e-12));
    CHECK(a.clock() >= clock);
    CHECK(a.totalEnergy() >= energy);
    clock = a.clock();
    energy = a.totalEnergy();
  }
}

TEST_CASE("platform: guards and configuration files") {
  SimPlatform p;
  CHECK_THROWS_AS(p.simulateIteration(0, 0.5), Error);
  CHECK_THROWS_AS(p.simulateIteration(1, 1.5), Error);
  CHECK_THROWS_AS(p.setCores(0), Error);
  CHECK_THROWS_AS(p.setFrequency(-1), Error);

  const PlatformParams parsed = parsePlatformParams("# comment\nstaticPower = 3\nnoiseAmplitude=0.05\nseed = 9\n");
  CHECK(parsed.staticPower == 3);
  CHECK(parsed.noiseAmplitude == 0.05);
  CHECK(parsed.seed == 9);
  CHECK(parsed.dynamicCoeff == 1.0);
  CHECK_THROWS_AS(parsePlatformParams("bogus = 1\n"), Error);
  CHECK(loadPlatformParams(fast::testing::dataPath("platform.conf")) == PlatformParams{});
  CHECK(loadPlatformParams(fast::testing::dataPath("platform_noisy.conf")).noiseAmplitude == 0.05);
  CHECK(isPlatformKnob("coreFrequency"));
  CHECK_FALSE(isPlatformKnob("step"));
  CHECK(isPlatformMeasure("performance"));
}
