// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/platform/sim_platform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fast/csv.hpp"
#include "fast/errors.hpp"
#include "fast/numfmt.hpp"

namespace fast {

bool isPlatformKnob(std::string_view name) {
  return std::find(kPlatformKnobs.begin(), kPlatformKnobs.end(), name) != kPlatformKnobs.end();
}

bool isPlatformMeasure(std::string_view name) {
  return std::find(kPlatformMeasures.begin(), kPlatformMeasures.end(), name) != kPlatformMeasures.end();
}

PlatformParams parsePlatformParams(std::string_view text) {
  PlatformParams p;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SchemaMismatch("platform config line " + std::to_string(lineNo) + ": missing '='");
    const std::string key(trim(line.substr(0, eq)));
    const auto value = parseDouble(trim(line.substr(eq + 1)));
    if (!value) throw SchemaMismatch("platform config line " + std::to_string(lineNo) + ": bad value");
    if (key == "staticPower") {
      p.staticPower = *value;
    } else if (key == "dynamicCoeff") {
      p.dynamicCoeff = *value;
    } else if (key == "cyclesPerUnit") {
      p.cyclesPerUnit = *value;
    } else if (key == "noiseAmplitude") {
      p.noiseAmplitude = *value;
    } else if (key == "seed") {
      p.seed = static_cast<std::uint64_t>(*value);
    } else {
      throw SchemaMismatch("platform config line " + std::to_string(lineNo) + ": unknown key '" + key + "'");
    }
  }
  if (p.noiseAmplitude < 0.0 || p.noiseAmplitude >= 1.0) throw SchemaMismatch("noiseAmplitude must be in [0,1)");
  if (p.cyclesPerUnit <= 0.0) throw SchemaMismatch("cyclesPerUnit must be positive");
  return p;
}

PlatformParams loadPlatformParams(const std::filesystem::path& path) {
  return parsePlatformParams(readTextFile(path));
}

SimPlatform::SimPlatform(PlatformParams params)
    : params_(params), rng_(params.seed), noise_(1.0 - params.noiseAmplitude, 1.0 + params.noiseAmplitude) {}

void SimPlatform::setFrequency(double mhz) {
  if (!(mhz > 0.0)) throw Error("core frequency must be positive");
  frequencyMHz_ = mhz;
}

void SimPlatform::setCores(int cores) {
  if (cores < 1) throw Error("utilized cores must be >= 1");
  cores_ = cores;
}

IterationCost SimPlatform::cost(double work, double parallelFraction) const {
  const double serial = (1.0 - parallelFraction) + parallelFraction / static_cast<double>(cores_);
  const double ghz = frequencyMHz_ / 1000.0;
  IterationCost c;
  c.latency = work * params_.cyclesPerUnit / (frequencyMHz_ * 1e6) * serial;
  c.powerConsumption = params_.staticPower + static_cast<double>(cores_) * params_.dynamicCoeff * ghz * ghz * ghz;
  c.energy = c.latency * c.powerConsumption;
  c.performance = 1.0 / c.latency;
  return c;
}

IterationCost SimPlatform::simulateIteration(double work, double parallelFraction) {
  if (!(work > 0.0)) throw Error("iteration work must be positive");
  if (parallelFraction < 0.0 || parallelFraction > 1.0) throw Error("parallel fraction outside [0,1]");
  IterationCost c = cost(work, parallelFraction);
  if (params_.noiseAmplitude > 0.0) {
    c.latency *= noise_(rng_);
    c.energy = c.latency * c.powerConsumption;
    c.performance = 1.0 / c.latency;
  }
  clock_ += c.latency;
  energy_ += c.energy;
  return c;
}

}  // namespace fast
