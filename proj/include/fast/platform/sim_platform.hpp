// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string_view>

namespace fast {

/// Names of the platform knobs and measures the simulator provides.
inline constexpr std::string_view kCoreFrequency = "coreFrequency";
inline constexpr std::string_view kUtilizedCores = "utilizedCores";
inline constexpr std::string_view kLatency = "latency";
inline constexpr std::string_view kEnergy = "energy";
inline constexpr std::string_view kPowerConsumption = "powerConsumption";
inline constexpr std::string_view kPerformance = "performance";

inline constexpr std::array<std::string_view, 2> kPlatformKnobs = {kCoreFrequency, kUtilizedCores};
inline constexpr std::array<std::string_view, 4> kPlatformMeasures = {kLatency, kEnergy, kPowerConsumption,
                                                                      kPerformance};

bool isPlatformKnob(std::string_view name);
bool isPlatformMeasure(std::string_view name);

/// Constants of the simulated machine.
///
///   latency = work * cyclesPerUnit / (f_MHz * 1e6) * ((1-p) + p/cores) * noise
///   power   = staticPower + cores * dynamicCoeff * f_GHz^3
///   energy  = latency * power
///
/// noise is uniform in [1-a, 1+a] drawn from a generator seeded with `seed`.
struct PlatformParams {
  double staticPower = 2.0;
  double dynamicCoeff = 1.0;
  double cyclesPerUnit = 10.0;
  double noiseAmplitude = 0.0;
  std::uint64_t seed = 1;

  bool operator==(const PlatformParams&) const = default;
};

/// Reads "key = value" lines (staticPower, dynamicCoeff, cyclesPerUnit,
/// noiseAmplitude, seed); '#' starts a comment. Unknown keys are errors.
PlatformParams loadPlatformParams(const std::filesystem::path& path);
PlatformParams parsePlatformParams(std::string_view text);

struct IterationCost {
  double latency = 0.0;
  double energy = 0.0;
  double performance = 0.0;
  double powerConsumption = 0.0;
};

/// Deterministic stand-in for the measured machine: turns abstract work
/// units into latency and energy under the current frequency/core setting.
class SimPlatform {
 public:
  static constexpr double kDefaultFrequencyMHz = 1200.0;

  explicit SimPlatform(PlatformParams params = {});

  const PlatformParams& params() const noexcept { return params_; }

  void setFrequency(double mhz);
  void setCores(int cores);
  double frequency() const noexcept { return frequencyMHz_; }
  int cores() const noexcept { return cores_; }

  /// Pure cost law without noise and without touching clock or energy.
  IterationCost cost(double work, double parallelFraction) const;

  /// Charges one iteration of `work` units. Requires work > 0 and
  /// parallelFraction in [0,1].
  IterationCost simulateIteration(double work, double parallelFraction);

  double clock() const noexcept { return clock_; }
  double totalEnergy() const noexcept { return energy_; }

 private:
  PlatformParams params_;
  double frequencyMHz_ = kDefaultFrequencyMHz;
  int cores_ = 1;
  double clock_ = 0.0;
  double energy_ = 0.0;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> noise_;
};

}  // namespace fast
