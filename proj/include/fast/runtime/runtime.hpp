// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fast/controller/controller.hpp"
#include "fast/intent/compiler.hpp"
#include "fast/intent/config_space.hpp"
#include "fast/platform/sim_platform.hpp"
#include "fast/profiler/model.hpp"
#include "fast/runtime/knob.hpp"
#include "fast/runtime/perturbation.hpp"
#include "fast/runtime/trace.hpp"

namespace fast {

enum class ControlMode {
  Controlled,    // controller picks a schedule every window
  Uncontrolled,  // reference configuration throughout
  Fixed,         // one given configuration throughout
};

struct RuntimeConfig {
  std::size_t windowSize = 20;
  std::optional<PerturbationScript> perturbations;
  std::optional<std::filesystem::path> traceSink;
  std::optional<std::filesystem::path> decisionLogSink;
  /// 0 runs until the routine reports that its input is exhausted.
  std::size_t iterationBudget = 0;
  ControlMode mode = ControlMode::Controlled;
  /// Fixed mode: knob values in intent order, or a model row id.
  std::optional<Configuration> fixedConfiguration;
  std::optional<std::size_t> fixedConfigId;
  double feedbackGain = 0.3;
  PlatformParams platform;
};

struct RunResult {
  Trace trace;
  std::vector<DecisionRecord> decisions;
  /// Windows at whose start the controller state was reset.
  std::vector<std::size_t> resetWindows;
  FeedbackState finalFeedback;
  IntentSpec finalIntent;
};

/// Routine contract: returns false when there was no input left to process;
/// that call is not recorded.
using Routine = std::function<bool()>;

class Runtime {
 public:
  explicit Runtime(RuntimeConfig config = {});

  const RuntimeConfig& config() const noexcept { return config_; }
  KnobRegistry& registry() noexcept { return registry_; }
  const KnobRegistry& registry() const noexcept { return registry_; }
  SimPlatform& platform() noexcept { return platform_; }

  /// Intents are keyed by name; loading a second intent with the same name
  /// replaces the first.
  void loadIntent(IntentSpec spec);
  void loadIntentFile(const std::filesystem::path& path);
  const IntentSpec* intent(std::string_view name) const;

  /// Controller model for the intent `intentName`; checked against it.
  void setModel(std::string_view intentName, ControllerModel model);

  template <class T>
  Knob<T> knob(std::string name, T reference) {
    return Knob<T>(createCell(std::move(name), static_cast<double>(reference)));
  }

  /// Records an application measure for the current iteration. Names not in
  /// the active intent are reported once and otherwise ignored.
  void measure(std::string_view name, double value);

  /// Reports `work` units executed by the current iteration; the platform
  /// turns it into latency and energy.
  void consume(double work, double parallelFraction = 0.0);

  /// Runs the adaptive loop for intent `name` over `routine`.
  RunResult optimize(std::string_view name, const std::vector<AnyKnob>& knobs, const Routine& routine);

  /// Rows of the controller model currently available after restrictions.
  std::size_t availableConfigurations() const noexcept { return availableRows_; }

 private:
  std::shared_ptr<KnobCell> createCell(std::string name, double reference);
  void bindDeclaredRanges(const IntentSpec& spec);

  RuntimeConfig config_;
  KnobRegistry registry_;
  SimPlatform platform_;
  std::map<std::string, IntentSpec, std::less<>> intents_;
  std::map<std::string, ControllerModel, std::less<>> models_;
  std::vector<std::shared_ptr<KnobCell>> platformCells_;

  // Per-iteration state, live only inside optimize.
  std::map<std::string, double, std::less<>> board_;
  std::set<std::string, std::less<>> warned_;
  const IntentSpec* active_ = nullptr;
  double iterationLatency_ = 0.0;
  double iterationEnergy_ = 0.0;
  std::size_t availableRows_ = 0;
};

/// An application written against the runtime: it creates its knobs in the
/// runtime it is constructed with and runs its own optimize loop.
class Application {
 public:
  virtual ~Application() = default;
  virtual RunResult run(std::string_view intentName) = 0;
};

using AppFactory = std::function<std::unique_ptr<Application>(Runtime&)>;

}  // namespace fast
