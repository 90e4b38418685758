// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/runtime/runtime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <spdlog/spdlog.h>

#include "fast/csv.hpp"
#include "fast/errors.hpp"
#include "fast/intent/parser.hpp"
#include "fast/profiler/stats.hpp"

namespace fast {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> rangeValues(const KnobDecl& k) {
  std::vector<double> out;
  for (const auto& n : k.range) out.push_back(n.value);
  return out;
}

}  // namespace

Runtime::Runtime(RuntimeConfig config) : config_(std::move(config)), platform_(config_.platform) {
  if (config_.windowSize == 0) throw Error("window size must be at least 1");
}

void Runtime::loadIntent(IntentSpec spec) {
  validateIntent(spec);
  bindDeclaredRanges(spec);
  const std::string name = spec.name;
  intents_.insert_or_assign(name, std::move(spec));
}

void Runtime::loadIntentFile(const std::filesystem::path& path) { loadIntent(fast::loadIntentFile(path)); }

const IntentSpec* Runtime::intent(std::string_view name) const {
  auto it = intents_.find(name);
  return it == intents_.end() ? nullptr : &it->second;
}

void Runtime::setModel(std::string_view intentName, ControllerModel model) {
  const IntentSpec* spec = intent(intentName);
  if (!spec) throw IntentNotFound("no intent named '" + std::string(intentName) + "' is loaded");
  checkModelAgainstIntent(model, CompiledIntent(*spec));
  models_.insert_or_assign(std::string(intentName), std::move(model));
}

std::shared_ptr<KnobCell> Runtime::createCell(std::string name, double reference) {
  auto cell = registry_.create(std::move(name), reference);
  for (const auto& [_, spec] : intents_) {
    if (auto k = spec.knobIndex(cell->name)) cell->declaredRange = rangeValues(spec.knobs[*k]);
  }
  return cell;
}

void Runtime::bindDeclaredRanges(const IntentSpec& spec) {
  for (const auto& k : spec.knobs) {
    if (auto cell = registry_.find(k.name)) cell->declaredRange = rangeValues(k);
  }
}

void Runtime::measure(std::string_view name, double value) {
  if (active_ && !active_->measureIndex(name)) {
    if (warned_.insert(std::string(name)).second) {
      spdlog::warn("measure '{}' is not declared by intent '{}'; ignored", name, active_->name);
    }
    return;
  }
  board_.insert_or_assign(std::string(name), value);
}

void Runtime::consume(double work, double parallelFraction) {
  const IterationCost c = platform_.simulateIteration(work, parallelFraction);
  iterationLatency_ += c.latency;
  iterationEnergy_ += c.energy;
}

RunResult Runtime::optimize(std::string_view name, const std::vector<AnyKnob>& knobs, const Routine& routine) {
  auto found = intents_.find(name);
  if (found == intents_.end()) throw IntentNotFound("no intent named '" + std::string(name) + "' is loaded");
  IntentSpec spec = found->second;
  CompiledIntent intent(spec);
  const std::size_t w = config_.windowSize;

  // Platform knobs named by the intent are owned by the runtime.
  std::vector<std::string> captured;
  for (const auto& k : knobs) captured.push_back(k.name());
  for (const auto& k : spec.knobs) {
    if (!isPlatformKnob(k.name)) continue;
    if (!registry_.find(k.name)) {
      double top = k.range.front().value;
      for (const auto& v : k.range) top = std::max(top, v.value);
      platformCells_.push_back(createCell(k.name, top));
    }
    if (std::find(captured.begin(), captured.end(), k.name) == captured.end()) captured.push_back(k.name);
  }
  registry_.setCaptured(captured);
  bindDeclaredRanges(spec);

  // Cells in intent knob order (null for knobs the code never created).
  std::vector<std::shared_ptr<KnobCell>> cells;
  Configuration reference;
  for (const auto& k : spec.knobs) {
    auto cell = registry_.find(k.name);
    cells.push_back(cell);
    if (k.reference) {
      reference.push_back(k.reference->value);
    } else if (cell) {
      reference.push_back(cell->reference);
    } else {
      reference.push_back(k.range.front().value);
    }
  }

  std::optional<ControllerModel> baseModel;
  if (auto m = models_.find(name); m != models_.end()) baseModel = m->second;
  ControlMode mode = config_.mode;
  if (mode == ControlMode::Controlled && !baseModel) {
    spdlog::info("no controller model for '{}'; running uncontrolled in the reference configuration", name);
    mode = ControlMode::Uncontrolled;
  }
  Configuration fixed;
  if (mode == ControlMode::Fixed) {
    if (config_.fixedConfiguration) {
      fixed = *config_.fixedConfiguration;
    } else if (config_.fixedConfigId && baseModel) {
      const ModelRow* row = baseModel->findId(*config_.fixedConfigId);
      if (!row) throw SchemaMismatch("fixed configuration id " + std::to_string(*config_.fixedConfigId) + " is not in the model");
      fixed = row->knobs;
    } else if (config_.fixedConfigId) {
      // Without a model, ids index the intent's configuration space.
      const ConfigurationSpace space = expandConfigurationSpace(intent);
      if (*config_.fixedConfigId >= space.configurations.size()) {
        throw SchemaMismatch("fixed configuration id " + std::to_string(*config_.fixedConfigId) +
                             " is outside the configuration space");
      }
      fixed = space.configurations[*config_.fixedConfigId];
    } else {
      throw Error("fixed mode needs a configuration or a configuration id");
    }
    if (fixed.size() != spec.knobs.size()) throw SchemaMismatch("fixed configuration does not bind every intent knob");
  }

  RunResult result;
  result.trace.knobNames = spec.knobNames();
  result.trace.measureNames = spec.measureNames();
  const std::size_t nm = spec.measures.size();

  std::vector<WindowStats> windowStats(nm, WindowStats(w));
  std::vector<std::size_t> recordedInWindow(nm, 0);
  std::vector<double> lastValue(nm, kNaN);
  FeedbackState feedback;
  feedback.gain = config_.feedbackGain;
  std::optional<ControllerModel> model = baseModel;
  Schedule schedule;
  std::optional<std::size_t> scheduleConstraint;  // measure the schedule's prediction refers to
  Configuration current = mode == ControlMode::Fixed ? fixed : reference;
  std::size_t nextEvent = 0;
  const std::vector<Perturbation> noEvents;
  const auto& events = config_.perturbations ? config_.perturbations->events : noEvents;

  auto apply = [&](const Configuration& c) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (cells[k]) cells[k]->current = c[k];
      if (spec.knobs[k].name == kCoreFrequency) platform_.setFrequency(c[k]);
      if (spec.knobs[k].name == kUtilizedCores) platform_.setCores(static_cast<int>(c[k]));
    }
  };

  auto boundary = [&](std::size_t iteration, std::size_t window) {
    if (window > 0) {
      for (std::size_t m = 0; m < nm; ++m) {
        if (recordedInWindow[m] == 0) {
          throw MissingMeasure("measure '" + spec.measures[m].name + "' was not recorded during window " +
                               std::to_string(window - 1));
        }
      }
      if (mode == ControlMode::Controlled && scheduleConstraint) {
        try {
          feedback = feedbackUpdate(feedback, schedule.predictedConstraint, windowStats[*scheduleConstraint].mean());
        } catch (const NonPositiveMeasure& e) {
          spdlog::warn("feedback update skipped: {}", e.what());
        }
      }
    }
    std::fill(recordedInWindow.begin(), recordedInWindow.end(), 0);

    bool intentChanged = false;
    for (; nextEvent < events.size() && events[nextEvent].iteration <= iteration; ++nextEvent) {
      const Perturbation& p = events[nextEvent];
      if (p.changesIntent()) {
        applyToIntent(spec, p);
        intentChanged = true;
        continue;
      }
      auto cell = registry_.find(p.name);
      if (!cell) throw InvalidRestriction("perturbation names unknown knob '" + p.name + "'");
      if (p.kind == PerturbationKind::Restrict) {
        cell->requestRestrict(p.values);
      } else {
        cell->requestControl();
      }
    }
    const bool reset = registry_.applyPending();
    if (intentChanged) intent = CompiledIntent(spec);
    if (window > 0 && (reset || intentChanged)) {
      feedback.reset();
      result.resetWindows.push_back(window);
    }
    // Restrictions may also have been requested through the knobs themselves.
    if (baseModel) model = modelRestrict(*baseModel, registry_.restrictions());
    availableRows_ = model ? model->size() : 0;

    switch (mode) {
      case ControlMode::Controlled: {
        schedule = computeSchedule(intent, *model, feedback.lambda, w);
        scheduleConstraint = intent.constrained() ? std::optional(intent.constraintIndex()) : std::nullopt;
        result.decisions.push_back(DecisionRecord{window, schedule.primary, schedule.secondary, schedule.alpha,
                                                  feedback.lambda, schedule.predictedConstraint,
                                                  schedule.objectiveEstimate});
        break;
      }
      case ControlMode::Uncontrolled: {
        current = reference;
        for (std::size_t k = 0; k < cells.size(); ++k) {
          if (cells[k] && cells[k]->restriction && !cells[k]->restriction->contains(current[k])) {
            current[k] = *cells[k]->restriction->begin();
          }
        }
        break;
      }
      case ControlMode::Fixed: break;
    }
  };

  active_ = &spec;
  warned_.clear();
  std::size_t iteration = 0;
  try {
    while (config_.iterationBudget == 0 || iteration < config_.iterationBudget) {
      const std::size_t pos = iteration % w;
      if (pos == 0) boundary(iteration, iteration / w);

      std::optional<std::size_t> configId;
      if (mode == ControlMode::Controlled) {
        configId = schedule.at(pos);
        current = model->findId(*configId)->knobs;
      } else if (baseModel) {
        if (const ModelRow* row = baseModel->findConfiguration(current)) configId = row->id;
      }
      apply(current);

      board_.clear();
      iterationLatency_ = 0.0;
      iterationEnergy_ = 0.0;
      if (!routine()) break;
      if (iterationLatency_ > 0.0) {
        board_.insert_or_assign(std::string(kLatency), iterationLatency_);
        board_.insert_or_assign(std::string(kEnergy), iterationEnergy_);
        board_.insert_or_assign(std::string(kPerformance), 1.0 / iterationLatency_);
        board_.insert_or_assign(std::string(kPowerConsumption), iterationEnergy_ / iterationLatency_);
      }

      TraceRecord rec;
      rec.iteration = iteration;
      rec.knobs = current;
      rec.configId = configId;
      rec.measures.resize(nm);
      for (std::size_t m = 0; m < nm; ++m) {
        if (auto it = board_.find(spec.measures[m].name); it != board_.end()) {
          lastValue[m] = it->second;
          ++recordedInWindow[m];
        }
        rec.measures[m] = lastValue[m];
        windowStats[m].push(lastValue[m]);
      }
      result.trace.records.push_back(std::move(rec));
      ++iteration;
    }
  } catch (...) {
    active_ = nullptr;
    throw;
  }
  active_ = nullptr;

  result.finalFeedback = feedback;
  result.finalIntent = spec;
  if (config_.traceSink) saveTrace(result.trace, *config_.traceSink);
  if (config_.decisionLogSink) writeFileAtomic(*config_.decisionLogSink, renderDecisionLog(result.decisions));
  return result;
}

}  // namespace fast
