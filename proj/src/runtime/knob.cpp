// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/runtime/knob.hpp"

#include <algorithm>

#include "fast/errors.hpp"
#include "fast/numfmt.hpp"

namespace fast {

void KnobCell::requestRestrict(std::optional<std::vector<double>> values) {
  if (!values) {
    pending = std::optional<std::set<double>>(std::set<double>{current});
    return;
  }
  if (values->empty()) throw EmptyRestriction("restrict on knob '" + name + "' with no values");
  if (declaredRange) {
    for (double v : *values) {
      if (std::find(declaredRange->begin(), declaredRange->end(), v) == declaredRange->end()) {
        throw InvalidRestriction("value " + formatDouble(v) + " is outside the declared range of knob '" + name + "'");
      }
    }
  }
  pending = std::optional<std::set<double>>(std::set<double>(values->begin(), values->end()));
}

void KnobCell::requestControl() {
  const bool restricted = pending ? pending->has_value() : restriction.has_value();
  if (!restricted) {
    pending.reset();
    return;
  }
  pending = std::optional<std::set<double>>();
  resetRequested = true;
}

std::vector<double> KnobCell::admissible() const {
  if (restriction) return {restriction->begin(), restriction->end()};
  if (declaredRange) return *declaredRange;
  return {reference};
}

std::shared_ptr<KnobCell> KnobRegistry::create(std::string name, double reference) {
  if (auto it = cells_.find(name); it != cells_.end() && !it->second.expired()) {
    throw DuplicateKnob("knob '" + name + "' is already registered");
  }
  auto cell = std::make_shared<KnobCell>();
  cell->name = name;
  cell->reference = reference;
  cell->current = reference;
  cells_[std::move(name)] = cell;
  return cell;
}

std::shared_ptr<KnobCell> KnobRegistry::find(std::string_view name) const {
  auto it = cells_.find(name);
  return it == cells_.end() ? nullptr : it->second.lock();
}

std::vector<std::string> KnobRegistry::declared() const {
  std::vector<std::string> out;
  for (const auto& [name, weak] : cells_) {
    if (!weak.expired()) out.push_back(name);
  }
  return out;
}

void KnobRegistry::setCaptured(const std::vector<std::string>& names) {
  captured_.clear();
  for (const auto& n : names) {
    if (!find(n)) throw Error("captured knob '" + n + "' is not registered");
    captured_.insert(n);
  }
}

Restrictions KnobRegistry::restrictions() const {
  Restrictions out;
  for (const auto& [name, weak] : cells_) {
    if (auto cell = weak.lock(); cell && cell->restriction) out.emplace(name, *cell->restriction);
  }
  return out;
}

bool KnobRegistry::applyPending() {
  bool reset = false;
  for (auto& [name, weak] : cells_) {
    auto cell = weak.lock();
    if (!cell) continue;
    if (cell->pending) {
      cell->restriction = *cell->pending;
      cell->pending.reset();
    }
    reset = reset || cell->resetRequested;
    cell->resetRequested = false;
  }
  return reset;
}

}  // namespace fast
