// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fast/profiler/model.hpp"

namespace fast {

/// Shared state behind a Knob. The application owns it; the registry only
/// observes it through a weak pointer.
struct KnobCell {
  std::string name;
  double reference = 0.0;
  double current = 0.0;
  /// Range from the loaded intent, when the intent declares this knob.
  std::optional<std::vector<double>> declaredRange;
  std::optional<std::set<double>> restriction;

  /// Requested change to `restriction`, applied at the next window boundary.
  /// An engaged-but-empty inner optional means "clear".
  std::optional<std::optional<std::set<double>>> pending;
  bool resetRequested = false;

  void requestRestrict(std::optional<std::vector<double>> values);
  void requestControl();

  /// Values the runtime may assign right now.
  std::vector<double> admissible() const;
};

template <class T>
class Knob {
 public:
  Knob() = default;
  explicit Knob(std::shared_ptr<KnobCell> cell) : cell_(std::move(cell)) {}

  T get() const { return static_cast<T>(cell_->current); }
  const std::string& name() const { return cell_->name; }
  T reference() const { return static_cast<T>(cell_->reference); }

  /// Pins the knob to its current value.
  void restrict() { cell_->requestRestrict(std::nullopt); }
  void restrict(const std::vector<T>& values) {
    cell_->requestRestrict(std::vector<double>(values.begin(), values.end()));
  }
  void control() { cell_->requestControl(); }

  const std::shared_ptr<KnobCell>& cell() const noexcept { return cell_; }

 private:
  std::shared_ptr<KnobCell> cell_;
};

/// Type-erased knob reference for capture lists.
class AnyKnob {
 public:
  template <class T>
  AnyKnob(const Knob<T>& k) : cell_(k.cell()) {}  // NOLINT(google-explicit-constructor)
  explicit AnyKnob(std::shared_ptr<KnobCell> cell) : cell_(std::move(cell)) {}

  const std::string& name() const { return cell_->name; }
  const std::shared_ptr<KnobCell>& cell() const noexcept { return cell_; }

 private:
  std::shared_ptr<KnobCell> cell_;
};

class KnobRegistry {
 public:
  /// Throws DuplicateKnob while a knob of that name is alive.
  std::shared_ptr<KnobCell> create(std::string name, double reference);

  /// Live cell or nullptr.
  std::shared_ptr<KnobCell> find(std::string_view name) const;

  /// Names of live knobs, sorted.
  std::vector<std::string> declared() const;

  void setCaptured(const std::vector<std::string>& names);
  const std::set<std::string, std::less<>>& captured() const noexcept { return captured_; }

  /// Active restrictions of live knobs.
  Restrictions restrictions() const;

  /// Moves every pending restrict/control into effect. Returns true when a
  /// control call asks for a controller reset.
  bool applyPending();

 private:
  std::map<std::string, std::weak_ptr<KnobCell>, std::less<>> cells_;
  std::set<std::string, std::less<>> captured_;
};

}  // namespace fast
