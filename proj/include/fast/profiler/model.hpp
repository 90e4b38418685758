// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fast/intent/compiler.hpp"
#include "fast/intent/config_space.hpp"

namespace fast {

/// One profiled configuration: its knob table row and measure table row.
struct ModelRow {
  std::size_t id = 0;
  Configuration knobs;            // ordered as ControllerModel::knobNames
  std::vector<double> measures;   // ordered as ControllerModel::measureNames

  bool operator==(const ModelRow&) const = default;
};

/// Knob table + measure table pairing each configuration with the average
/// measure values observed while profiling it.
struct ControllerModel {
  std::vector<std::string> knobNames;
  std::vector<std::string> measureNames;
  std::vector<ModelRow> rows;

  bool empty() const noexcept { return rows.empty(); }
  std::size_t size() const noexcept { return rows.size(); }
  const ModelRow* findId(std::size_t id) const;
  /// Row whose knob values equal `config` exactly, if any.
  const ModelRow* findConfiguration(const Configuration& config) const;
  std::size_t measureColumn(std::string_view name) const;
  std::size_t knobColumn(std::string_view name) const;

  bool operator==(const ControllerModel&) const = default;
};

/// Active restrictions: knob name -> admissible values.
using Restrictions = std::map<std::string, std::set<double>, std::less<>>;

/// Checks ids are 0..N-1, every row is complete, and every configuration
/// satisfies the intent's knob constraint and matches the intent's knob and
/// measure sets. Throws SchemaMismatch.
void checkModelAgainstIntent(const ControllerModel& model, const CompiledIntent& intent);

/// Writes <dir>/<name>.knobtable.csv and <dir>/<name>.measuretable.csv.
void modelSave(const ControllerModel& model, const std::filesystem::path& dir, std::string_view name);

/// Loads the two tables, reorders columns to the intent's declaration order
/// and validates them against the intent. Throws IOError or SchemaMismatch.
ControllerModel modelLoad(const std::filesystem::path& dir, const CompiledIntent& intent);

/// Same, without an intent to check against (columns kept in file order).
ControllerModel modelLoadRaw(const std::filesystem::path& dir, std::string_view name);

/// Rows compatible with every restriction; ids are kept from `model`.
/// Throws EmptyConfigurationSpace when no row survives.
ControllerModel modelRestrict(const ControllerModel& model, const Restrictions& restrictions);

}  // namespace fast
