// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/profiler/model.hpp"

#include <algorithm>

#include "fast/csv.hpp"
#include "fast/errors.hpp"
#include "fast/numfmt.hpp"

namespace fast {

namespace {

std::filesystem::path tablePath(const std::filesystem::path& dir, std::string_view name, std::string_view table) {
  return dir / (std::string(name) + "." + std::string(table) + ".csv");
}

std::size_t columnOf(const std::vector<std::string>& names, std::string_view name, std::string_view what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw SchemaMismatch(std::string(what) + " column '" + std::string(name) + "' missing");
  return static_cast<std::size_t>(it - names.begin());
}

std::size_t asId(double v) {
  if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw SchemaMismatch("row id " + formatDouble(v) + " is not a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

const ModelRow* ControllerModel::findId(std::size_t id) const {
  for (const auto& r : rows) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const ModelRow* ControllerModel::findConfiguration(const Configuration& config) const {
  for (const auto& r : rows) {
    if (r.knobs == config) return &r;
  }
  return nullptr;
}

std::size_t ControllerModel::measureColumn(std::string_view name) const {
  return columnOf(measureNames, name, "measure");
}

std::size_t ControllerModel::knobColumn(std::string_view name) const { return columnOf(knobNames, name, "knob"); }

void checkModelAgainstIntent(const ControllerModel& model, const CompiledIntent& intent) {
  const auto& spec = intent.spec();
  if (model.knobNames != spec.knobNames()) throw SchemaMismatch("knob table columns disagree with intent knobs");
  if (model.measureNames != spec.measureNames()) {
    throw SchemaMismatch("measure table columns disagree with intent measures");
  }
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    const auto& r = model.rows[i];
    if (r.id != i) throw SchemaMismatch("model ids are not contiguous from 0");
    if (r.knobs.size() != model.knobNames.size() || r.measures.size() != model.measureNames.size()) {
      throw SchemaMismatch("model row " + std::to_string(i) + " is incomplete");
    }
    if (!intent.knobConstraint(r.knobs)) {
      throw SchemaMismatch("model row " + std::to_string(i) + " violates the knob constraint");
    }
  }
}

void modelSave(const ControllerModel& model, const std::filesystem::path& dir, std::string_view name) {
  CsvTable knobs;
  knobs.header.push_back("id");
  knobs.header.insert(knobs.header.end(), model.knobNames.begin(), model.knobNames.end());
  CsvTable measures;
  measures.header.push_back("id");
  measures.header.insert(measures.header.end(), model.measureNames.begin(), model.measureNames.end());
  for (const auto& r : model.rows) {
    std::vector<double> k{static_cast<double>(r.id)};
    k.insert(k.end(), r.knobs.begin(), r.knobs.end());
    knobs.rows.push_back(std::move(k));
    std::vector<double> m{static_cast<double>(r.id)};
    m.insert(m.end(), r.measures.begin(), r.measures.end());
    measures.rows.push_back(std::move(m));
  }
  writeFileAtomic(tablePath(dir, name, "knobtable"), renderCsv(knobs));
  writeFileAtomic(tablePath(dir, name, "measuretable"), renderCsv(measures));
}

ControllerModel modelLoadRaw(const std::filesystem::path& dir, std::string_view name) {
  const CsvTable knobs = readCsv(tablePath(dir, name, "knobtable"));
  const CsvTable measures = readCsv(tablePath(dir, name, "measuretable"));
  if (knobs.header.empty() || knobs.header.front() != "id" || measures.header.empty() ||
      measures.header.front() != "id") {
    throw SchemaMismatch("model tables must start with an 'id' column");
  }
  ControllerModel model;
  model.knobNames.assign(knobs.header.begin() + 1, knobs.header.end());
  model.measureNames.assign(measures.header.begin() + 1, measures.header.end());

  std::map<std::size_t, std::vector<double>> measureRows;
  for (const auto& row : measures.rows) {
    const std::size_t id = asId(row.front());
    if (!measureRows.emplace(id, std::vector<double>(row.begin() + 1, row.end())).second) {
      throw SchemaMismatch("duplicate id " + std::to_string(id) + " in measure table");
    }
  }
  std::set<std::size_t> knobIds;
  for (const auto& row : knobs.rows) {
    const std::size_t id = asId(row.front());
    if (!knobIds.insert(id).second) throw SchemaMismatch("duplicate id " + std::to_string(id) + " in knob table");
    auto it = measureRows.find(id);
    if (it == measureRows.end()) throw SchemaMismatch("id " + std::to_string(id) + " has no measure table row");
    model.rows.push_back(ModelRow{id, Configuration(row.begin() + 1, row.end()), it->second});
  }
  if (knobIds.size() != measureRows.size()) throw SchemaMismatch("knob and measure tables have different id sets");
  std::sort(model.rows.begin(), model.rows.end(), [](const ModelRow& a, const ModelRow& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    if (model.rows[i].id != i) throw SchemaMismatch("model ids are not contiguous from 0");
  }
  return model;
}

ControllerModel modelLoad(const std::filesystem::path& dir, const CompiledIntent& intent) {
  const auto& spec = intent.spec();
  ControllerModel raw = modelLoadRaw(dir, spec.name);

  const auto wantKnobs = spec.knobNames();
  const auto wantMeasures = spec.measureNames();
  if (std::set(raw.knobNames.begin(), raw.knobNames.end()) != std::set(wantKnobs.begin(), wantKnobs.end()) ||
      raw.knobNames.size() != wantKnobs.size()) {
    throw SchemaMismatch("knob table columns disagree with the knobs of intent '" + spec.name + "'");
  }
  if (std::set(raw.measureNames.begin(), raw.measureNames.end()) !=
          std::set(wantMeasures.begin(), wantMeasures.end()) ||
      raw.measureNames.size() != wantMeasures.size()) {
    throw SchemaMismatch("measure table columns disagree with the measures of intent '" + spec.name + "'");
  }

  ControllerModel model;
  model.knobNames = wantKnobs;
  model.measureNames = wantMeasures;
  std::vector<std::size_t> knobFrom;
  std::vector<std::size_t> measureFrom;
  for (const auto& k : wantKnobs) knobFrom.push_back(raw.knobColumn(k));
  for (const auto& m : wantMeasures) measureFrom.push_back(raw.measureColumn(m));
  for (const auto& r : raw.rows) {
    ModelRow row;
    row.id = r.id;
    for (auto c : knobFrom) row.knobs.push_back(r.knobs[c]);
    for (auto c : measureFrom) row.measures.push_back(r.measures[c]);
    model.rows.push_back(std::move(row));
  }
  checkModelAgainstIntent(model, intent);
  return model;
}

ControllerModel modelRestrict(const ControllerModel& model, const Restrictions& restrictions) {
  if (restrictions.empty()) return model;
  std::vector<std::pair<std::size_t, const std::set<double>*>> filters;
  for (const auto& [name, values] : restrictions) {
    auto it = std::find(model.knobNames.begin(), model.knobNames.end(), name);
    if (it == model.knobNames.end()) continue;  // knob not in this model: nothing to filter
    filters.emplace_back(static_cast<std::size_t>(it - model.knobNames.begin()), &values);
  }
  ControllerModel out;
  out.knobNames = model.knobNames;
  out.measureNames = model.measureNames;
  for (const auto& r : model.rows) {
    const bool keep = std::all_of(filters.begin(), filters.end(),
                                  [&](const auto& f) { return f.second->contains(r.knobs[f.first]); });
    if (keep) out.rows.push_back(r);
  }
  if (out.rows.empty()) throw EmptyConfigurationSpace("restrictions leave no configuration in the model");
  return out;
}

}  // namespace fast
