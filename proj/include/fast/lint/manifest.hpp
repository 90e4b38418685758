// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fast/runtime/knob.hpp"

namespace fast {

/// Name of the node standing for the optimize body itself.
inline constexpr std::string_view kBodyNode = "body";

enum class EdgeTag {
  Flow,   // plain dataflow
  Sink,   // destination influences control flow or a recorded measure
  Inert,  // destination has no effect the runtime can observe
};

struct DataflowEdge {
  std::string from;
  std::string to;
  EdgeTag tag = EdgeTag::Flow;

  bool operator==(const DataflowEdge&) const = default;
};

/// Declared and captured knob sets of an application plus the dataflow
/// graph of its optimize body.
struct KnobManifest {
  std::set<std::string, std::less<>> declared;
  std::set<std::string, std::less<>> captured;
  /// Absent when no "edges:" section was given.
  std::optional<std::vector<DataflowEdge>> edges;

  bool operator==(const KnobManifest&) const = default;
};

/// Sections "declared:", "captured:", "edges:"; names one per line or comma
/// separated; edges "src -> dst [sink|inert]"; '#' starts a comment.
/// Throws Error on malformed input or when a captured knob is undeclared.
KnobManifest parseManifest(std::string_view text);
KnobManifest loadManifest(const std::filesystem::path& path);
std::string renderManifest(const KnobManifest& manifest);

/// Declared and captured sets as the registry saw them during optimize.
KnobManifest manifestFromRegistry(const KnobRegistry& registry);

/// Incremental construction for applications that describe their own body.
class ManifestBuilder {
 public:
  ManifestBuilder& declare(std::string knob);
  ManifestBuilder& capture(std::string knob);
  ManifestBuilder& flow(std::string from, std::string to);
  ManifestBuilder& sink(std::string from, std::string to);
  ManifestBuilder& inert(std::string from, std::string to);
  KnobManifest build() const;

 private:
  KnobManifest manifest_;
};

}  // namespace fast
