// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/lint/manifest.hpp"

#include <sstream>

#include "fast/csv.hpp"
#include "fast/errors.hpp"

namespace fast {

namespace {

enum class Section { None, Declared, Captured, Edges };

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw Error("manifest line " + std::to_string(line) + ": " + what);
}

DataflowEdge parseEdge(std::string_view text, std::size_t line) {
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos) bad(line, "expected 'src -> dst [sink|inert]'");
  DataflowEdge e;
  e.from = std::string(trim(text.substr(0, arrow)));
  std::string_view rest = trim(text.substr(arrow + 2));
  std::string_view tag;
  if (const auto open = rest.find('['); open != std::string_view::npos) {
    const auto close = rest.find(']', open);
    if (close == std::string_view::npos) bad(line, "unterminated edge tag");
    tag = trim(rest.substr(open + 1, close - open - 1));
    rest = trim(rest.substr(0, open));
  } else if (const auto space = rest.find_first_of(" \t"); space != std::string_view::npos) {
    tag = trim(rest.substr(space));
    rest = trim(rest.substr(0, space));
  }
  e.to = std::string(rest);
  if (e.from.empty() || e.to.empty()) bad(line, "edge needs a source and a destination");
  if (tag == "sink") {
    e.tag = EdgeTag::Sink;
  } else if (tag == "inert") {
    e.tag = EdgeTag::Inert;
  } else if (!tag.empty()) {
    bad(line, "unknown edge tag '" + std::string(tag) + "'");
  }
  return e;
}

}  // namespace

KnobManifest parseManifest(std::string_view text) {
  KnobManifest m;
  Section section = Section::None;
  std::istringstream in{std::string(text)};
  std::size_t lineNo = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineNo;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    // A section header may carry its first entries on the same line.
    auto header = [&line](std::string_view name) {
      if (!line.starts_with(name) || line.size() <= name.size() || line[name.size()] != ':') return false;
      line = trim(line.substr(name.size() + 1));
      return true;
    };
    if (header("declared")) {
      section = Section::Declared;
    } else if (header("captured")) {
      section = Section::Captured;
    } else if (header("edges")) {
      section = Section::Edges;
      if (!m.edges) m.edges.emplace();
    }
    if (line.empty()) continue;
    switch (section) {
      case Section::None: bad(lineNo, "content before any section");
      case Section::Declared:
      case Section::Captured:
        for (auto& name : splitTrimmed(line, ',')) {
          if (name.empty()) continue;
          (section == Section::Declared ? m.declared : m.captured).insert(name);
        }
        break;
      case Section::Edges: m.edges->push_back(parseEdge(line, lineNo)); break;
    }
  }
  for (const auto& c : m.captured) {
    if (!m.declared.contains(c)) throw Error("manifest captures knob '" + c + "' that is not declared");
  }
  return m;
}

KnobManifest loadManifest(const std::filesystem::path& path) { return parseManifest(readTextFile(path)); }

std::string renderManifest(const KnobManifest& m) {
  std::ostringstream out;
  out << "declared:\n";
  for (const auto& d : m.declared) out << "  " << d << '\n';
  out << "captured:\n";
  for (const auto& c : m.captured) out << "  " << c << '\n';
  if (m.edges) {
    out << "edges:\n";
    for (const auto& e : *m.edges) {
      out << "  " << e.from << " -> " << e.to;
      if (e.tag == EdgeTag::Sink) out << " [sink]";
      if (e.tag == EdgeTag::Inert) out << " [inert]";
      out << '\n';
    }
  }
  return out.str();
}

KnobManifest manifestFromRegistry(const KnobRegistry& registry) {
  KnobManifest m;
  for (const auto& d : registry.declared()) m.declared.insert(d);
  m.captured = registry.captured();
  return m;
}

ManifestBuilder& ManifestBuilder::declare(std::string knob) {
  manifest_.declared.insert(std::move(knob));
  return *this;
}

ManifestBuilder& ManifestBuilder::capture(std::string knob) {
  manifest_.captured.insert(std::move(knob));
  return *this;
}

ManifestBuilder& ManifestBuilder::flow(std::string from, std::string to) {
  if (!manifest_.edges) manifest_.edges.emplace();
  manifest_.edges->push_back({std::move(from), std::move(to), EdgeTag::Flow});
  return *this;
}

ManifestBuilder& ManifestBuilder::sink(std::string from, std::string to) {
  if (!manifest_.edges) manifest_.edges.emplace();
  manifest_.edges->push_back({std::move(from), std::move(to), EdgeTag::Sink});
  return *this;
}

ManifestBuilder& ManifestBuilder::inert(std::string from, std::string to) {
  if (!manifest_.edges) manifest_.edges.emplace();
  manifest_.edges->push_back({std::move(from), std::move(to), EdgeTag::Inert});
  return *this;
}

KnobManifest ManifestBuilder::build() const {
  for (const auto& c : manifest_.captured) {
    if (!manifest_.declared.contains(c)) throw Error("manifest captures knob '" + c + "' that is not declared");
  }
  return manifest_;
}

}  // namespace fast
