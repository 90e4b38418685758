// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fast {

/// Plain numeric CSV: one header row of names, then rows of numbers. No
/// quoting; every file this project emits is identifiers and numbers only.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable readCsv(const std::filesystem::path& path);
CsvTable parseCsv(std::string_view text, std::string_view sourceName = "<memory>");

std::string renderCsv(const CsvTable& table);

/// Writes through a temporary sibling and renames it into place, so readers
/// never observe a half-written file.
void writeFileAtomic(const std::filesystem::path& path, std::string_view contents);

std::string readTextFile(const std::filesystem::path& path);

std::vector<std::string> splitTrimmed(std::string_view line, char sep);
std::string_view trim(std::string_view s);

}  // namespace fast
