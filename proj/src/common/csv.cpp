// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/csv.hpp"

#include <fstream>
#include <sstream>

#include "fast/errors.hpp"
#include "fast/numfmt.hpp"

namespace fast {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> splitTrimmed(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string readTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CsvTable parseCsv(std::string_view text, std::string_view sourceName) {
  CsvTable table;
  std::size_t lineNo = 0;
  bool haveHeader = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++lineNo;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto cells = splitTrimmed(line, ',');
    if (!haveHeader) {
      table.header = std::move(cells);
      haveHeader = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw SchemaMismatch(std::string(sourceName) + ":" + std::to_string(lineNo) + ": expected " +
                           std::to_string(table.header.size()) + " columns, found " + std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      auto v = parseDouble(c);
      if (!v) {
        throw SchemaMismatch(std::string(sourceName) + ":" + std::to_string(lineNo) + ": not a number: '" + c + "'");
      }
      row.push_back(*v);
    }
    table.rows.push_back(std::move(row));
  }
  if (!haveHeader) throw SchemaMismatch(std::string(sourceName) + ": missing header row");
  return table;
}

CsvTable readCsv(const std::filesystem::path& path) { return parseCsv(readTextFile(path), path.string()); }

std::string renderCsv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += formatDouble(row[i]);
    }
    out += '\n';
  }
  return out;
}

void writeFileAtomic(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot open '" + tmp.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IOError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IOError("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
}

}  // namespace fast
