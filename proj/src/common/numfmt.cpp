// Copyright 2026 The FAST Runtime Authors
// SPDX-License-Identifier: Apache-2.0

#include "fast/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace fast {

std::string formatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  // 1e308 in fixed notation needs ~310 digits.
  std::array<char, 400> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed);
  if (ec != std::errc{}) {
    end = std::to_chars(buf.data(), buf.data() + buf.size(), v).ptr;
  }
  return std::string(buf.data(), end);
}

std::string formatFloatLiteral(double v) {
  std::string s = formatDouble(v);
  if (s.find_first_of(".ein") == std::string::npos) s += ".0";
  return s;
}

std::optional<double> parseDouble(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace fast
