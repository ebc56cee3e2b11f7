// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/csv.hpp"

#include <array>
#include <charconv>

namespace oscl::csv {

std::string
field(std::string_view value)
{
  if (value.find(',') == std::string_view::npos) {
    return std::string(value);
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string
number(double value)
{
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

void
writeRow(std::ostream& os, std::initializer_list<std::string_view> fields)
{
  bool first = true;
  for (auto f : fields) {
    if (!first) {
      os << ',';
    }
    os << field(f);
    first = false;
  }
  os << '\n';
}

} // namespace oscl::csv
