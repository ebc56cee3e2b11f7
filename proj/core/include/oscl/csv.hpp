// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_CSV_HPP
#define OSCL_CSV_HPP

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace oscl::csv {

// Comma separated, '\n' terminated, a field is quoted only when it holds a comma.

std::string
field(std::string_view value);

std::string
number(double value);

void
writeRow(std::ostream& os, std::initializer_list<std::string_view> fields);

} // namespace oscl::csv

#endif // OSCL_CSV_HPP
