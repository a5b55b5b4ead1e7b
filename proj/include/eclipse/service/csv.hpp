//   Copyright 2026 The Eclipse Query Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#ifndef ECLIPSE_SERVICE_CSV_HPP
#define ECLIPSE_SERVICE_CSV_HPP

#include <iosfwd>
#include <string>

#include "eclipse/core.hpp"

namespace eclipse::service {

using Data = Dataset<double>;

/// Comma-separated reals, one point per line. Blank lines are ignored,
/// fields may be double-quoted, and an optional single header line is
/// skipped. Errors report 1-based physical line and field numbers.
Data parse_csv(std::istream& in, bool has_header);
Data parse_csv_file(const std::string& path, bool has_header);

/// Writes every point with 17 significant digits so parse_csv reproduces the
/// coordinates bit for bit. The header, when requested, is x1,x2,...
void emit_csv(std::ostream& out, const Data& data, bool with_header = false);

/// Shortest-safe decimal form with 17 significant digits, '.' separator.
std::string format_double(double v);

} // namespace eclipse::service

#endif // ECLIPSE_SERVICE_CSV_HPP
