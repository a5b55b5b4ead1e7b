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

#ifndef ECLIPSE_ERROR_HPP
#define ECLIPSE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace eclipse {

enum class Errc {
    EmptyDataset,
    DimensionMismatch,
    NonFiniteValue,
    DimensionTooSmall,
    InvalidRatio,
    InvalidBox,
    BadGrid,
    DimensionNot2,
    NonPositiveT,
    NonNegativeR,
    EmptyInput,
    BadInterval,
    ParseError,
    InvalidRequest,
    PortInUse,
    Io,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::InvalidRatio: return "InvalidRatio";
    case Errc::InvalidBox: return "InvalidBox";
    case Errc::BadGrid: return "BadGrid";
    case Errc::DimensionNot2: return "DimensionNot2";
    case Errc::NonPositiveT: return "NonPositiveT";
    case Errc::NonNegativeR: return "NonNegativeR";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::BadInterval: return "BadInterval";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidRequest: return "InvalidRequest";
    case Errc::PortInUse: return "PortInUse";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// CSV failure at a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string token)
        : Error(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": cannot parse '" + token + "'"),
          line_(line), column_(column), token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

namespace detail {

inline void require_dim(std::ptrdiff_t got, std::ptrdiff_t want, const char* what) {
    if (got != want)
        throw Error(Errc::DimensionMismatch, std::string(what) + ": expected dimension " +
                                                 std::to_string(want) + ", got " +
                                                 std::to_string(got));
}

} // namespace detail

} // namespace eclipse

#endif // ECLIPSE_ERROR_HPP
