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

#include "eclipse/service/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace eclipse::service {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

// RFC 4180 field splitting; quotes only matter at the start of a field.
std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (true) {
        std::string field;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i < line.size() && line[i] == '"') {
            ++i;
            while (i < line.size()) {
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                field += line[i++];
            }
            while (i < line.size() && line[i] != ',')
                field += line[i++];
        } else {
            const std::size_t end = std::min(line.find(',', i), line.size());
            field.assign(line.substr(i, end - i));
            i = end;
        }
        fields.emplace_back(trim(field));
        if (i >= line.size())
            break;
        ++i; // comma
    }
    return fields;
}

double parse_real(const std::string& token, std::size_t line, std::size_t column) {
    std::string_view s = token;
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(line, column, token);
    return v;
}

bool blank(std::string_view s) { return trim(s).empty(); }

} // namespace

Data parse_csv(std::istream& in, bool has_header) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = has_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (blank(line))
            continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        const auto fields = split_fields(line);
        if (!rows.empty() && fields.size() != rows.front().size())
            throw Error(Errc::DimensionMismatch, "line " + std::to_string(line_no) + " has " +
                                                     std::to_string(fields.size()) +
                                                     " fields, expected " +
                                                     std::to_string(rows.front().size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c)
            row.push_back(parse_real(fields[c], line_no, c + 1));
        rows.push_back(std::move(row));
    }
    return validate_dataset(rows);
}

Data parse_csv_file(const std::string& path, bool has_header) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::Io, "cannot open '" + path + "'");
    return parse_csv(in, has_header);
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

void emit_csv(std::ostream& out, const Data& data, bool with_header) {
    if (with_header) {
        for (Eigen::Index j = 0; j < data.dim(); ++j)
            out << (j ? "," : "") << 'x' << (j + 1);
        out << '\n';
    }
    for (PointId i = 0; i < data.size(); ++i) {
        const auto row = data.row(i);
        for (Eigen::Index j = 0; j < data.dim(); ++j)
            out << (j ? "," : "") << format_double(row[j]);
        out << '\n';
    }
}

} // namespace eclipse::service
