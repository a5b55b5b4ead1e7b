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

#ifndef ECLIPSE_SERVICE_REQUEST_HPP
#define ECLIPSE_SERVICE_REQUEST_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eclipse/service/csv.hpp"

namespace eclipse::service {

enum class Algorithm { Auto, Bruteforce, Prefilter, Dual2d, Sampled };

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view s);

inline constexpr int kDefaultEnvelopeGrid = 256;

struct QueryRequest {
    Semantics semantics = Semantics::Skyline;
    std::optional<std::vector<double>> ratios;
    std::optional<std::vector<std::pair<double, double>>> box;
    Algorithm algorithm = Algorithm::Auto;
    std::optional<int> grid;
};

struct QueryResponse {
    std::vector<PointId> ids;
    std::vector<std::vector<double>> points;
    std::string semantics;
    std::string algorithm;
    std::map<PointId, std::vector<double>> witnesses;
    std::int64_t elapsed_micros = 0;
};

/// Dispatches to the query implementations.
///
/// `auto` resolves to: skyline -> sweep2d (d = 2) or bnl; top1 -> scan;
/// eclipse-dominance -> prefilter; eclipse-envelope -> dual2d (d = 2) or
/// sampled with kDefaultEnvelopeGrid per ratio. Overrides accepted:
/// bruteforce/prefilter for eclipse-dominance, dual2d/sampled for
/// eclipse-envelope. Throws InvalidRequest when a required field is
/// missing or an override does not apply.
QueryResponse run_query(const Data& data, const QueryRequest& request);

QueryRequest request_from_json(const nlohmann::json& j);
nlohmann::json to_json(const QueryRequest& request);

nlohmann::json to_json(const QueryResponse& response);
QueryResponse response_from_json(const nlohmann::json& j);

} // namespace eclipse::service

#endif // ECLIPSE_SERVICE_REQUEST_HPP
