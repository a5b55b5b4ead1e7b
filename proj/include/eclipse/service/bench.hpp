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

#ifndef ECLIPSE_SERVICE_BENCH_HPP
#define ECLIPSE_SERVICE_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "eclipse/service/request.hpp"

namespace eclipse::service {

struct BenchRow {
    std::size_t index = 0;
    QueryRequest request;
    std::string algorithm; // as resolved by run_query
    std::vector<std::int64_t> run_micros;
    std::int64_t median_micros = 0;
    std::size_t result_size = 0;
};

/// Runs every request `repetitions` times. Throws if a request's result size
/// changes between runs.
std::vector<BenchRow> bench(const Data& data, std::span<const QueryRequest> requests, int repetitions);

/// CSV with columns request,semantics,algorithm,runs,median_micros,result_size.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// A JSON array of request objects.
std::vector<QueryRequest> requests_from_json(const nlohmann::json& j);

/// skyline, top1 at all-ones ratios, and both eclipse semantics over
/// [lo, hi] in every ratio.
std::vector<QueryRequest> default_bench_requests(Eigen::Index dim, double lo = 2.0, double hi = 5.0);

} // namespace eclipse::service

#endif // ECLIPSE_SERVICE_BENCH_HPP
