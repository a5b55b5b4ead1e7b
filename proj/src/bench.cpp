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

#include "eclipse/service/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

namespace eclipse::service {

std::vector<BenchRow> bench(const Data& data, std::span<const QueryRequest> requests, int repetitions) {
    if (repetitions < 1)
        throw Error(Errc::InvalidRequest, "repetitions must be at least 1");
    std::vector<BenchRow> rows;
    for (std::size_t i = 0; i < requests.size(); ++i) {
        BenchRow row;
        row.index = i;
        row.request = requests[i];
        for (int rep = 0; rep < repetitions; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            const auto resp = run_query(data, requests[i]);
            const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
            if (rep > 0 && resp.ids.size() != row.result_size)
                throw Error(Errc::InvalidRequest, "request " + std::to_string(i) +
                                                      " returned different result sizes across runs");
            row.result_size = resp.ids.size();
            row.algorithm = resp.algorithm;
            row.run_micros.push_back(us);
        }
        auto sorted = row.run_micros;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t n = sorted.size();
        row.median_micros = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "request,semantics,algorithm,runs,median_micros,result_size\n";
    for (const auto& r : rows)
        out << r.index << ',' << to_string(r.request.semantics) << ',' << r.algorithm << ','
            << r.run_micros.size() << ',' << r.median_micros << ',' << r.result_size << '\n';
}

std::vector<QueryRequest> requests_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw Error(Errc::InvalidRequest, "bench requests must be a JSON array");
    std::vector<QueryRequest> out;
    for (const auto& item : j)
        out.push_back(request_from_json(item));
    return out;
}

std::vector<QueryRequest> default_bench_requests(Eigen::Index dim, double lo, double hi) {
    const auto m = static_cast<std::size_t>(dim - 1);
    std::vector<QueryRequest> reqs(4);
    reqs[0].semantics = Semantics::Skyline;
    reqs[1].semantics = Semantics::Top1;
    reqs[1].ratios = std::vector<double>(m, 1.0);
    reqs[2].semantics = Semantics::EclipseDominance;
    reqs[2].box = std::vector<std::pair<double, double>>(m, {lo, hi});
    reqs[3].semantics = Semantics::EclipseEnvelope;
    reqs[3].box = reqs[2].box;
    return reqs;
}

} // namespace eclipse::service
