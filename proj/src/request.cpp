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

#include "eclipse/service/request.hpp"

#include <chrono>

#include <spdlog/spdlog.h>

#include "eclipse/dual2d.hpp"
#include "eclipse/queries.hpp"

namespace eclipse::service {

using nlohmann::json;

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Bruteforce: return "bruteforce";
    case Algorithm::Prefilter: return "prefilter";
    case Algorithm::Dual2d: return "dual2d";
    case Algorithm::Sampled: return "sampled";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view s) {
    for (auto a : {Algorithm::Auto, Algorithm::Bruteforce, Algorithm::Prefilter, Algorithm::Dual2d,
                   Algorithm::Sampled})
        if (to_string(a) == s)
            return a;
    return std::nullopt;
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidRequest, what); }

WeightBox<double> make_box(const QueryRequest& req) {
    if (!req.box)
        invalid(std::string(to_string(req.semantics)) + " requires a box");
    Vector<double> lo(static_cast<Eigen::Index>(req.box->size()));
    Vector<double> hi(lo.size());
    for (std::size_t j = 0; j < req.box->size(); ++j) {
        lo[static_cast<Eigen::Index>(j)] = (*req.box)[j].first;
        hi[static_cast<Eigen::Index>(j)] = (*req.box)[j].second;
    }
    return WeightBox<double>(std::move(lo), std::move(hi));
}

void require_algorithm(const QueryRequest& req, std::initializer_list<Algorithm> allowed) {
    if (req.algorithm == Algorithm::Auto)
        return;
    for (auto a : allowed)
        if (a == req.algorithm)
            return;
    invalid("algorithm '" + std::string(to_string(req.algorithm)) + "' does not apply to " +
            std::string(to_string(req.semantics)));
}

QueryResult<double> dispatch(const Data& data, const QueryRequest& req) {
    if (req.grid && *req.grid < 2)
        invalid("grid must be at least 2");
    switch (req.semantics) {
    case Semantics::Skyline:
        require_algorithm(req, {});
        return skyline(data);
    case Semantics::Top1: {
        require_algorithm(req, {});
        if (!req.ratios)
            invalid("top1 requires ratios");
        const auto& r = *req.ratios;
        return top1_set(data, RatioVector<double>(
                                  Eigen::Map<const Vector<double>>(r.data(), static_cast<Eigen::Index>(r.size()))));
    }
    case Semantics::EclipseDominance: {
        require_algorithm(req, {Algorithm::Bruteforce, Algorithm::Prefilter});
        const auto box = make_box(req);
        return req.algorithm == Algorithm::Bruteforce ? eclipse_bruteforce(data, box) : eclipse(data, box);
    }
    case Semantics::EclipseEnvelope: {
        require_algorithm(req, {Algorithm::Dual2d, Algorithm::Sampled});
        if (req.algorithm == Algorithm::Dual2d && data.dim() != 2)
            invalid("dual2d needs 2-dimensional data, dataset has " + std::to_string(data.dim()));
        const auto box = make_box(req);
        const bool use_dual = req.algorithm == Algorithm::Dual2d ||
                              (req.algorithm == Algorithm::Auto && data.dim() == 2);
        if (use_dual)
            return eclipse_envelope_2d(data, box);
        return envelope_eclipse_sampled(data, box, req.grid.value_or(kDefaultEnvelopeGrid));
    }
    }
    invalid("unknown semantics");
}

std::vector<double> to_std(const Vector<double>& v) { return {v.data(), v.data() + v.size()}; }

} // namespace

QueryResponse run_query(const Data& data, const QueryRequest& request) {
    const auto start = std::chrono::steady_clock::now();
    auto result = dispatch(data, request);
    const auto elapsed = std::chrono::steady_clock::now() - start;

    QueryResponse resp;
    resp.ids = std::move(result.ids);
    resp.points.reserve(resp.ids.size());
    for (PointId id : resp.ids)
        resp.points.push_back(to_std(data.row(id).transpose()));
    resp.semantics = std::string(to_string(result.semantics));
    resp.algorithm = result.algorithm;
    for (const auto& [id, t] : result.witnesses)
        resp.witnesses.emplace(id, to_std(t.values()));
    resp.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
    spdlog::debug("{} via {}: {} ids in {} us", resp.semantics, resp.algorithm, resp.ids.size(),
                  resp.elapsed_micros);
    return resp;
}

QueryRequest request_from_json(const json& j) {
    if (!j.is_object())
        invalid("request must be a JSON object");
    QueryRequest req;
    try {
        if (!j.contains("semantics"))
            invalid("missing 'semantics'");
        const auto sem = parse_semantics(j.at("semantics").get<std::string>());
        if (!sem)
            invalid("unknown semantics '" + j.at("semantics").get<std::string>() + "'");
        req.semantics = *sem;
        if (j.contains("ratios") && !j.at("ratios").is_null())
            req.ratios = j.at("ratios").get<std::vector<double>>();
        if (j.contains("box") && !j.at("box").is_null()) {
            std::vector<std::pair<double, double>> box;
            for (const auto& iv : j.at("box")) {
                if (!iv.is_array() || iv.size() != 2)
                    invalid("each box entry must be [lo, hi]");
                box.emplace_back(iv.at(0).get<double>(), iv.at(1).get<double>());
            }
            req.box = std::move(box);
        }
        if (j.contains("algorithm") && !j.at("algorithm").is_null()) {
            const auto name = j.at("algorithm").get<std::string>();
            const auto algo = parse_algorithm(name);
            if (!algo)
                invalid("unknown algorithm '" + name + "'");
            req.algorithm = *algo;
        }
        if (j.contains("grid") && !j.at("grid").is_null()) {
            if (!j.at("grid").is_number_integer())
                invalid("grid must be an integer");
            req.grid = j.at("grid").get<int>();
        }
    } catch (const json::exception& e) {
        invalid(std::string("malformed request: ") + e.what());
    }
    return req;
}

json to_json(const QueryRequest& req) {
    json j;
    j["semantics"] = to_string(req.semantics);
    if (req.ratios)
        j["ratios"] = *req.ratios;
    if (req.box) {
        json box = json::array();
        for (const auto& [lo, hi] : *req.box)
            box.push_back({lo, hi});
        j["box"] = std::move(box);
    }
    j["algorithm"] = to_string(req.algorithm);
    if (req.grid)
        j["grid"] = *req.grid;
    return j;
}

json to_json(const QueryResponse& resp) {
    json j;
    j["ids"] = resp.ids;
    j["points"] = resp.points;
    j["semantics"] = resp.semantics;
    j["algorithm"] = resp.algorithm;
    if (!resp.witnesses.empty()) {
        json w = json::object();
        for (const auto& [id, t] : resp.witnesses)
            w[std::to_string(id)] = t;
        j["witnesses"] = std::move(w);
    }
    j["elapsed_micros"] = resp.elapsed_micros;
    return j;
}

QueryResponse response_from_json(const json& j) {
    QueryResponse resp;
    resp.ids = j.at("ids").get<std::vector<PointId>>();
    resp.points = j.at("points").get<std::vector<std::vector<double>>>();
    resp.semantics = j.at("semantics").get<std::string>();
    resp.algorithm = j.at("algorithm").get<std::string>();
    if (j.contains("witnesses"))
        for (const auto& [key, t] : j.at("witnesses").items())
            resp.witnesses.emplace(std::stoull(key), t.get<std::vector<double>>());
    resp.elapsed_micros = j.at("elapsed_micros").get<std::int64_t>();
    return resp;
}

} // namespace eclipse::service
