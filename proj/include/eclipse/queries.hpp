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

#ifndef ECLIPSE_QUERIES_HPP
#define ECLIPSE_QUERIES_HPP

#include <algorithm>
#include <limits>
#include <numeric>

#include "eclipse/dominance.hpp"

namespace eclipse {

namespace detail {

template <typename Scalar>
QueryResult<Scalar> make_result(std::vector<PointId> ids, Semantics semantics, std::string algorithm) {
    std::sort(ids.begin(), ids.end());
    QueryResult<Scalar> r;
    r.ids = std::move(ids);
    r.semantics = semantics;
    r.algorithm = std::move(algorithm);
    return r;
}

/// Ids with the minimum score at t, plus the gap to the best score among the
/// remaining points (zero on ties, +inf when nobody remains).
template <typename Scalar>
struct Minimizers {
    std::vector<PointId> ids;
    Scalar margin = std::numeric_limits<Scalar>::infinity();
};

template <typename Scalar>
Minimizers<Scalar> minimizers_at(const Dataset<Scalar>& data, const Vector<Scalar>& t) {
    Minimizers<Scalar> out;
    Scalar best = std::numeric_limits<Scalar>::infinity();
    Scalar runner_up = std::numeric_limits<Scalar>::infinity();
    for (PointId i = 0; i < data.size(); ++i) {
        const Scalar s = score_unchecked(data.row(i), t);
        if (s < best) {
            runner_up = best;
            best = s;
            out.ids.clear();
            out.ids.push_back(i);
        } else if (s == best) {
            out.ids.push_back(i);
        } else if (s < runner_up) {
            runner_up = s;
        }
    }
    out.margin = out.ids.size() > 1 ? Scalar(0) : runner_up - best;
    return out;
}

} // namespace detail

/// Skyline for d == 2: sort by (x, y) and sweep, tracking the smallest y seen
/// at strictly smaller x.
template <typename Scalar>
QueryResult<Scalar> skyline_sweep2d(const Dataset<Scalar>& data) {
    if (data.dim() != 2)
        throw Error(Errc::DimensionNot2, "sweep skyline needs 2-dimensional data");
    std::vector<PointId> order(data.size());
    std::iota(order.begin(), order.end(), PointId{0});
    const auto& m = data.matrix();
    const auto x = [&](PointId i) { return m(static_cast<Eigen::Index>(i), 0); };
    const auto y = [&](PointId i) { return m(static_cast<Eigen::Index>(i), 1); };
    std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
        if (x(a) != x(b))
            return x(a) < x(b);
        if (y(a) != y(b))
            return y(a) < y(b);
        return a < b;
    });

    std::vector<PointId> ids;
    Scalar best_y = std::numeric_limits<Scalar>::infinity();
    for (std::size_t g = 0; g < order.size();) {
        // [g, e) share one x; the group minimum y sits at g.
        std::size_t e = g;
        while (e < order.size() && x(order[e]) == x(order[g]))
            ++e;
        const Scalar group_y = y(order[g]);
        if (group_y < best_y) {
            for (std::size_t k = g; k < e && y(order[k]) == group_y; ++k)
                ids.push_back(order[k]);
            best_y = group_y;
        }
        g = e;
    }
    return detail::make_result<Scalar>(std::move(ids), Semantics::Skyline, "sweep2d");
}

/// Block-nested-loop skyline; the window stays an antichain of every
/// non-dominated point seen so far.
template <typename Scalar>
QueryResult<Scalar> skyline_bnl(const Dataset<Scalar>& data) {
    std::vector<PointId> window;
    for (PointId q = 0; q < data.size(); ++q) {
        bool dominated = false;
        for (PointId w : window) {
            if (skyline_dominates(data.row(w), data.row(q))) {
                dominated = true;
                break;
            }
        }
        if (dominated)
            continue;
        std::erase_if(window, [&](PointId w) { return skyline_dominates(data.row(q), data.row(w)); });
        window.push_back(q);
    }
    return detail::make_result<Scalar>(std::move(window), Semantics::Skyline, "bnl");
}

template <typename Scalar>
QueryResult<Scalar> skyline(const Dataset<Scalar>& data) {
    return data.dim() == 2 ? skyline_sweep2d(data) : skyline_bnl(data);
}

/// Every point attaining the minimum score at t.
template <typename Scalar>
QueryResult<Scalar> top1_set(const Dataset<Scalar>& data, const RatioVector<Scalar>& t) {
    detail::require_dim(t.size(), data.dim() - 1, "top1_set: ratio vector");
    auto m = detail::minimizers_at(data, t.values());
    return detail::make_result<Scalar>(std::move(m.ids), Semantics::Top1, "scan");
}

/// Points not eclipse-dominated by any other point, by checking all pairs.
template <typename Scalar>
QueryResult<Scalar> eclipse_bruteforce(const Dataset<Scalar>& data, const WeightBox<Scalar>& box) {
    detail::require_dim(box.size(), data.dim() - 1, "eclipse_bruteforce: box");
    std::vector<PointId> ids;
    for (PointId q = 0; q < data.size(); ++q) {
        bool dominated = false;
        for (PointId p = 0; p < data.size() && !dominated; ++p)
            dominated = p != q && eclipse_dominates(data.row(p), data.row(q), box);
        if (!dominated)
            ids.push_back(q);
    }
    return detail::make_result<Scalar>(std::move(ids), Semantics::EclipseDominance, "bruteforce");
}

/// Eclipse points with candidates and dominators restricted to the skyline.
/// Skyline dominance implies eclipse dominance, and by transitivity any
/// dominator can be replaced by a skyline dominator.
template <typename Scalar>
QueryResult<Scalar> eclipse(const Dataset<Scalar>& data, const WeightBox<Scalar>& box) {
    detail::require_dim(box.size(), data.dim() - 1, "eclipse: box");
    const auto sky = skyline(data).ids;
    std::vector<PointId> ids;
    for (PointId q : sky) {
        bool dominated = false;
        for (auto it = sky.begin(); it != sky.end() && !dominated; ++it)
            dominated = *it != q && eclipse_dominates(data.row(*it), data.row(q), box);
        if (!dominated)
            ids.push_back(q);
    }
    return detail::make_result<Scalar>(std::move(ids), Semantics::EclipseDominance, "prefilter");
}

/// Union of the score minimisers over an endpoint-inclusive grid on the box.
/// Each id's witness is the grid point where it wins by the widest margin
/// (earliest in grid order on ties). Degenerate intervals contribute one value.
template <typename Scalar>
QueryResult<Scalar> envelope_eclipse_sampled(const Dataset<Scalar>& data, const WeightBox<Scalar>& box,
                                             int grid_per_dim) {
    detail::require_dim(box.size(), data.dim() - 1, "envelope_eclipse_sampled: box");
    if (grid_per_dim < 2)
        throw Error(Errc::BadGrid, "grid_per_dim must be at least 2");

    const Eigen::Index m = box.size();
    std::vector<std::size_t> steps(static_cast<std::size_t>(m));
    for (Eigen::Index j = 0; j < m; ++j)
        steps[static_cast<std::size_t>(j)] = box.is_degenerate(j) ? 1 : static_cast<std::size_t>(grid_per_dim);
    auto grid_value = [&](Eigen::Index j, std::size_t k) -> Scalar {
        const std::size_t g = steps[static_cast<std::size_t>(j)];
        if (k == 0)
            return box.lo(j);
        if (k + 1 == g)
            return box.hi(j);
        return box.lo(j) + (box.hi(j) - box.lo(j)) * Scalar(k) / Scalar(g - 1);
    };

    struct Best {
        Scalar margin;
        Vector<Scalar> t;
    };
    std::map<PointId, Best> best;
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    Vector<Scalar> t(m);
    for (bool more = true; more;) {
        for (Eigen::Index j = 0; j < m; ++j)
            t[j] = grid_value(j, idx[static_cast<std::size_t>(j)]);
        const auto mins = detail::minimizers_at(data, t);
        for (PointId id : mins.ids) {
            auto it = best.find(id);
            if (it == best.end())
                best.emplace(id, Best{mins.margin, t});
            else if (mins.margin > it->second.margin)
                it->second = Best{mins.margin, t};
        }
        Eigen::Index j = m - 1;
        while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == steps[static_cast<std::size_t>(j)])
            idx[static_cast<std::size_t>(j--)] = 0;
        more = j >= 0;
    }

    std::vector<PointId> ids;
    for (const auto& [id, b] : best)
        ids.push_back(id);
    auto result = detail::make_result<Scalar>(std::move(ids), Semantics::EclipseEnvelope, "sampled");
    for (const auto& [id, b] : best)
        result.witnesses.emplace(id, RatioVector<Scalar>(b.t));
    return result;
}

} // namespace eclipse

#endif // ECLIPSE_QUERIES_HPP
