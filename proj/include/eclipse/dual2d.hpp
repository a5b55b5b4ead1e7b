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

// Point-line duality for two attributes.
//
// A point p maps to the line l_p(r) = p[1] * r - p[2]. With r = -1/t (t > 0)
// we get l_p(r) = -score(p, t) / t, so the line that is highest at r belongs
// to the point with the smallest score at t, and two dual lines cross at the
// slope of the primal segment joining their points. A ratio interval
// [t_lo, t_hi] becomes the abscissa interval [-1/t_lo, -1/t_hi].

#ifndef ECLIPSE_DUAL2D_HPP
#define ECLIPSE_DUAL2D_HPP

#include <algorithm>
#include <optional>
#include <span>

#include "eclipse/exact.hpp"
#include "eclipse/queries.hpp"

namespace eclipse {

template <typename Scalar = double>
struct DualLine {
    Scalar slope = 0;
    Scalar intercept = 0;
    PointId owner = 0;

    Scalar operator()(Scalar r) const { return slope * r + intercept; }
};

/// Abscissa span [r_lo, r_hi] (r_lo < r_hi) on which the owners' line is the
/// upper envelope. Several owners means identical dual lines.
template <typename Scalar = double>
struct EnvelopeSegment {
    std::vector<PointId> owners;
    Scalar r_lo = 0;
    Scalar r_hi = 0;
};

/// A line that reaches the envelope at a single abscissa only: a breakpoint
/// shared by three or more lines, or a breakpoint lying on a query endpoint.
template <typename Scalar = double>
struct EnvelopeContact {
    std::vector<PointId> owners;
    Scalar r = 0;
};

template <typename Scalar = double>
struct Envelope {
    std::vector<EnvelopeSegment<Scalar>> segments;
    std::vector<EnvelopeContact<Scalar>> contacts;

    /// Every line attaining the maximum somewhere in the closed interval.
    std::vector<PointId> contributors() const {
        std::vector<PointId> ids;
        for (const auto& s : segments)
            ids.insert(ids.end(), s.owners.begin(), s.owners.end());
        for (const auto& c : contacts)
            ids.insert(ids.end(), c.owners.begin(), c.owners.end());
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return ids;
    }
};

template <typename Derived>
DualLine<typename Derived::Scalar> dual_line(const Eigen::MatrixBase<Derived>& p, PointId owner) {
    if (p.size() != 2)
        throw Error(Errc::DimensionNot2, "dual lines need 2-dimensional points");
    return {p.coeff(0), -p.coeff(1), owner};
}

template <typename Scalar>
DualLine<Scalar> dual_line(const Point<Scalar>& p) {
    return dual_line(p.coords, p.id);
}

template <typename Scalar>
std::vector<DualLine<Scalar>> dual_lines(const Dataset<Scalar>& data) {
    if (data.dim() != 2)
        throw Error(Errc::DimensionNot2, "dual lines need 2-dimensional points");
    std::vector<DualLine<Scalar>> lines;
    lines.reserve(data.size());
    for (PointId i = 0; i < data.size(); ++i)
        lines.push_back(dual_line(data.row(i), i));
    return lines;
}

template <typename Scalar>
Scalar t_to_r(Scalar t) {
    if (!std::isfinite(t) || !(t > Scalar(0)))
        throw Error(Errc::NonPositiveT, "weight ratio must be finite and positive");
    return Scalar(-1) / t;
}

template <typename Scalar>
Scalar r_to_t(Scalar r) {
    if (!std::isfinite(r) || !(r < Scalar(0)))
        throw Error(Errc::NonNegativeR, "dual abscissa must be finite and negative");
    return Scalar(-1) / r;
}

/// Abscissa where the lines cross; nullopt for parallel lines. For duals of
/// p and q this is the slope (p[2] - q[2]) / (p[1] - q[1]).
template <typename Scalar>
std::optional<Scalar> intersect_abscissa(const DualLine<Scalar>& a, const DualLine<Scalar>& b) {
    if (a.slope == b.slope)
        return std::nullopt;
    return (b.intercept - a.intercept) / (a.slope - b.slope);
}

namespace detail {

template <typename Scalar>
struct HullLine {
    Scalar slope;
    Scalar intercept;
    std::vector<PointId> owners;
};

// Sign of x(a, b) - r, where x(a, b) is the crossing of a and b, a.slope < b.slope.
template <typename Scalar>
int compare_crossing(const HullLine<Scalar>& a, const HullLine<Scalar>& b, Scalar r) {
    return exact::sign_of_product_difference(a.intercept, b.intercept, Scalar(1), Scalar(0), r,
                                             Scalar(0), b.slope, a.slope);
}

// Sign of x(a, b) - x(b, c) for slopes a < b < c. Positive means b never
// rises above max(a, c); zero means all three meet at one point.
template <typename Scalar>
int compare_crossings(const HullLine<Scalar>& a, const HullLine<Scalar>& b, const HullLine<Scalar>& c) {
    return exact::sign_of_product_difference(a.intercept, b.intercept, c.slope, b.slope, b.intercept,
                                             c.intercept, b.slope, a.slope);
}

template <typename Scalar>
Scalar crossing(const HullLine<Scalar>& a, const HullLine<Scalar>& b) {
    return (a.intercept - b.intercept) / (b.slope - a.slope);
}

// Lines on the upper envelope over the whole real axis, by increasing slope.
// Lines touching the envelope at a single point are kept.
template <typename Scalar>
std::vector<HullLine<Scalar>> upper_hull(std::span<const DualLine<Scalar>> lines) {
    std::vector<DualLine<Scalar>> sorted(lines.begin(), lines.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.slope != b.slope)
            return a.slope < b.slope;
        if (a.intercept != b.intercept)
            return a.intercept > b.intercept;
        return a.owner < b.owner;
    });

    std::vector<HullLine<Scalar>> hull;
    for (std::size_t i = 0; i < sorted.size();) {
        // Highest line of this slope, sharing ownership with exact copies.
        HullLine<Scalar> line{sorted[i].slope, sorted[i].intercept, {}};
        std::size_t j = i;
        for (; j < sorted.size() && sorted[j].slope == line.slope; ++j)
            if (sorted[j].intercept == line.intercept)
                line.owners.push_back(sorted[j].owner);
        i = j;
        while (hull.size() >= 2 && compare_crossings(hull[hull.size() - 2], hull.back(), line) > 0)
            hull.pop_back();
        hull.push_back(std::move(line));
    }
    return hull;
}

} // namespace detail

/// Upper envelope (pointwise maximum) of `lines` restricted to [r_lo, r_hi].
/// Segments tile the interval in order; lines that only touch it at one
/// abscissa are reported as contacts. Combinatorial decisions use exact
/// arithmetic; reported breakpoints are rounded.
template <typename Scalar>
Envelope<Scalar> upper_envelope(std::span<const DualLine<Scalar>> lines, Scalar r_lo, Scalar r_hi) {
    if (lines.empty())
        throw Error(Errc::EmptyInput, "upper_envelope needs at least one line");
    if (!std::isfinite(r_lo) || !std::isfinite(r_hi) || !(r_lo < r_hi) || !(r_hi < Scalar(0)))
        throw Error(Errc::BadInterval, "need r_lo < r_hi < 0");

    const auto hull = detail::upper_hull(lines);
    const std::size_t last = hull.size() - 1;

    Envelope<Scalar> env;
    Scalar cursor = r_lo;
    for (std::size_t k = 0; k <= last; ++k) {
        // Line k is maximal on [x(k-1, k), x(k, k+1)].
        if (k > 0 && detail::compare_crossing(hull[k - 1], hull[k], r_hi) > 0)
            break;
        if (k < last && detail::compare_crossing(hull[k], hull[k + 1], r_lo) < 0)
            continue;
        const bool starts_at_r_lo = k == 0 || detail::compare_crossing(hull[k - 1], hull[k], r_lo) <= 0;
        const bool ends_at_r_hi = k == last || detail::compare_crossing(hull[k], hull[k + 1], r_hi) >= 0;

        bool wide;
        if (starts_at_r_lo && ends_at_r_hi)
            wide = true;
        else if (starts_at_r_lo)
            wide = detail::compare_crossing(hull[k], hull[k + 1], r_lo) > 0;
        else if (ends_at_r_hi)
            wide = detail::compare_crossing(hull[k - 1], hull[k], r_hi) < 0;
        else
            wide = detail::compare_crossings(hull[k - 1], hull[k], hull[k + 1]) < 0;

        if (wide) {
            const Scalar end =
                ends_at_r_hi ? r_hi : std::clamp(detail::crossing(hull[k], hull[k + 1]), cursor, r_hi);
            if (cursor < end) {
                env.segments.push_back({hull[k].owners, cursor, end});
                cursor = end;
                continue;
            }
        }
        env.contacts.push_back({hull[k].owners, cursor});
    }
    return env;
}

template <typename Scalar>
Envelope<Scalar> upper_envelope(const std::vector<DualLine<Scalar>>& lines, Scalar r_lo, Scalar r_hi) {
    return upper_envelope(std::span<const DualLine<Scalar>>(lines), r_lo, r_hi);
}

/// Envelope semantics for d == 2: every point minimising the score at some
/// ratio in [t_lo, t_hi]. Witnesses sit at the midpoint of each owner's widest
/// segment, or at the contact abscissa.
template <typename Scalar>
QueryResult<Scalar> eclipse_envelope_2d(const Dataset<Scalar>& data, Scalar t_lo, Scalar t_hi) {
    if (data.dim() != 2)
        throw Error(Errc::DimensionNot2, "dual-space envelope needs 2-dimensional data");
    const Scalar r_lo = t_to_r(t_lo);
    const Scalar r_hi = t_to_r(t_hi);
    if (t_hi < t_lo)
        throw Error(Errc::BadInterval, "need t_lo <= t_hi");

    if (!(r_lo < r_hi)) {
        const Vector<Scalar> t = Vector<Scalar>::Constant(1, t_lo);
        auto mins = detail::minimizers_at(data, t);
        auto result = detail::make_result<Scalar>(std::move(mins.ids), Semantics::EclipseEnvelope, "dual2d");
        for (PointId id : result.ids)
            result.witnesses.emplace(id, RatioVector<Scalar>{t_lo});
        return result;
    }

    const auto env = upper_envelope(dual_lines(data), r_lo, r_hi);

    std::map<PointId, std::pair<Scalar, Scalar>> widest; // id -> (width, abscissa)
    for (const auto& seg : env.segments) {
        const Scalar width = seg.r_hi - seg.r_lo;
        const Scalar mid = seg.r_lo + width / Scalar(2);
        for (PointId id : seg.owners) {
            auto it = widest.find(id);
            if (it == widest.end() || width > it->second.first)
                widest[id] = {width, mid};
        }
    }
    for (const auto& c : env.contacts)
        for (PointId id : c.owners)
            widest.try_emplace(id, Scalar(0), c.r);

    auto result = detail::make_result<Scalar>(env.contributors(), Semantics::EclipseEnvelope, "dual2d");
    for (const auto& [id, w] : widest) {
        const Scalar r = w.second;
        const Scalar t = r == r_lo ? t_lo : r == r_hi ? t_hi : r_to_t(r);
        result.witnesses.emplace(id, RatioVector<Scalar>{t});
    }
    return result;
}

template <typename Scalar>
QueryResult<Scalar> eclipse_envelope_2d(const Dataset<Scalar>& data, const WeightBox<Scalar>& box) {
    detail::require_dim(box.size(), 1, "eclipse_envelope_2d: box");
    return eclipse_envelope_2d(data, box.lo(0), box.hi(0));
}

} // namespace eclipse

#endif // ECLIPSE_DUAL2D_HPP
