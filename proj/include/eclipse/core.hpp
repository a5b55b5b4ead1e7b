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

// Domain model shared by every query: points, datasets, ratio vectors,
// weight boxes and the weighted attribute sum.
//
// Weights are normalised so that w[1] == 1; a weight vector is therefore
// described by the d-1 ratios t_j = w[j] / w[1], j = 2..d. Ratio vectors and
// boxes are indexed 0..d-2, entry k constraining attribute k+1 (0-based).

#ifndef ECLIPSE_CORE_HPP
#define ECLIPSE_CORE_HPP

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "eclipse/error.hpp"

namespace eclipse {

using PointId = std::size_t;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// One point per row.
template <typename Scalar>
using PointMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar = double>
struct Point {
    PointId id = 0;
    Vector<Scalar> coords;

    Eigen::Index dim() const { return coords.size(); }
};

namespace detail {

template <typename Derived>
bool all_finite(const Eigen::DenseBase<Derived>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!std::isfinite(v.coeff(i)))
            return false;
    return true;
}

} // namespace detail

/// Validated, immutable point collection. Point ids are row indices.
template <typename Scalar = double>
class Dataset {
public:
    using Matrix = PointMatrix<Scalar>;

    /// Validates `coords` (one point per row) and takes ownership.
    static Dataset from_matrix(Matrix coords) {
        if (coords.rows() == 0)
            throw Error(Errc::EmptyDataset, "dataset has no rows");
        if (coords.cols() < 2)
            throw Error(Errc::DimensionTooSmall,
                        "points need at least 2 attributes, got " + std::to_string(coords.cols()));
        for (Eigen::Index i = 0; i < coords.rows(); ++i)
            if (!detail::all_finite(coords.row(i)))
                throw Error(Errc::NonFiniteValue, "row " + std::to_string(i) +
                                                      " contains a NaN or infinite value");
        return Dataset(std::move(coords));
    }

    Eigen::Index dim() const { return coords_.cols(); }
    std::size_t size() const { return static_cast<std::size_t>(coords_.rows()); }

    auto row(PointId id) const { return coords_.row(static_cast<Eigen::Index>(id)); }

    Point<Scalar> point(PointId id) const { return {id, row(id).transpose()}; }

    const Matrix& matrix() const { return coords_; }

private:
    explicit Dataset(Matrix coords) : coords_(std::move(coords)) {}

    Matrix coords_;
};

/// Builds a dataset from raw rows; ids follow row order and the dimension is
/// taken from the first row.
template <typename Scalar>
Dataset<Scalar> validate_dataset(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty())
        throw Error(Errc::EmptyDataset, "dataset has no rows");
    const auto dim = static_cast<Eigen::Index>(rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (static_cast<Eigen::Index>(rows[i].size()) != dim)
            throw Error(Errc::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                                     std::to_string(rows[i].size()) +
                                                     " values, expected " + std::to_string(dim));
    PointMatrix<Scalar> coords(static_cast<Eigen::Index>(rows.size()), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            coords(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
    return Dataset<Scalar>::from_matrix(std::move(coords));
}

/// Weight ratios t_j = w[j]/w[1], all finite and strictly positive.
template <typename Scalar = double>
class RatioVector {
public:
    explicit RatioVector(Vector<Scalar> t) : t_(std::move(t)) {
        if (t_.size() == 0)
            throw Error(Errc::InvalidRatio, "ratio vector is empty");
        for (Eigen::Index j = 0; j < t_.size(); ++j)
            if (!std::isfinite(t_[j]) || !(t_[j] > Scalar(0)))
                throw Error(Errc::InvalidRatio, "ratio " + std::to_string(j) +
                                                    " must be finite and positive");
    }

    RatioVector(std::initializer_list<Scalar> t)
        : RatioVector(Eigen::Map<const Vector<Scalar>>(t.begin(), static_cast<Eigen::Index>(t.size()))) {}

    Eigen::Index size() const { return t_.size(); }
    Scalar operator[](Eigen::Index j) const { return t_[j]; }
    const Vector<Scalar>& values() const { return t_; }

    friend bool operator==(const RatioVector& a, const RatioVector& b) {
        return a.t_.size() == b.t_.size() && (a.t_.array() == b.t_.array()).all();
    }

private:
    Vector<Scalar> t_;
};

/// Closed box of ratio intervals [lo_j, hi_j] with 0 < lo_j <= hi_j.
template <typename Scalar = double>
class WeightBox {
public:
    WeightBox(Vector<Scalar> lo, Vector<Scalar> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_.size() == 0 || lo_.size() != hi_.size())
            throw Error(Errc::InvalidBox, "box needs one [lo, hi] pair per ratio");
        for (Eigen::Index j = 0; j < lo_.size(); ++j) {
            if (!std::isfinite(lo_[j]) || !std::isfinite(hi_[j]) || !(lo_[j] > Scalar(0)) ||
                !(lo_[j] <= hi_[j]))
                throw Error(Errc::InvalidBox, "interval " + std::to_string(j) +
                                                  " must satisfy 0 < lo <= hi");
        }
    }

    WeightBox(std::initializer_list<std::pair<Scalar, Scalar>> intervals)
        : WeightBox(collect(intervals, true), collect(intervals, false)) {}

    /// The single-point box {t}.
    static WeightBox at(const RatioVector<Scalar>& t) { return WeightBox(t.values(), t.values()); }

    Eigen::Index size() const { return lo_.size(); }
    Eigen::Index point_dim() const { return lo_.size() + 1; }

    Scalar lo(Eigen::Index j) const { return lo_[j]; }
    Scalar hi(Eigen::Index j) const { return hi_[j]; }
    const Vector<Scalar>& lower() const { return lo_; }
    const Vector<Scalar>& upper() const { return hi_; }

    bool is_degenerate(Eigen::Index j) const { return lo_[j] == hi_[j]; }
    bool is_degenerate() const { return (lo_.array() == hi_.array()).all(); }

    /// True when `inner` lies inside this box.
    bool encloses(const WeightBox& inner) const {
        return inner.size() == size() && (lo_.array() <= inner.lo_.array()).all() &&
               (inner.hi_.array() <= hi_.array()).all();
    }

private:
    static Vector<Scalar> collect(std::initializer_list<std::pair<Scalar, Scalar>> intervals,
                                  bool lower) {
        Vector<Scalar> v(static_cast<Eigen::Index>(intervals.size()));
        Eigen::Index j = 0;
        for (const auto& [l, h] : intervals)
            v[j++] = lower ? l : h;
        return v;
    }

    Vector<Scalar> lo_;
    Vector<Scalar> hi_;
};

namespace detail {

// p[0] + t[0]*p[1] + t[1]*p[2] + ..., accumulated strictly left to right.
template <typename DerivedP, typename DerivedT>
typename DerivedP::Scalar score_unchecked(const Eigen::MatrixBase<DerivedP>& p,
                                          const Eigen::MatrixBase<DerivedT>& t) {
    typename DerivedP::Scalar s = p.coeff(0);
    for (Eigen::Index j = 1; j < p.size(); ++j)
        s += t.coeff(j - 1) * p.coeff(j);
    return s;
}

/// Calls fn(vertex) for each box corner in canonical order: binary counting
/// with the first ratio as the most significant digit, lo before hi.
/// Degenerate intervals contribute a single value.
template <typename Scalar, typename Fn>
void for_each_vertex(const WeightBox<Scalar>& box, Fn&& fn) {
    std::vector<Eigen::Index> free_dims;
    for (Eigen::Index j = 0; j < box.size(); ++j)
        if (!box.is_degenerate(j))
            free_dims.push_back(j);
    Vector<Scalar> v = box.lower();
    const std::size_t k = free_dims.size();
    const std::size_t count = std::size_t{1} << k;
    for (std::size_t mask = 0; mask < count; ++mask) {
        for (std::size_t b = 0; b < k; ++b) {
            const Eigen::Index j = free_dims[b];
            const bool high = (mask >> (k - 1 - b)) & 1U;
            v[j] = high ? box.hi(j) : box.lo(j);
        }
        if constexpr (std::is_same_v<decltype(fn(std::as_const(v))), bool>) {
            if (!fn(std::as_const(v)))
                return;
        } else {
            fn(std::as_const(v));
        }
    }
}

} // namespace detail

/// Weighted attribute sum with w[1] = 1.
template <typename Derived>
typename Derived::Scalar score(const Eigen::MatrixBase<Derived>& p,
                               const RatioVector<typename Derived::Scalar>& t) {
    detail::require_dim(t.size(), p.size() - 1, "score: ratio vector");
    return detail::score_unchecked(p, t.values());
}

template <typename Scalar>
Scalar score(const Point<Scalar>& p, const RatioVector<Scalar>& t) {
    return score(p.coords, t);
}

template <typename Scalar>
std::vector<RatioVector<Scalar>> box_vertices(const WeightBox<Scalar>& box) {
    std::vector<RatioVector<Scalar>> out;
    detail::for_each_vertex(box, [&](const Vector<Scalar>& v) { out.emplace_back(v); });
    return out;
}

template <typename Scalar>
bool box_contains(const WeightBox<Scalar>& box, const RatioVector<Scalar>& t) {
    detail::require_dim(t.size(), box.size(), "box_contains: ratio vector");
    for (Eigen::Index j = 0; j < box.size(); ++j)
        if (!(box.lo(j) <= t[j] && t[j] <= box.hi(j)))
            return false;
    return true;
}

enum class Semantics { Skyline, Top1, EclipseDominance, EclipseEnvelope };

constexpr std::string_view to_string(Semantics s) noexcept {
    switch (s) {
    case Semantics::Skyline: return "skyline";
    case Semantics::Top1: return "top1";
    case Semantics::EclipseDominance: return "eclipse-dominance";
    case Semantics::EclipseEnvelope: return "eclipse-envelope";
    }
    return "unknown";
}

inline std::optional<Semantics> parse_semantics(std::string_view s) {
    for (auto v : {Semantics::Skyline, Semantics::Top1, Semantics::EclipseDominance,
                   Semantics::EclipseEnvelope})
        if (to_string(v) == s)
            return v;
    return std::nullopt;
}

/// Ids ascending. Witnesses, when present, map a result id to a ratio vector
/// at which that point minimises the score.
template <typename Scalar = double>
struct QueryResult {
    std::vector<PointId> ids;
    Semantics semantics = Semantics::Skyline;
    std::string algorithm;
    std::map<PointId, RatioVector<Scalar>> witnesses;
};

} // namespace eclipse

#endif // ECLIPSE_CORE_HPP
