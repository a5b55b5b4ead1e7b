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

// Pairwise dominance predicates. Smaller is better in every attribute and all
// comparisons are exact: equal scores never dominate.

#ifndef ECLIPSE_DOMINANCE_HPP
#define ECLIPSE_DOMINANCE_HPP

#include <variant>

#include "eclipse/core.hpp"

namespace eclipse {

/// p <= q in every attribute and p < q in at least one.
template <typename DerivedP, typename DerivedQ>
bool skyline_dominates(const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q) {
    detail::require_dim(q.size(), p.size(), "skyline_dominates");
    bool strict = false;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (q.coeff(i) < p.coeff(i))
            return false;
        strict = strict || p.coeff(i) < q.coeff(i);
    }
    return strict;
}

/// score(p, t) < score(q, t).
template <typename DerivedP, typename DerivedQ>
bool dominates_at(const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q,
                  const RatioVector<typename DerivedP::Scalar>& t) {
    detail::require_dim(q.size(), p.size(), "dominates_at");
    return score(p, t) < score(q, t);
}

/// score(p, t) < score(q, t) for every t in the closed box.
///
/// score(p, .) - score(q, .) is affine in t, so its maximum over the box is
/// attained at a corner; checking the corners is exact.
template <typename DerivedP, typename DerivedQ>
bool eclipse_dominates(const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q,
                       const WeightBox<typename DerivedP::Scalar>& box) {
    using Scalar = typename DerivedP::Scalar;
    detail::require_dim(q.size(), p.size(), "eclipse_dominates");
    detail::require_dim(box.size(), p.size() - 1, "eclipse_dominates: box");
    bool all_strict = true;
    detail::for_each_vertex(box, [&](const Vector<Scalar>& t) {
        all_strict = detail::score_unchecked(p, t) < detail::score_unchecked(q, t);
        return all_strict;
    });
    return all_strict;
}

/// Test oracle: dominates_at on the endpoint-inclusive grid of `grid_per_dim`
/// equispaced values per ratio.
template <typename DerivedP, typename DerivedQ>
bool sampled_dominance_oracle(const Eigen::MatrixBase<DerivedP>& p,
                              const Eigen::MatrixBase<DerivedQ>& q,
                              const WeightBox<typename DerivedP::Scalar>& box, int grid_per_dim) {
    using Scalar = typename DerivedP::Scalar;
    detail::require_dim(q.size(), p.size(), "sampled_dominance_oracle");
    detail::require_dim(box.size(), p.size() - 1, "sampled_dominance_oracle: box");
    if (grid_per_dim < 2)
        throw Error(Errc::BadGrid, "grid_per_dim must be at least 2");

    const Eigen::Index m = box.size();
    const auto g = static_cast<std::size_t>(grid_per_dim);
    auto grid_value = [&](Eigen::Index j, std::size_t k) -> Scalar {
        if (k == 0)
            return box.lo(j);
        if (k + 1 == g)
            return box.hi(j);
        return box.lo(j) + (box.hi(j) - box.lo(j)) * Scalar(k) / Scalar(g - 1);
    };

    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    Vector<Scalar> t(m);
    while (true) {
        for (Eigen::Index j = 0; j < m; ++j)
            t[j] = grid_value(j, idx[static_cast<std::size_t>(j)]);
        if (!dominates_at(p, q, RatioVector<Scalar>(t)))
            return false;
        // Odometer increment, last ratio fastest.
        Eigen::Index j = m - 1;
        while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == g)
            idx[static_cast<std::size_t>(j--)] = 0;
        if (j < 0)
            return true;
    }
}

template <typename Scalar>
bool skyline_dominates(const Point<Scalar>& p, const Point<Scalar>& q) {
    return skyline_dominates(p.coords, q.coords);
}

template <typename Scalar>
bool dominates_at(const Point<Scalar>& p, const Point<Scalar>& q, const RatioVector<Scalar>& t) {
    return dominates_at(p.coords, q.coords, t);
}

template <typename Scalar>
bool eclipse_dominates(const Point<Scalar>& p, const Point<Scalar>& q, const WeightBox<Scalar>& box) {
    return eclipse_dominates(p.coords, q.coords, box);
}

template <typename Scalar>
bool sampled_dominance_oracle(const Point<Scalar>& p, const Point<Scalar>& q,
                              const WeightBox<Scalar>& box, int grid_per_dim) {
    return sampled_dominance_oracle(p.coords, q.coords, box, grid_per_dim);
}

/// Which dominance relation to apply.
struct SkylineDominance {};

template <typename Scalar = double>
struct DominanceAtRatio {
    RatioVector<Scalar> t;
};

template <typename Scalar = double>
struct EclipseBoxDominance {
    WeightBox<Scalar> box;
};

template <typename Scalar = double>
using DominanceKind =
    std::variant<SkylineDominance, DominanceAtRatio<Scalar>, EclipseBoxDominance<Scalar>>;

template <typename DerivedP, typename DerivedQ>
bool dominates(const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q,
               const DominanceKind<typename DerivedP::Scalar>& kind) {
    using Scalar = typename DerivedP::Scalar;
    struct Visitor {
        const Eigen::MatrixBase<DerivedP>& p;
        const Eigen::MatrixBase<DerivedQ>& q;
        bool operator()(const SkylineDominance&) const { return skyline_dominates(p, q); }
        bool operator()(const DominanceAtRatio<Scalar>& k) const { return dominates_at(p, q, k.t); }
        bool operator()(const EclipseBoxDominance<Scalar>& k) const {
            return eclipse_dominates(p, q, k.box);
        }
    };
    return std::visit(Visitor{p, q}, kind);
}

} // namespace eclipse

#endif // ECLIPSE_DOMINANCE_HPP
