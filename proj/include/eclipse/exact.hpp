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

// Exact sign evaluation with floating-point expansions (sums of
// non-overlapping components, smallest magnitude first). Valid for IEEE
// binary types with round-to-nearest as long as no intermediate overflows or
// underflows.

#ifndef ECLIPSE_EXACT_HPP
#define ECLIPSE_EXACT_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace eclipse::exact {

template <typename T, std::size_t N>
struct Expansion {
    std::array<T, N> terms{};
    std::size_t size = 0;
};

template <typename T>
constexpr void two_sum(T a, T b, T& x, T& y) {
    x = a + b;
    const T bv = x - a;
    const T av = x - bv;
    y = (a - av) + (b - bv);
}

template <typename T>
constexpr void fast_two_sum(T a, T b, T& x, T& y) {
    x = a + b;
    y = b - (x - a);
}

template <typename T>
void two_product(T a, T b, T& x, T& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

/// a - b as a two-term expansion.
template <typename T>
Expansion<T, 2> two_diff(T a, T b) {
    Expansion<T, 2> e;
    T x, y;
    two_sum(a, -b, x, y);
    e.terms = {y, x};
    e.size = 2;
    return e;
}

/// e + f; output length is at most e.size + f.size.
template <typename T, std::size_t M, std::size_t N>
Expansion<T, M + N> expansion_sum(const Expansion<T, M>& e, const Expansion<T, N>& f) {
    Expansion<T, M + N> h;
    for (std::size_t i = 0; i < e.size; ++i)
        h.terms[i] = e.terms[i];
    h.size = e.size;
    // Grow h by each component of f in turn.
    for (std::size_t k = 0; k < f.size; ++k) {
        T q = f.terms[k];
        for (std::size_t i = 0; i < h.size; ++i) {
            T s, err;
            two_sum(q, h.terms[i], s, err);
            h.terms[i] = err;
            q = s;
        }
        h.terms[h.size++] = q;
    }
    return h;
}

/// e * b; output length is at most 2 * e.size.
template <typename T, std::size_t M>
Expansion<T, 2 * M> scale_expansion(const Expansion<T, M>& e, T b) {
    Expansion<T, 2 * M> h;
    if (e.size == 0)
        return h;
    T q, lo;
    two_product(e.terms[0], b, q, lo);
    h.terms[h.size++] = lo;
    for (std::size_t i = 1; i < e.size; ++i) {
        T hi_t, lo_t, sum, err;
        two_product(e.terms[i], b, hi_t, lo_t);
        two_sum(q, lo_t, sum, err);
        h.terms[h.size++] = err;
        fast_two_sum(hi_t, sum, q, err);
        h.terms[h.size++] = err;
    }
    h.terms[h.size++] = q;
    return h;
}

template <typename T, std::size_t M>
Expansion<T, M> negate(Expansion<T, M> e) {
    for (std::size_t i = 0; i < e.size; ++i)
        e.terms[i] = -e.terms[i];
    return e;
}

/// Sign of the largest non-zero component, which is the sign of the sum.
template <typename T, std::size_t M>
int sign(const Expansion<T, M>& e) {
    for (std::size_t i = e.size; i-- > 0;) {
        if (e.terms[i] > T(0))
            return 1;
        if (e.terms[i] < T(0))
            return -1;
    }
    return 0;
}

/// Exact sign of (a - b) * (c - d) - (e - f) * (g - h).
template <typename T>
int sign_of_product_difference(T a, T b, T c, T d, T e, T f, T g, T h) {
    const auto ab = two_diff(a, b);
    const auto cd = two_diff(c, d);
    const auto ef = two_diff(e, f);
    const auto gh = two_diff(g, h);
    const auto left = expansion_sum(scale_expansion(ab, cd.terms[0]), scale_expansion(ab, cd.terms[1]));
    const auto right = expansion_sum(scale_expansion(ef, gh.terms[0]), scale_expansion(ef, gh.terms[1]));
    return sign(expansion_sum(left, negate(right)));
}

} // namespace eclipse::exact

#endif // ECLIPSE_EXACT_HPP
