#include <doctest.h>

#include "eclipse/core.hpp"
#include "support/generators.hpp"

using namespace eclipse;

TEST_CASE("validate_dataset assigns ids by row order") {
    const auto d = validate_dataset<double>({{1, 2}, {3, 4}});
    CHECK(d.dim() == 2);
    CHECK(d.size() == 2);
    CHECK(d.point(0).id == 0);
    CHECK(d.point(1).id == 1);
    CHECK(d.row(1)[0] == 3);

    const auto d3 = validate_dataset<double>({{1, 2, 3}});
    CHECK(d3.dim() == 3);
    CHECK(d3.size() == 1);

    const auto dup = validate_dataset<double>({{1, 1}, {1, 1}});
    CHECK(dup.size() == 2);
}

TEST_CASE("validate_dataset errors") {
    auto code_of = [](const std::vector<std::vector<double>>& rows) {
        try {
            validate_dataset(rows);
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("expected an error");
        return Errc::Io;
    };
    CHECK(code_of({}) == Errc::EmptyDataset);
    CHECK(code_of({{1, 2}, {3}}) == Errc::DimensionMismatch);
    CHECK(code_of({{1}}) == Errc::DimensionTooSmall);
    CHECK(code_of({{1, std::numeric_limits<double>::quiet_NaN()}}) == Errc::NonFiniteValue);
    CHECK(code_of({{1, 2}, {std::numeric_limits<double>::infinity(), 0}}) == Errc::NonFiniteValue);
}

TEST_CASE("score") {
    CHECK(score(Vector<double>{{1.0, 2.0}}, RatioVector<double>{3.0}) == 7.0);
    CHECK(score(Vector<double>{{0.0, 0.0, 0.0}}, RatioVector<double>{5.0, 9.0}) == 0.0);
    CHECK(score(Vector<double>{{0.0, 10.0}}, RatioVector<double>{0.5}) == 5.0);
    CHECK_THROWS_AS(score(Vector<double>{{1.0, 2.0}}, RatioVector<double>{1.0, 1.0}), Error);

    // Accepts any Eigen expression, e.g. a dataset row.
    const auto d = validate_dataset<double>({{1, 2}});
    CHECK(score(d.row(0), RatioVector<double>{3.0}) == 7.0);
}

TEST_CASE("score is affine in the ratio vector") {
    testing::Gen gen(11);
    for (int it = 0; it < 2000; ++it) {
        const Eigen::Index dim = gen.integer(2, 5);
        const auto p = gen.point(dim, -1000, 1000);
        const auto box = gen.box(dim - 1, 1e-3, 1e3);
        const auto t1 = gen.ratio_in(box), t2 = gen.ratio_in(box);
        const double lambda = gen.uniform(0, 1);
        const RatioVector<double> mix(lambda * t1.values() + (1 - lambda) * t2.values());
        const double lhs = score(p, mix);
        const double rhs = lambda * score(p, t1) + (1 - lambda) * score(p, t2);
        // Relative to the magnitude of the summed terms.
        double scale = std::abs(p[0]);
        for (Eigen::Index j = 1; j < dim; ++j)
            scale += std::max(t1[j - 1], t2[j - 1]) * std::abs(p[j]);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, scale));
    }
}

TEST_CASE("ratio vectors and boxes reject bad values") {
    CHECK_THROWS_AS(RatioVector<double>{0.0}, Error);
    CHECK_THROWS_AS(RatioVector<double>{-1.0}, Error);
    CHECK_THROWS_AS((WeightBox<double>{{0.0, 1.0}}), Error);
    CHECK_THROWS_AS((WeightBox<double>{{3.0, 2.0}}), Error);
    CHECK_NOTHROW((WeightBox<double>{{2.0, 2.0}}));
}

TEST_CASE("box_vertices canonical order") {
    auto flat = [](const std::vector<RatioVector<double>>& vs) {
        std::vector<std::vector<double>> out;
        for (const auto& v : vs)
            out.emplace_back(v.values().data(), v.values().data() + v.size());
        return out;
    };
    CHECK(flat(box_vertices(WeightBox<double>{{2.0, 5.0}})) == std::vector<std::vector<double>>{{2}, {5}});
    CHECK(flat(box_vertices(WeightBox<double>{{2.0, 5.0}, {1.0, 3.0}})) ==
          std::vector<std::vector<double>>{{2, 1}, {2, 3}, {5, 1}, {5, 3}});
    CHECK(flat(box_vertices(WeightBox<double>{{2.0, 2.0}})) == std::vector<std::vector<double>>{{2}});
    CHECK(flat(box_vertices(WeightBox<double>{{2.0, 5.0}, {4.0, 4.0}, {1.0, 3.0}})) ==
          std::vector<std::vector<double>>{{2, 4, 1}, {2, 4, 3}, {5, 4, 1}, {5, 4, 3}});
}

TEST_CASE("box_vertices size and containment") {
    testing::Gen gen(5);
    for (int it = 0; it < 500; ++it) {
        const Eigen::Index m = gen.integer(1, 4);
        auto box = gen.box(m);
        // Collapse some intervals.
        Vector<double> lo = box.lower(), hi = box.upper();
        int free_dims = 0;
        for (Eigen::Index j = 0; j < m; ++j) {
            if (gen.coin(0.3))
                hi[j] = lo[j];
            free_dims += lo[j] != hi[j];
        }
        const WeightBox<double> b(lo, hi);
        const auto vs = box_vertices(b);
        CHECK(vs.size() == (std::size_t{1} << free_dims));
        for (const auto& v : vs)
            CHECK(box_contains(b, v));
    }
}

TEST_CASE("box_contains") {
    const WeightBox<double> box{{2.0, 5.0}};
    CHECK(box_contains(box, RatioVector<double>{3.0}));
    CHECK(box_contains(box, RatioVector<double>{5.0}));
    CHECK(box_contains(box, RatioVector<double>{2.0}));
    CHECK_FALSE(box_contains(box, RatioVector<double>{5.0001}));
    CHECK_THROWS_AS(box_contains(box, RatioVector<double>{3.0, 3.0}), Error);
}

TEST_CASE("box enclosure") {
    const WeightBox<double> outer{{1.0, 10.0}, {1.0, 10.0}};
    CHECK(outer.encloses(WeightBox<double>{{2.0, 3.0}, {1.0, 10.0}}));
    CHECK_FALSE(outer.encloses(WeightBox<double>{{0.5, 3.0}, {1.0, 10.0}}));
}

TEST_CASE("templated on the scalar type") {
    const auto d = validate_dataset<long double>({{1.0L, 2.0L}, {2.0L, 1.0L}});
    CHECK(score(d.row(0), RatioVector<long double>{3.0L}) == 7.0L);
}
