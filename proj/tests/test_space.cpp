#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "boltcheb/errors.hpp"
#include "boltcheb/space.hpp"
#include "support.hpp"

using namespace boltcheb;

TEST_CASE("grid builder labels rows and columns") {
    const FiniteQuotientSpace sp = build_grid(2, 2);
    CHECK(sp.n() == 4);
    CHECK(sp.n_s == 2);
    CHECK(sp.n_p == 2);
    // Point i*ny + j carries row class i and column class j.
    CHECK(sp.s_class == std::vector<int>{0, 0, 1, 1});
    CHECK(sp.p_class == std::vector<int>{0, 1, 0, 1});
    REQUIRE(sp.coords.has_value());
    const auto& c = *sp.coords;
    REQUIRE(c.size() == 4);
    CHECK(c[0] == std::vector<double>{-1.0, -1.0});
    CHECK(c[1] == std::vector<double>{-1.0, 1.0});
    CHECK(c[2] == std::vector<double>{1.0, -1.0});
    CHECK(c[3] == std::vector<double>{1.0, 1.0});
}

TEST_CASE("grid builder pins single-layer axes to zero") {
    const FiniteQuotientSpace sp = build_grid(1, 5);
    CHECK(sp.n() == 5);
    CHECK(sp.n_s == 1);
    CHECK(sp.n_p == 5);
    REQUIRE(sp.coords.has_value());
    for (int j = 0; j < 5; ++j) {
        CHECK((*sp.coords)[j][0] == 0.0);
        CHECK((*sp.coords)[j][1] == doctest::Approx(-1.0 + 2.0 * j / 4.0));
    }
}

TEST_CASE("grid builder rejects empty axes") {
    CHECK_THROWS_AS(build_grid(0, 3), InputError);
    CHECK_THROWS_AS(build_grid(3, -1), InputError);
}

TEST_CASE("explicit builder densifies labels in first-seen order") {
    const FiniteQuotientSpace sp = build_explicit({7, 7, 2}, {5, 9, 9});
    CHECK(sp.s_class == std::vector<int>{0, 0, 1});
    CHECK(sp.p_class == std::vector<int>{0, 1, 1});
    CHECK(sp.n_s == 2);
    CHECK(sp.n_p == 2);
    CHECK_FALSE(sp.coords.has_value());
}

TEST_CASE("explicit builder rejects bad label lists") {
    CHECK_THROWS_AS(build_explicit({}, {}), InputError);
    CHECK_THROWS_AS(build_explicit({0, 1}, {0}), InputError);
    CHECK_THROWS_AS(build_explicit({0, -1}, {0, 0}), InputError);
}

TEST_CASE("ridge builder groups by projection with tolerance") {
    // Projections onto (1,0): -1, -1+eps/2, 1. The first two merge.
    const std::vector<std::vector<double>> pts{{-1.0, 0.5}, {-1.0 + 5e-10, -0.5}, {1.0, 0.0}};
    const FiniteQuotientSpace sp =
        build_ridge(pts, {1.0, 0.0}, {0.0, 1.0}, 1e-9);
    CHECK(sp.n() == 3);
    CHECK(sp.n_s == 2);
    CHECK(sp.s_class == std::vector<int>{0, 0, 1});
    // Second direction separates all three points: projections 0.5, -0.5, 0.
    CHECK(sp.n_p == 3);
    CHECK(sp.p_class == std::vector<int>{2, 0, 1});
    REQUIRE(sp.coords.has_value());
    CHECK((*sp.coords)[0] == pts[0]);
}

TEST_CASE("ridge class ids ascend with the projection value") {
    const std::vector<std::vector<double>> pts{{3.0}, {1.0}, {2.0}};
    const FiniteQuotientSpace sp = build_ridge(pts, {1.0}, {-1.0}, 1e-9);
    CHECK(sp.s_class == std::vector<int>{2, 0, 1});
    CHECK(sp.p_class == std::vector<int>{0, 2, 1});
}

TEST_CASE("ridge builder validates its inputs") {
    const std::vector<std::vector<double>> pts{{0.0, 0.0}};
    CHECK_THROWS_AS(build_ridge({}, {1.0}, {1.0}, 1e-9), InputError);
    CHECK_THROWS_AS(build_ridge(pts, {1.0}, {0.0, 1.0}, 1e-9), InputError);
    CHECK_THROWS_AS(build_ridge(pts, {0.0, 0.0}, {0.0, 1.0}, 1e-9), InputError);
    CHECK_THROWS_AS(build_ridge(pts, {1.0, 0.0}, {0.0, 1.0}, 0.0), InputError);
    const std::vector<std::vector<double>> ragged{{0.0, 0.0}, {1.0}};
    CHECK_THROWS_AS(build_ridge(ragged, {1.0, 0.0}, {0.0, 1.0}, 1e-9), InputError);
}

TEST_CASE("evaluate_sum adds class values pointwise") {
    const FiniteQuotientSpace sp = build_grid(2, 2);
    const SumElement u{{-1.0 / 4.0, 1.0 / 4.0}, {0.0, 1.0 / 2.0}};
    const SampledFunction out = evaluate_sum(sp, u);
    REQUIRE(out.n() == 4);
    CHECK(out.values[0] == doctest::Approx(-0.25));
    CHECK(out.values[1] == doctest::Approx(0.25));
    CHECK(out.values[2] == doctest::Approx(0.25));
    CHECK(out.values[3] == doctest::Approx(0.75));
}

TEST_CASE("evaluate_sum rejects mismatched shapes and non-finite entries") {
    const FiniteQuotientSpace sp = build_grid(2, 2);
    CHECK_THROWS_AS(evaluate_sum(sp, SumElement{{0.0}, {0.0, 0.0}}), InputError);
    CHECK_THROWS_AS(evaluate_sum(sp, SumElement{{0.0, 0.0}, {0.0}}), InputError);
    const double nan = std::nan("");
    CHECK_THROWS_AS(evaluate_sum(sp, SumElement{{nan, 0.0}, {0.0, 0.0}}), InputError);
}

TEST_CASE("class_members lists each class in ascending point order") {
    const FiniteQuotientSpace sp = build_explicit({0, 1, 0, 1}, {0, 0, 1, 1});
    const auto ms = class_members(sp.s_class, sp.n_s);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == std::vector<int>{0, 2});
    CHECK(ms[1] == std::vector<int>{1, 3});
}

TEST_CASE("random spaces from the shared generator are well formed") {
    boltcheb::DeterministicRng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const FiniteQuotientSpace sp = testsupport::random_space(rng, 20);
        REQUIRE(sp.n() >= 2);
        REQUIRE(sp.n_s >= 1);
        REQUIRE(sp.n_p >= 1);
        for (int i = 0; i < sp.n(); ++i) {
            CHECK(sp.s_class[i] >= 0);
            CHECK(sp.s_class[i] < sp.n_s);
            CHECK(sp.p_class[i] >= 0);
            CHECK(sp.p_class[i] < sp.n_p);
        }
        // Dense labelings: every class id occurs.
        std::vector<int> seen_s(sp.n_s, 0), seen_p(sp.n_p, 0);
        for (int i = 0; i < sp.n(); ++i) {
            seen_s[sp.s_class[i]] = 1;
            seen_p[sp.p_class[i]] = 1;
        }
        for (int v : seen_s) CHECK(v == 1);
        for (int v : seen_p) CHECK(v == 1);
    }
}
