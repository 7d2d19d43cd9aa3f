#include <catch2/catch_amalgamated.hpp>

#include <eisenlab/special_functions.hpp>
#include <eisenlab/whittaker.hpp>

using namespace eisenlab;

namespace {
double rel_err(cdouble got, cdouble want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
} // namespace

TEST_CASE("w2 equals sqrt(y) K_alpha(2 pi y) on the grid", "[whittaker]") {
    const cdouble alphas[] = {{0.0, 0.0}, {0.5, 0.0}, {-0.5, 0.0}, {1.0, 0.0}, {0.0, 2.0}};
    for (const auto a : alphas)
        for (double y : {0.5, 1.0, 2.0, 5.0}) {
            const cdouble want = std::sqrt(y) * bessel_k(a, 2.0 * pi * y);
            CHECK(rel_err(w2_integral(a, y), want) < 1e-8);
        }
}

TEST_CASE("w2 closed form at half-integer order", "[whittaker]") {
    // sqrt(2) K_{1/2}(4 pi) = e^{-4 pi} / 2
    CHECK(rel_err(w2_integral({0.5, 0.0}, 2.0), 0.5 * std::exp(-4.0 * pi)) < 1e-10);
}

TEST_CASE("w2 is even in the order", "[whittaker]") {
    const cdouble alphas[] = {{0.3, 0.0}, {1.2, -0.4}, {0.0, 1.0}};
    for (const auto a : alphas)
        for (double y : {0.6, 1.7})
            CHECK(rel_err(w2_integral(a, y), w2_integral(-a, y)) < 1e-10);
}

TEST_CASE("w2 decays in y at the exponential rate", "[whittaker]") {
    const cdouble a{0.3, 0.0};
    double prev = std::abs(w2_integral(a, 0.5));
    for (double y : {1.0, 2.0, 4.0}) {
        const double cur = std::abs(w2_integral(a, y));
        CHECK(cur < prev);
        // ratio controlled by exp(-2 pi (y - y_prev)) up to polynomial factors
        CHECK(cur / prev < 2.0 * std::exp(-2.0 * pi * (y / 2.0)));
        prev = cur;
    }
}

TEST_CASE("w2 honors the subdivision budget", "[whittaker]") {
    quadrature_spec tight;
    tight.max_subdivisions = 1;
    try {
        (void)w2_integral({0.0, 0.0}, 1.0, tight);
        FAIL("expected convergence_error");
    } catch (const convergence_error& e) {
        CHECK(e.achieved_error() >= 0.0);
    }
}

TEST_CASE("w2 with the plain transform agrees with the default", "[whittaker]") {
    quadrature_spec plain;
    plain.transform = quadrature_spec::transform_kind::none;
    for (double y : {0.8, 1.5})
        CHECK(rel_err(w2_integral({0.4, 0.0}, y, plain), w2_integral({0.4, 0.0}, y)) < 1e-8);
}

TEST_CASE("jacquet value is independent of the character sign", "[whittaker]") {
    const langlands_parameter alpha({{0.35, 0.0}, {-0.35, 0.0}});
    for (double y : {0.7, 1.3, 2.0}) {
        const auto plus = jacquet_w2(alpha, y, +1);
        const auto minus = jacquet_w2(alpha, y, -1);
        CHECK(rel_err(plus, minus) < 1e-8);
    }
}

TEST_CASE("jacquet relates to w2 by the constant 2", "[whittaker]") {
    // fit of jacquet((a,-a), y) = C * w2(a, y) across a grid; C pins to 2
    double c_min = 1e300, c_max = 0.0;
    for (double a : {0.3, 0.5, 0.8})
        for (double y : {0.5, 1.0, 2.0}) {
            const langlands_parameter alpha({{a, 0.0}, {-a, 0.0}});
            const double ratio =
                (jacquet_w2(alpha, y, +1) / w2_integral({a, 0.0}, y)).real();
            c_min = std::min(c_min, ratio);
            c_max = std::max(c_max, ratio);
        }
    CHECK(std::abs(c_min - 2.0) < 1e-6);
    CHECK(std::abs(c_max - 2.0) < 1e-6);
    CHECK(c_max - c_min < 1e-7);
}

TEST_CASE("jacquet ordering outside the convergence region is rejected", "[whittaker]") {
    const langlands_parameter reversed({{-0.4, 0.0}, {0.4, 0.0}});
    REQUIRE_THROWS_AS(jacquet_w2(reversed, 1.0, +1), std::domain_error);
    // the permutation-invariant value is reached through the evenness of w2
    const langlands_parameter alpha({{0.4, 0.0}, {-0.4, 0.0}});
    const auto direct = jacquet_w2(alpha, 1.0, +1);
    const auto through_identity = 2.0 * w2_integral({-0.4, 0.0}, 1.0);
    CHECK(rel_err(direct, through_identity) < 1e-8);
}

TEST_CASE("jacquet with imaginary spectral part", "[whittaker]") {
    const langlands_parameter alpha({{0.4, 1.1}, {-0.4, -1.1}});
    const auto value = jacquet_w2(alpha, 1.0, +1);
    const auto expected = 2.0 * w2_integral({0.4, 1.1}, 1.0);
    CHECK(rel_err(value, expected) < 1e-8);
}
