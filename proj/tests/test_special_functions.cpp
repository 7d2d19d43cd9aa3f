#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include <eisenlab/special_functions.hpp>

#include "oracle_utils.hpp"

using namespace eisenlab;

namespace {
double rel_err(cdouble got, cdouble want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
} // namespace

TEST_CASE("gamma at classical points", "[special]") {
    CHECK(rel_err(gamma({1.0, 0.0}), 1.0) < 1e-13);
    CHECK(rel_err(gamma({0.5, 0.0}), std::sqrt(pi)) < 1e-13);
    CHECK(rel_err(gamma({5.0, 0.0}), 24.0) < 1e-13);
}

TEST_CASE("gamma against the Euler-integral oracle", "[special]") {
    const cdouble points[] = {{3.7, 2.1}, {0.8, -4.0}, {12.5, 7.0}, {2.0, 25.0}};
    for (const auto z : points) {
        const auto want = oracle::gamma_euler_integral(z);
        CHECK(rel_err(gamma(z), want) < 1e-12);
    }
}

TEST_CASE("gamma recurrence on the validated region", "[special]") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> re(-45.0, 45.0), im(-45.0, 45.0);
    int checked = 0;
    while (checked < 300) {
        const cdouble z(re(rng), im(rng));
        if (z.imag() == 0.0 && z.real() <= 0.0) continue;
        if (std::abs(z.real() - std::round(z.real())) < 1e-3 && z.real() < 0.5 &&
            std::abs(z.imag()) < 1e-3)
            continue;
        CHECK(rel_err(gamma(z + 1.0), z * gamma(z)) < 1e-11);
        ++checked;
    }
}

TEST_CASE("gamma poles carry their location", "[special]") {
    for (double p : {0.0, -1.0, -2.0, -7.0}) {
        try {
            (void)gamma({p, 0.0});
            FAIL("expected pole_error at " << p);
        } catch (const pole_error& e) {
            CHECK(e.location() == cdouble(p, 0.0));
        }
    }
}

TEST_CASE("zeta at anchor points", "[special]") {
    CHECK(rel_err(zeta({2.0, 0.0}), pi * pi / 6.0) < 1e-12);
    CHECK(rel_err(zeta({0.0, 0.0}), -0.5) < 1e-10);
    // direct series bracket at s = 3
    const auto bracket = oracle::zeta_direct_series(3.0, 200000);
    const double z3 = zeta({3.0, 0.0}).real();
    CHECK(z3 >= bracket.lo - 1e-12);
    CHECK(z3 <= bracket.hi + 1e-12);
    // s = 2 against the direct series as well
    const auto bracket2 = oracle::zeta_direct_series(2.0, 200000);
    const double z2 = zeta({2.0, 0.0}).real();
    CHECK(z2 >= bracket2.lo - 1e-12);
    CHECK(z2 <= bracket2.hi + 1e-12);
}

TEST_CASE("zeta pole at s = 1", "[special]") {
    REQUIRE_THROWS_AS(zeta({1.0, 0.0}), pole_error);
}

TEST_CASE("zeta_star values and symmetry point", "[special]") {
    CHECK(rel_err(zeta_star({2.0, 0.0}), pi / 6.0) < 1e-12);
    // w = 1/2 is the fixed point of w -> 1-w
    const auto half = zeta_star({0.5, 0.0});
    CHECK(std::isfinite(half.real()));
    CHECK(rel_err(half, zeta_star({0.5, 0.0})) == 0.0);
    // complex reflection
    CHECK(rel_err(zeta_star({3.0, 4.0}), zeta_star({-2.0, -4.0})) < 1e-10);
}

TEST_CASE("zeta_star functional equation, 500 random points", "[special]") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> re(-4.5, 5.5), im(-30.0, 30.0);
    int checked = 0;
    while (checked < 500) {
        const cdouble w(re(rng), im(rng));
        if (std::abs(w) < 0.15 || std::abs(w - 1.0) < 0.15) continue;
        CHECK(rel_err(zeta_star(w), zeta_star(1.0 - w)) < 1e-10);
        ++checked;
    }
}

TEST_CASE("zeta_star at negative even integers via the limit formula", "[special]") {
    // the Gamma pole cancels the trivial zero; value equals zeta*(1-w)
    CHECK(rel_err(zeta_star({-2.0, 0.0}), zeta_star({3.0, 0.0})) < 1e-10);
    CHECK(rel_err(zeta_star({-4.0, 0.0}), zeta_star({5.0, 0.0})) < 1e-10);
    CHECK(rel_err(zeta_star({-10.0, 0.0}), zeta_star({11.0, 0.0})) < 1e-10);
}

TEST_CASE("zeta_star poles at 0 and 1", "[special]") {
    REQUIRE_THROWS_AS(zeta_star({0.0, 0.0}), pole_error);
    REQUIRE_THROWS_AS(zeta_star({1.0, 0.0}), pole_error);
}

TEST_CASE("divisor sums", "[special]") {
    CHECK(sigma_divisor({0.0, 0.0}, 6).real() == Catch::Approx(4.0).epsilon(1e-14));
    CHECK(sigma_divisor({1.0, 0.0}, 6).real() == Catch::Approx(12.0).epsilon(1e-14));
    CHECK(sigma_divisor({-5.0, 0.0}, 2).real() == Catch::Approx(1.03125).epsilon(1e-14));
}

TEST_CASE("divisor sum multiplicativity and reflection", "[special]") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t m = 2 + rng() % 60, k = 2 + rng() % 60;
        if (std::gcd(m, k) != 1) continue;
        const cdouble s(re(rng), im(rng));
        CHECK(rel_err(sigma_divisor(s, m * k), sigma_divisor(s, m) * sigma_divisor(s, k)) < 1e-12);
        CHECK(rel_err(sigma_divisor(-s, m),
                      std::exp(-s * std::log(static_cast<double>(m))) * sigma_divisor(s, m)) < 1e-12);
    }
}

TEST_CASE("bessel_k closed form and oracle", "[special]") {
    // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    CHECK(rel_err(bessel_k({0.5, 0.0}, 1.0), std::sqrt(pi / 2.0) * std::exp(-1.0)) < 1e-10);
    CHECK(rel_err(bessel_k({0.5, 0.0}, 7.0), std::sqrt(pi / 14.0) * std::exp(-7.0)) < 1e-10);
    // independent Simpson oracle of the defining integral
    CHECK(rel_err(bessel_k({0.0, 0.0}, 2.0), oracle::bessel_k_simpson({0.0, 0.0}, 2.0)) < 1e-10);
    CHECK(rel_err(bessel_k({3.5, 1.5}, 0.8), oracle::bessel_k_simpson({3.5, 1.5}, 0.8)) < 1e-9);
    CHECK(rel_err(bessel_k({10.0, 0.0}, 0.05), oracle::bessel_k_simpson({10.0, 0.0}, 0.05)) < 1e-8);
}

TEST_CASE("bessel_k order symmetry and imaginary order", "[special]") {
    const cdouble orders[] = {{1.3, 0.0}, {0.0, 2.0}, {2.5, -1.0}};
    for (const auto nu : orders)
        for (double x : {0.05, 0.7, 3.0, 50.0})
            CHECK(rel_err(bessel_k(nu, x), bessel_k(-nu, x)) < 1e-13);
    // purely imaginary order gives a real value
    const auto v = bessel_k({0.0, 2.0}, 1.0);
    CHECK(std::abs(v.imag()) < 1e-12 * std::abs(v.real()));
    CHECK(rel_err(v, oracle::bessel_k_simpson({0.0, 2.0}, 1.0)) < 1e-9);
}

TEST_CASE("bessel_k domain error", "[special]") {
    REQUIRE_THROWS_AS(bessel_k({0.0, 0.0}, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(bessel_k({0.0, 0.0}, -2.0), std::domain_error);
}
