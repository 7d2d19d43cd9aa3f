#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <eisenlab/hecke.hpp>
#include <eisenlab/langlands.hpp>

#include "oracle_utils.hpp"

using namespace eisenlab;

namespace {
double rel_err(cdouble got, cdouble want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

std::vector<cdouble> random_sum_zero(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cdouble> v(static_cast<std::size_t>(n));
    cdouble sum = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        v[static_cast<std::size_t>(i)] = {dist(rng), dist(rng)};
        sum += v[static_cast<std::size_t>(i)];
    }
    v[static_cast<std::size_t>(n - 1)] = -sum;
    return v;
}
} // namespace

TEST_CASE("rho vector", "[langlands]") {
    CHECK(rho_vector(2) == std::vector<rational>{rational(1, 2), rational(-1, 2)});
    CHECK(rho_vector(3) == std::vector<rational>{rational(1), rational(0), rational(-1)});
    for (int n = 2; n <= 12; ++n) {
        rational sum(0);
        for (const auto& r : rho_vector(n)) sum += r;
        CHECK(sum.is_zero());
    }
}

TEST_CASE("rho_P values and weight-zero identity", "[langlands]") {
    const parabolic_data p21({2, 1});
    CHECK(p21.rho_p(0) == rational(1, 2));
    CHECK(p21.rho_p(1) == rational(-1));

    const parabolic_data p22({2, 2});
    CHECK(p22.rho_p(0) == rational(1));
    CHECK(p22.rho_p(1) == rational(-1));

    // blocks of size one reproduce rho exactly
    for (int n = 2; n <= 7; ++n) {
        const parabolic_data borel(std::vector<int>(static_cast<std::size_t>(n), 1));
        CHECK(borel.rho_p_values() == rho_vector(n));
    }
}

TEST_CASE("parabolic data validates its partition", "[langlands]") {
    REQUIRE_THROWS_AS(parabolic_data({2, 0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(parabolic_data(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("power function special values", "[langlands]") {
    // all y = 1 gives 1
    std::mt19937 rng(5);
    const auto id = iwasawa_coordinates::identity(4);
    const langlands_parameter alpha4(random_sum_zero(rng, 4));
    CHECK(rel_err(power_function(id, alpha4), 1.0) < 1e-12);

    // n = 2: alpha = (a,-a) on y gives y^{a+1/2}; a = s - 1/2 gives y^s
    const double s = 3.0, y = 2.0;
    const iwasawa_coordinates c2(2, {0.0}, {y});
    const langlands_parameter a2({{s - 0.5, 0.0}, {0.5 - s, 0.0}});
    CHECK(rel_err(power_function(c2, a2), std::pow(y, s)) < 1e-12);

    // n = 3, alpha = (1,0,-1), y = (2,3): d = (6,2,1), value 6^2
    const iwasawa_coordinates c3(3, {0.0, 0.0, 0.0}, {2.0, 3.0});
    const langlands_parameter a3({{1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}});
    CHECK(rel_err(power_function(c3, a3), 36.0) < 1e-12);
    CHECK(rel_err(power_function_via_y(c3, a3), 36.0) < 1e-12);
}

TEST_CASE("both power-function product forms agree", "[langlands]") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> ydist(0.2, 3.0), xdist(-2.0, 2.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<double> xs(static_cast<std::size_t>(n * (n - 1) / 2));
        for (auto& x : xs) x = xdist(rng);
        std::vector<double> ys(static_cast<std::size_t>(n - 1));
        for (auto& y : ys) y = ydist(rng);
        const iwasawa_coordinates c(n, xs, ys);
        const langlands_parameter alpha(random_sum_zero(rng, n));
        CHECK(rel_err(power_function(c, alpha), power_function_via_y(c, alpha)) < 1e-10);
    }
}

TEST_CASE("psi_M linear form", "[langlands]") {
    const iwasawa_coordinates c(3, {0.25, 0.9, 0.5}, {1.0, 1.0});
    CHECK(psi_m(c, {0, 0}) == 0.0);
    CHECK(psi_m(c, {1, 1}) == Catch::Approx(0.75));
    // x_{1,3} does not enter
    const iwasawa_coordinates c2(3, {0.25, -4.7, 0.5}, {1.0, 1.0});
    CHECK(psi_m(c, {3, -2}) == psi_m(c2, {3, -2}));
    // companion character
    const auto ch = psi_m_character(c, {1, 1});
    CHECK(std::abs(ch - std::exp(cdouble(0.0, 2.0 * pi * 0.75))) < 1e-14);
}

TEST_CASE("parabolic alpha assembly", "[langlands]") {
    // blocks of size one: alpha_j = s_j - rho_j
    const parabolic_data borel({1, 1, 1});
    const spectral_point s_borel(borel, {{0.4, 0.0}, {-0.9, 0.0}, {0.5, 0.0}});
    const auto flat = parabolic_alpha(borel, s_borel);
    const auto rho = rho_vector(3);
    for (int j = 0; j < 3; ++j)
        CHECK(rel_err(flat[j], s_borel[j] - rho[static_cast<std::size_t>(j)].to_double()) < 1e-12);

    // (2,1): alpha = (s1 - 1, s1, s2 + 1)
    const parabolic_data p21({2, 1});
    const spectral_point s21(p21, {{0.7, 0.0}, {-1.4, 0.0}});
    const auto a = parabolic_alpha(p21, s21);
    CHECK(rel_err(a[0], cdouble(-0.3, 0.0)) < 1e-12);
    CHECK(rel_err(a[1], cdouble(0.7, 0.0)) < 1e-12);
    CHECK(rel_err(a[2], cdouble(-0.4, 0.0)) < 1e-12);

    // constraint violation
    REQUIRE_THROWS_AS(spectral_point(p21, {{0.7, 0.0}, {1.0, 0.0}}), std::domain_error);
}

TEST_CASE("parabolic character and scalar-block consistency", "[langlands]") {
    const parabolic_data p21({2, 1});
    const spectral_point s(p21, {{0.7, 0.0}, {-1.4, 0.0}});
    CHECK(rel_err(parabolic_character({1.0, 1.0}, s), 1.0) < 1e-14);
    CHECK(rel_err(parabolic_character({4.0, 1.0}, s), std::pow(4.0, 0.7)) < 1e-12);
    REQUIRE_THROWS_AS(parabolic_character({0.0, 1.0}, s), std::domain_error);

    // positive diagonal g: I(g, parabolic_alpha(parts, s)) = prod |det m_i|^{s_i}
    const double t1 = 1.7, t2 = 0.6, t3 = 2.3;
    square_matrix g(3);
    g(0, 0) = t1;
    g(1, 1) = t2;
    g(2, 2) = t3;
    const auto coords = iwasawa_decompose(g);
    for (const auto& parts_vec : {std::vector<int>{2, 1}, std::vector<int>{1, 1, 1}}) {
        const parabolic_data parts(parts_vec);
        std::vector<cdouble> svals;
        std::mt19937 rng(17);
        svals = random_sum_zero(rng, parts.rank());
        // rescale so that sum n_k s_k = 0 for the block sizes at hand
        cdouble weighted = 0.0;
        for (int k = 0; k < parts.rank(); ++k) weighted += static_cast<double>(parts.part(k)) * svals[static_cast<std::size_t>(k)];
        svals[0] -= weighted / static_cast<double>(parts.part(0));
        const spectral_point sp(parts, svals);
        std::vector<double> dets;
        int slot = 0;
        for (int k = 0; k < parts.rank(); ++k) {
            double d = 1.0;
            for (int i = 0; i < parts.part(k); ++i, ++slot) d *= (slot == 0 ? t1 : slot == 1 ? t2 : t3);
            dets.push_back(d);
        }
        CHECK(rel_err(power_function(coords, parabolic_alpha(parts, sp)),
                      parabolic_character(dets, sp)) < 1e-11);
    }
}

TEST_CASE("eisenstein parameter assembly", "[langlands]") {
    // all trivial blocks give (s_1, ..., s_r)
    const parabolic_data borel({1, 1, 1});
    const spectral_point s(borel, {{0.4, 0.1}, {-0.9, 0.2}, {0.5, -0.3}});
    const std::vector<cusp_form_handle> trivials(3, cusp_form_handle::trivial());
    const auto flat = eisenstein_parameters(borel, trivials, s);
    for (int j = 0; j < 3; ++j) CHECK(rel_err(flat[j], s[j]) < 1e-12);

    // n=3, (2,1), phi with (a,-a): (a+s1, -a+s1, s2)
    const parabolic_data p21({2, 1});
    const spectral_point s21(p21, {{0.7, 0.0}, {-1.4, 0.0}});
    const double a = 0.4;
    const auto phi = borel_backed_form(langlands_parameter({{a, 0.0}, {-a, 0.0}}));
    const auto ep = eisenstein_parameters(p21, {phi, cusp_form_handle::trivial()}, s21);
    CHECK(rel_err(ep[0], cdouble(a + 0.7, 0.0)) < 1e-12);
    CHECK(rel_err(ep[1], cdouble(-a + 0.7, 0.0)) < 1e-12);
    CHECK(rel_err(ep[2], cdouble(-1.4, 0.0)) < 1e-12);

    // degree mismatch
    REQUIRE_THROWS_AS(eisenstein_parameters(p21, {cusp_form_handle::trivial(), phi}, s21),
                      std::domain_error);
}

TEST_CASE("parameter assemblies keep the sum-zero invariant", "[langlands]") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 3);
        std::vector<int> parts_vec;
        for (int k = 0; k < r; ++k) parts_vec.push_back(1 + static_cast<int>(rng() % 3));
        const parabolic_data parts(parts_vec);
        std::vector<cdouble> svals(static_cast<std::size_t>(r));
        cdouble weighted = 0.0;
        for (int k = 1; k < r; ++k) {
            svals[static_cast<std::size_t>(k)] = {dist(rng), dist(rng)};
            weighted += static_cast<double>(parts.part(k)) * svals[static_cast<std::size_t>(k)];
        }
        svals[0] = -weighted / static_cast<double>(parts.part(0));
        const spectral_point s(parts, svals);

        std::vector<cusp_form_handle> forms;
        for (int k = 0; k < r; ++k) {
            if (parts.part(k) == 1) {
                forms.push_back(cusp_form_handle::trivial());
            } else {
                forms.push_back(borel_backed_form(langlands_parameter(random_sum_zero(rng, parts.part(k)))));
            }
        }
        // constructors throw if the invariant fails
        const auto pa = parabolic_alpha(parts, s);
        const auto ep = eisenstein_parameters(parts, forms, s);
        cdouble sum_pa = 0.0, sum_ep = 0.0;
        for (int i = 0; i < parts.n(); ++i) {
            sum_pa += pa[i];
            sum_ep += ep[i];
        }
        CHECK(std::abs(sum_pa) < 1e-11);
        CHECK(std::abs(sum_ep) < 1e-11);
    }
}

TEST_CASE("laplace eigenvalue", "[langlands]") {
    // n=2, alpha = (it, -it): 1/4 + t^2
    for (double t : {1.0, 13.7796, 0.123456}) {
        const langlands_parameter alpha({{0.0, t}, {0.0, -t}});
        CHECK(rel_err(laplace_eigenvalue(alpha), 0.25 + t * t) < 1e-12);
    }
    // n=3 trivial parameter: (27-3)/24 = 1
    CHECK(rel_err(laplace_eigenvalue(langlands_parameter({{0, 0}, {0, 0}, {0, 0}})), 1.0) < 1e-14);

    // permutation invariance and tempered lower bound
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto entries = random_sum_zero(rng, n);
        for (auto& e : entries) e = cdouble(0.0, e.imag() + e.real()); // purely imaginary
        cdouble sum = 0.0;
        for (int i = 0; i + 1 < n; ++i) sum += entries[static_cast<std::size_t>(i)];
        entries[static_cast<std::size_t>(n - 1)] = -sum;
        const langlands_parameter alpha(entries);
        const auto ev = laplace_eigenvalue(alpha);
        CHECK(std::abs(ev.imag()) < 1e-12);
        CHECK(ev.real() >= (std::pow(n, 3) - n) / 24.0 - 1e-12);

        auto shuffled = entries;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(rel_err(ev, laplace_eigenvalue(langlands_parameter(shuffled))) < 1e-13);
    }
}

TEST_CASE("laplace eigenvalue as exact rational algebra", "[langlands]") {
    // n = 2, alpha = (it, -it) with rational t^2: (n^3-n)/24 + t^2 exactly
    for (const rational t2 : {rational(3, 2), rational(7, 5), rational(1)}) {
        const rational got = rational(8 - 2, 24) - (rational(-2) * t2) / rational(2);
        CHECK(got == rational(1, 4) + t2);
    }
}

TEST_CASE("cusp form handle conventions", "[langlands]") {
    const auto one = cusp_form_handle::trivial();
    CHECK(one.degree() == 1);
    CHECK(one.parameter()[0] == cdouble(0.0));
    for (std::uint64_t m : {1ull, 5ull, 12ull}) CHECK(one.hecke(m) == cdouble(1.0));
    // degree-1 parameter must be zero
    REQUIRE_THROWS_AS(cusp_form_handle(1, langlands_parameter({{0.0, 0.0}}),
                                       [](std::uint64_t) { return cdouble(1.0); }, "x"),
                      std::invalid_argument);
}
