#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eisenlab/errors.hpp"

namespace eisenlab {

inline constexpr double pi = 3.14159265358979323846264338327950288;

using cdouble = std::complex<double>;

namespace detail {

// B_{2k} / (2k (2k-1)), k = 1..15
inline constexpr std::array<double, 15> stirling_coeff = {
    8.33333333333333287074e-02,  -2.77777777777777788379e-03, 7.93650793650793650105e-04,
    -5.95238095238095291789e-04, 8.41750841750841713972e-04,  -1.91752691752691763367e-03,
    6.41025641025641003401e-03,  -2.95506535947712423162e-02, 1.79644372368830573805e-01,
    -1.39243221690590113226e+00, 1.34028640441683926099e+01,  -1.56848284626002026698e+02,
    2.19310333333333346673e+03,  -3.61087712537249899469e+04, 6.91472268851313041523e+05};

// B_{2k} / (2k)!, k = 1..14
inline constexpr std::array<double, 14> bernoulli_over_factorial = {
    8.33333333333333287074e-02,  -1.38888888888888894189e-03, 3.30687830687830710131e-05,
    -8.26719576719576754153e-07, 2.08767569878681001866e-08,  -5.28419013868749322002e-10,
    1.33825365306846788611e-11,  -3.38968029632258271696e-13, 8.58606205627784516939e-15,
    -2.17486869855806192266e-16, 5.50900282836022953019e-18,  -1.39544646858125223056e-19,
    3.53470703962946728227e-21,  -8.95351742703754627753e-23};

inline bool is_nonpositive_integer(cdouble z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Stirling series, valid for |w| >= 12 away from the negative real axis.
inline cdouble log_gamma_stirling(cdouble w) {
    const cdouble logw = std::log(w);
    cdouble r = (w - 0.5) * logw - w + 0.5 * std::log(2.0 * pi);
    const cdouble w2inv = 1.0 / (w * w);
    cdouble t = 1.0 / w;
    for (double c : stirling_coeff) {
        r += c * t;
        t *= w2inv;
    }
    return r;
}

} // namespace detail

// sin(pi z) with the integer part of Re z reduced exactly, so accuracy near
// real integers is limited by |z - m| rather than by |z|.
inline cdouble sin_pi(cdouble z) {
    const double m = std::round(z.real());
    const double f = z.real() - m;
    const double y = z.imag();
    cdouble s(std::sin(pi * f) * std::cosh(pi * y), std::cos(pi * f) * std::sinh(pi * y));
    if (std::fmod(std::fabs(m), 2.0) == 1.0) s = -s;
    return s;
}

// log Gamma, principal value up to multiples of 2 pi i (exact under exp).
inline cdouble log_gamma(cdouble z) {
    if (detail::is_nonpositive_integer(z))
        throw pole_error("gamma: pole at non-positive integer", z);
    if (z.real() < 0.5)
        return std::log(pi) - std::log(sin_pi(z)) - log_gamma(1.0 - z);
    cdouble shifted = z;
    cdouble log_shift = 0.0;
    while (std::abs(shifted) < 12.0) {
        log_shift += std::log(shifted);
        shifted += 1.0;
    }
    return detail::log_gamma_stirling(shifted) - log_shift;
}

inline cdouble gamma(cdouble z) { return std::exp(log_gamma(z)); }

namespace detail {

// Euler-Maclaurin tail-corrected partial sum; the truncated expression is
// analytic in s and keeps full accuracy down to moderately negative Re s.
inline cdouble zeta_euler_maclaurin(cdouble s) {
    const int n_terms = std::max(28, static_cast<int>(std::ceil(0.9 * std::abs(s.imag()))) + 8);
    cdouble sum = 0.0;
    for (int n = 1; n < n_terms; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double nd = static_cast<double>(n_terms);
    const cdouble npow = std::exp(-s * std::log(nd)); // N^{-s}
    sum += nd * npow / (s - 1.0);
    sum += 0.5 * npow;
    // sum_k B_{2k}/(2k)! (s)(s+1)...(s+2k-2) N^{-s-2k+1}
    cdouble rising = s;
    cdouble npart = npow / nd;
    for (std::size_t k = 0; k < bernoulli_over_factorial.size(); ++k) {
        sum += bernoulli_over_factorial[k] * rising * npart;
        rising *= (s + static_cast<double>(2 * k + 1)) * (s + static_cast<double>(2 * k + 2));
        npart /= nd * nd;
    }
    return sum;
}

} // namespace detail

// Riemann zeta on the strip |Re s| <= 20, |Im s| <= 50 (and a fair margin
// beyond). Euler-Maclaurin directly for Re s > -1/4, reflection otherwise.
inline cdouble zeta(cdouble s) {
    if (s == cdouble(1.0, 0.0)) throw pole_error("zeta: pole at s = 1", s);
    if (s.real() > -0.25) return detail::zeta_euler_maclaurin(s);
    const cdouble chi = std::pow(cdouble(2.0), s) * std::pow(cdouble(pi), s - 1.0) *
                        sin_pi(0.5 * s) * gamma(1.0 - s);
    return chi * detail::zeta_euler_maclaurin(1.0 - s);
}

// Completed zeta: pi^{-w/2} Gamma(w/2) zeta(w), symmetric under w -> 1-w.
// Poles at w = 0 and w = 1. At negative even integers the Gamma pole cancels
// the trivial zero; the value there is the limit
//   zeta*(-2m) = (2m)! zeta(2m+1) / (m! 4^m pi^m).
inline cdouble zeta_star(cdouble w) {
    if (w == cdouble(0.0, 0.0) || w == cdouble(1.0, 0.0))
        throw pole_error("zeta_star: pole", w);
    if (w.imag() == 0.0 && w.real() < 0.0 && w.real() == std::floor(w.real()) &&
        std::fmod(-w.real(), 2.0) == 0.0) {
        const double m = -w.real() / 2.0;
        const double log_val = std::lgamma(2.0 * m + 1.0) - std::lgamma(m + 1.0) -
                               m * std::log(4.0) - m * std::log(pi);
        return std::exp(log_val) * detail::zeta_euler_maclaurin(cdouble(2.0 * m + 1.0, 0.0));
    }
    return std::exp(-0.5 * w * std::log(pi) + log_gamma(0.5 * w)) * zeta(w);
}

// Positive divisors of m, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("divisors: m must be positive");
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            lo.push_back(d);
            if (d != m / d) hi.push_back(m / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

// sigma_s(n) = sum over positive divisors d of n of d^s.
inline cdouble sigma_divisor(cdouble s, std::uint64_t n) {
    cdouble sum = 0.0;
    for (std::uint64_t d : divisors(n))
        sum += std::exp(s * std::log(static_cast<double>(d)));
    return sum;
}

// Modified Bessel function of the second kind with complex order,
//   K_nu(x) = int_0^infty exp(-x cosh t) cosh(nu t) dt,
// by trapezoid sums on the even integrand with step halving. Serves as the
// oracle side of the Whittaker identity checks; accuracy well beyond the
// 1e-8 contract for |nu| <= 10, 0.05 <= x <= 50.
inline cdouble bessel_k(cdouble nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be positive");
    const auto f = [&](double t) -> cdouble {
        const double e = -x * std::cosh(t);
        const cdouble p = nu * t;
        cdouble r = 0.0;
        if (e + p.real() > -745.0) r += 0.5 * std::exp(e + p);
        if (e - p.real() > -745.0) r += 0.5 * std::exp(e - p);
        return r;
    };
    const double re_nu = std::abs(nu.real());
    cdouble prev = 0.0;
    for (int level = 0; level <= 10; ++level) {
        const double h = 0.5 / static_cast<double>(1 << level);
        cdouble acc = 0.5 * f(0.0);
        for (int k = 1;; ++k) {
            const double t = k * h;
            if (x * std::cosh(t) - re_nu * t > 745.0) break;
            acc += f(t);
            if (t > 3.0 && std::abs(acc) > 0.0 && std::abs(f(t)) < 1e-18 * std::abs(acc)) break;
        }
        const cdouble val = h * acc;
        if (level > 1 && std::abs(val - prev) <= 1e-13 * std::max(1e-300, std::abs(val)))
            return val;
        prev = val;
    }
    return prev;
}

} // namespace eisenlab
