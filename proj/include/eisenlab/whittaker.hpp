#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "eisenlab/errors.hpp"
#include "eisenlab/iwasawa.hpp"
#include "eisenlab/langlands.hpp"
#include "eisenlab/quadrature.hpp"
#include "eisenlab/special_functions.hpp"

namespace eisenlab {

// W_{2,alpha}(y) = (sqrt(y)/2) int_0^infty exp(-pi y (u + 1/u)) u^alpha du/u.
// Double-exponential nodes by default; transform_kind::none falls back to
// adaptive panels on the effective support.
inline cdouble w2_integral(cdouble alpha, double y, const quadrature_spec& spec = {}) {
    if (!(y > 0.0)) throw std::domain_error("w2_integral: y must be positive");
    const auto integrand = [&](double u) -> cdouble {
        const cdouble e = (alpha - 1.0) * std::log(u) - pi * y * (u + 1.0 / u);
        if (e.real() < -745.0) return 0.0;
        return std::exp(e);
    };
    cdouble integral;
    if (spec.transform == quadrature_spec::transform_kind::none) {
        // endpoints where exp(-pi y (u + 1/u)) has fallen below everything
        const double cut = (745.0 + 20.0 * std::abs(alpha.real())) / (pi * y);
        const double lo = 1.0 / cut, hi = cut;
        const int panels = std::max(16, static_cast<int>(std::ceil(std::log2(hi / lo))) * 4);
        integral = detail::gk_adaptive(integrand, lo, hi, spec, panels).value;
    } else {
        integral = detail::de_positive_axis(integrand, spec);
    }
    return 0.5 * std::sqrt(y) * integral;
}

namespace detail {

// Algebraic part of the degree-2 Jacquet integrand at g = diag(y,1):
//   g(t) = y^c (y^2 + t^2)^{-c},  c = a + 1/2,
// evaluable at complex t. Along the rays t = T -+ i tau (T > 0) the base
// y^2 + t^2 stays in the right half plane, so the principal branch is safe.
struct jacquet_envelope {
    cdouble c;
    double y;

    cdouble operator()(cdouble t) const {
        return std::exp(c * (std::log(cdouble(y)) - std::log(y * y + t * t)));
    }
};

// int_T^infty g(t) e^{-i w t} dt, exactly, by rotating the contour onto the
// ray t = T - i sign(w) tau where the exponential decays:
//   -i sigma e^{-i w T} int_0^infty g(T - i sigma tau) e^{-|w| tau} dtau.
inline cdouble oscillatory_tail(const jacquet_envelope& env, double T, double w,
                                const quadrature_spec& spec) {
    const double sigma = w > 0.0 ? 1.0 : -1.0;
    const double aw = std::abs(w);
    const auto integrand = [&](double tau) -> cdouble {
        return env(cdouble(T, -sigma * tau)) * std::exp(-aw * tau);
    };
    quadrature_spec tail_spec = spec;
    tail_spec.abs_tol = std::min(spec.abs_tol, 1e-14);
    const double tau_max = 46.0 / aw;
    const cdouble integral = gk_adaptive(integrand, 0.0, tau_max, tail_spec, 8).value;
    return cdouble(0.0, -sigma) * std::exp(cdouble(0.0, -w * T)) * integral;
}

} // namespace detail

// Completed degree-2 Jacquet Whittaker function at g = diag(y, 1):
//   Gamma((1+2a)/2) / pi^{(1+2a)/2} * int_R I_2(w_long u(t) g, alpha)
//                                           e^{-2 pi i (sign) t} dt
// for alpha = (a, -a). Direct evaluation requires Re(2a) > 0 (absolute
// convergence). Adaptive Gauss-Kronrod panels on a window [-T, T] chosen by
// the integrand-magnitude rule (capped), plus an integration-by-parts tail.
inline cdouble jacquet_w2(const langlands_parameter& alpha, double y, int sign,
                          const quadrature_spec& spec = {}) {
    if (alpha.size() != 2) throw std::invalid_argument("jacquet_w2: parameter must have degree 2");
    if (sign != 1 && sign != -1) throw std::invalid_argument("jacquet_w2: sign must be +1 or -1");
    if (!(y > 0.0)) throw std::domain_error("jacquet_w2: y must be positive");
    const cdouble a = alpha[0];
    if (!(std::real(alpha[0] - alpha[1]) > 0.0))
        throw std::domain_error("jacquet_w2: outside the absolute-convergence region "
                                "Re(alpha_1 - alpha_2) > 0");

    const double w = 2.0 * pi * sign;
    const auto integrand = [&](double t) -> cdouble {
        square_matrix h(2); // w_long u(t) diag(y,1)
        h(0, 0) = 0.0;
        h(0, 1) = 1.0;
        h(1, 0) = y;
        h(1, 1) = t;
        const cdouble power = power_function(iwasawa_decompose(h), alpha);
        return power * std::exp(cdouble(0.0, -w * t));
    };

    // Truncate where the integrand magnitude falls below abs_tol/10, capped;
    // beyond the cap the remainder is taken along decaying complex rays.
    const double c_re = a.real() + 0.5;
    const double tol_mag = spec.abs_tol / 10.0;
    double t_cut = std::sqrt(std::max(0.0, y * std::pow(tol_mag, -1.0 / c_re) - y * y));
    t_cut = std::min(std::max({t_cut, 10.0, 3.0 * y}), 40.0);

    const int panels = static_cast<int>(std::ceil(2.0 * t_cut / 0.25));
    const auto main_part = detail::gk_adaptive(integrand, -t_cut, t_cut, spec, panels);

    // g even: int_{-inf}^{-T} g e^{-iwt} dt = int_T^inf g e^{+iwt} dt
    const detail::jacquet_envelope env{cdouble(c_re, a.imag()), y};
    const cdouble tail_pos = detail::oscillatory_tail(env, t_cut, w, spec);
    const cdouble tail_neg = detail::oscillatory_tail(env, t_cut, -w, spec);
    const cdouble integral = main_part.value + tail_pos + tail_neg;

    const cdouble completion =
        std::exp(log_gamma(0.5 * (1.0 + 2.0 * a)) - 0.5 * (1.0 + 2.0 * a) * std::log(pi));
    return completion * integral;
}

} // namespace eisenlab
