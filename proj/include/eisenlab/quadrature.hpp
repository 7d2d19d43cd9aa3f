#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

#include "eisenlab/errors.hpp"

namespace eisenlab {

struct quadrature_spec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    enum class transform_kind { none, double_exponential };
    transform_kind transform = transform_kind::double_exponential;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::invalid_argument("quadrature_spec: tolerances must be positive");
        if (max_subdivisions < 1)
            throw std::invalid_argument("quadrature_spec: max_subdivisions must be >= 1");
    }
};

namespace detail {

// exp-sinh nodes for (0, infinity): u = exp((pi/2) sinh(kh)).
// Level l halves the step; converges like exp(-c/h) for integrands decaying
// at both endpoints.
template <typename F>
std::complex<double> de_positive_axis(F&& f, const quadrature_spec& spec) {
    spec.validate();
    const int max_levels = std::min(spec.max_subdivisions, 12);
    const double half_pi = 1.5707963267948966;
    std::complex<double> prev = 0.0;
    double last_delta = 0.0;
    for (int level = 0;; ++level) {
        const double h = 1.0 / static_cast<double>(1 << level);
        std::complex<double> acc = 0.0;
        for (int dir = 0; dir < 2; ++dir) {
            int misses = 0;
            for (int k = dir == 0 ? 0 : -1;; dir == 0 ? ++k : --k) {
                const double kh = k * h;
                if (std::abs(kh) > 6.0) break;
                const double sh = std::sinh(kh);
                const double u = std::exp(half_pi * sh);
                if (u == 0.0 || !std::isfinite(u)) break;
                const std::complex<double> term =
                    f(u) * (u * half_pi * std::cosh(kh) * h);
                acc += term;
                if (std::abs(term) < 1e-300 ||
                    (std::abs(acc) > 0.0 && std::abs(term) < 1e-17 * std::abs(acc))) {
                    if (++misses > 2) break;
                } else {
                    misses = 0;
                }
            }
        }
        if (level > 0) {
            last_delta = std::abs(acc - prev);
            if (level > 1 && last_delta <= std::max(spec.abs_tol, spec.rel_tol * std::abs(acc)))
                return acc;
        }
        prev = acc;
        if (level >= max_levels)
            throw convergence_error("double-exponential quadrature did not converge", last_delta);
    }
}

// Gauss-Kronrod 7-15 nodes and weights (positive half; node 0 included once).
inline constexpr std::array<double, 8> gk15_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk15_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> g7_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15_panel(F&& f, double a, double b, std::complex<double>& value, double& err) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    std::complex<double> kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = hw * gk15_nodes[i];
        std::complex<double> fv = f(c + dx);
        if (i != 7) fv += f(c - dx);
        kronrod += gk15_weights[i] * fv;
        if (i % 2 == 1) gauss += g7_weights[i / 2] * fv;
    }
    value = kronrod * hw;
    err = std::abs(kronrod - gauss) * hw;
}

struct gk_result {
    std::complex<double> value;
    double error;
};

// Globally adaptive bisection on [a, b]; deterministic for fixed inputs.
template <typename F>
gk_result gk_adaptive(F&& f, double a, double b, const quadrature_spec& spec,
                      int initial_panels = 1) {
    spec.validate();
    if (initial_panels < 1) initial_panels = 1;
    struct seg {
        double a, b, err;
        std::complex<double> val;
    };
    std::multimap<double, seg> by_error; // ascending; worst panel at the end
    std::complex<double> total = 0.0;
    double total_err = 0.0;
    const auto push = [&](double lo, double hi) {
        seg s{lo, hi, 0.0, 0.0};
        gk15_panel(f, lo, hi, s.val, s.err);
        total += s.val;
        total_err += s.err;
        by_error.emplace(s.err, s);
    };
    const double w = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i)
        push(a + i * w, i + 1 == initial_panels ? b : a + (i + 1) * w);

    int splits = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (splits >= spec.max_subdivisions)
            throw convergence_error("adaptive Gauss-Kronrod did not converge", total_err);
        auto worst = std::prev(by_error.end());
        const seg s = worst->second;
        by_error.erase(worst);
        total -= s.val;
        total_err -= s.err;
        const double mid = 0.5 * (s.a + s.b);
        push(s.a, mid);
        push(mid, s.b);
        ++splits;
    }
    return {total, total_err};
}

} // namespace detail

} // namespace eisenlab
