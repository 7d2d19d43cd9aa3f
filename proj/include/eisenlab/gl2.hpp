#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eisenlab/errors.hpp"
#include "eisenlab/hecke.hpp"
#include "eisenlab/quadrature.hpp"
#include "eisenlab/special_functions.hpp"
#include "eisenlab/whittaker.hpp"

namespace eisenlab {

struct upper_half_point {
    double x = 0.0;
    double y = 1.0;

    upper_half_point(double x_, double y_) : x(x_), y(y_) {
        if (!(y > 0.0)) throw std::domain_error("upper_half_point: y must be positive");
    }
};

namespace detail {

// Deterministic pairwise reduction; bit-stable for a fixed term order.
inline cdouble pairwise_sum(const std::vector<cdouble>& terms, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        cdouble s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += terms[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

inline cdouble pairwise_sum(const std::vector<cdouble>& terms) {
    return terms.empty() ? cdouble(0.0) : pairwise_sum(terms, 0, terms.size());
}

// Coprime bottom rows (c,d) with 1 <= c <= cutoff, |d| <= cutoff.
// Folding the sign (c,d) ~ (-c,-d) absorbs the 1/2 of the defining series;
// the remaining c = 0 class is the single identity coset (0,1).
inline const std::vector<std::pair<int, int>>& coprime_pairs(int cutoff) {
    static std::mutex mu;
    static std::unordered_map<int, std::vector<std::pair<int, int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(cutoff);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<int, int>> pairs;
    for (int c = 1; c <= cutoff; ++c)
        for (int d = -cutoff; d <= cutoff; ++d)
            if (std::gcd(c, d < 0 ? -d : d) == 1) pairs.emplace_back(c, d);
    return cache.emplace(cutoff, std::move(pairs)).first->second;
}

} // namespace detail

// Heuristic bound for the lattice tail sum_{max(|c|,|d|) > N}; decays like
// N^{2 - 2 Re s}.
inline double eisenstein_tail_bound(cdouble s, double y, int cutoff) {
    const double sigma = s.real();
    const double r_eff = 0.5 * cutoff * std::min(1.0, y);
    return 8.0 * pi * std::pow(y, sigma) / y * std::pow(r_eff, 2.0 - 2.0 * sigma) /
           (2.0 * sigma - 2.0);
}

// Lattice truncation of the degree-2 Eisenstein series,
//   y^s + sum_{c >= 1} sum_{gcd(c,d)=1, |d| <= N} y^s / |c z + d|^{2s}.
inline cdouble eisenstein_bruteforce(const upper_half_point& z, cdouble s, int cutoff) {
    if (!(s.real() > 1.0))
        throw std::domain_error("eisenstein_bruteforce: requires Re(s) > 1");
    if (cutoff < 1) throw std::invalid_argument("eisenstein_bruteforce: cutoff must be >= 1");
    const auto& pairs = detail::coprime_pairs(cutoff);
    std::vector<cdouble> terms;
    terms.reserve(pairs.size() + 1);
    const bool real_s = s.imag() == 0.0;
    const cdouble yterm = std::exp(s * std::log(z.y));
    terms.push_back(yterm);
    for (const auto& [c, d] : pairs) {
        const double re = c * z.x + d;
        const double norm2 = re * re + static_cast<double>(c) * c * z.y * z.y;
        if (real_s)
            terms.push_back(yterm * std::pow(norm2, -s.real()));
        else
            terms.push_back(yterm * std::exp(-s * std::log(norm2)));
    }
    return detail::pairwise_sum(terms);
}

// Fourier coefficient int_0^1 E((x,y), s) e^{-2 pi i n x} dx by uniform
// periodic sampling; the integrand is analytic in x, so the trapezoid rule
// converges spectrally. Sample count follows the 16-per-coefficient rule.
inline cdouble fourier_extract(cdouble s, double y, int n, int cutoff,
                               const quadrature_spec& spec = {}) {
    spec.validate();
    const int m_samples = std::max(32, 16 * (std::abs(n) + 1));
    std::vector<cdouble> terms(static_cast<std::size_t>(m_samples));
    for (int m = 0; m < m_samples; ++m) {
        const double x = static_cast<double>(m) / m_samples;
        const cdouble value = eisenstein_bruteforce({x, y}, s, cutoff);
        const double phase = -2.0 * pi * n * x;
        terms[static_cast<std::size_t>(m)] = value * cdouble(std::cos(phase), std::sin(phase));
    }
    return detail::pairwise_sum(terms) / static_cast<double>(m_samples);
}

// phi(s) = sqrt(pi) Gamma(s - 1/2) zeta(2s - 1) / (Gamma(s) zeta(2s)).
inline cdouble phi_scattering(cdouble s) {
    return std::sqrt(pi) * std::exp(log_gamma(s - 0.5) - log_gamma(s)) * zeta(2.0 * s - 1.0) /
           zeta(2.0 * s);
}

// The n-th coefficient of the Fourier expansion (phase excluded):
//   2 / (pi^{-s} Gamma(s) zeta(2s)) sigma_{1-2s}(n) |n|^{s-1/2} W_{2,s-1/2}(|n| y).
inline cdouble formula_term(int n, cdouble s, double y, const quadrature_spec& spec = {}) {
    if (n == 0) throw std::invalid_argument("formula_term: n must be nonzero");
    if (!(s.real() > 1.0)) throw std::domain_error("formula_term: requires Re(s) > 1");
    const std::uint64_t an = static_cast<std::uint64_t>(n < 0 ? -static_cast<std::int64_t>(n) : n);
    const cdouble prefactor =
        2.0 / (std::exp(-s * std::log(pi) + log_gamma(s)) * zeta(2.0 * s));
    const cdouble hecke_part = sigma_divisor(1.0 - 2.0 * s, an) *
                               std::exp((s - 0.5) * std::log(static_cast<double>(an)));
    return prefactor * hecke_part * w2_integral(s - 0.5, an * y, spec);
}

struct term_record {
    int n = 0;
    cdouble brute;
    cdouble formula;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

struct verification_report {
    cdouble s;
    double y = 1.0;
    int cutoff = 0;
    int sample_count = 0;
    double tolerance = 0.0;
    double tail_bound = 0.0;
    std::vector<term_record> terms;
    bool pass = false;
};

// Compares the sampled Fourier coefficients of the lattice sum against the
// closed-form expansion: constant term y^s + phi(s) y^{1-s}, then
// formula_term for 1 <= n <= n_max. Failures are recorded, not thrown.
inline verification_report run_verification(cdouble s, double y, int n_max, int cutoff,
                                            const quadrature_spec& spec = {}, double tol = 1e-4) {
    if (!(s.real() > 1.0)) throw std::domain_error("run_verification: requires Re(s) > 1");
    if (n_max < 0) throw std::invalid_argument("run_verification: n_max must be >= 0");
    verification_report rep;
    rep.s = s;
    rep.y = y;
    rep.cutoff = cutoff;
    rep.tolerance = tol;
    rep.tail_bound = eisenstein_tail_bound(s, y, cutoff);

    const int m_samples = std::max(32, 16 * std::max(1, n_max));
    rep.sample_count = m_samples;
    std::vector<cdouble> samples(static_cast<std::size_t>(m_samples));
    for (int m = 0; m < m_samples; ++m)
        samples[static_cast<std::size_t>(m)] =
            eisenstein_bruteforce({static_cast<double>(m) / m_samples, y}, s, cutoff);

    const auto coefficient = [&](int n) -> cdouble {
        std::vector<cdouble> terms(static_cast<std::size_t>(m_samples));
        for (int m = 0; m < m_samples; ++m) {
            const double phase = -2.0 * pi * n * static_cast<double>(m) / m_samples;
            terms[static_cast<std::size_t>(m)] =
                samples[static_cast<std::size_t>(m)] * cdouble(std::cos(phase), std::sin(phase));
        }
        return detail::pairwise_sum(terms) / static_cast<double>(m_samples);
    };

    bool all_pass = true;
    for (int n = 0; n <= n_max; ++n) {
        term_record rec;
        rec.n = n;
        rec.brute = coefficient(n);
        rec.formula = n == 0 ? std::exp(s * std::log(y)) + phi_scattering(s) * std::exp((1.0 - s) * std::log(y))
                             : formula_term(n, s, y, spec);
        rec.abs_err = std::abs(rec.brute - rec.formula);
        rec.rel_err = rec.abs_err / std::max(std::abs(rec.formula), 1e-300);
        rec.pass = rec.rel_err <= tol;
        all_pass = all_pass && rec.pass;
        rep.terms.push_back(rec);
    }
    rep.pass = all_pass;
    return rep;
}

inline nlohmann::json to_json(const verification_report& rep) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : rep.terms) {
        terms.push_back({{"n", t.n},
                         {"brute", {t.brute.real(), t.brute.imag()}},
                         {"formula", {t.formula.real(), t.formula.imag()}},
                         {"abs_err", t.abs_err},
                         {"rel_err", t.rel_err},
                         {"pass", t.pass}});
    }
    return {{"schema", "eisenstein-lab/1"},
            {"kind", "gl2-verification"},
            {"s", {rep.s.real(), rep.s.imag()}},
            {"y", rep.y},
            {"cutoff", rep.cutoff},
            {"samples", rep.sample_count},
            {"tolerance", rep.tolerance},
            {"tail_bound", rep.tail_bound},
            {"terms", terms},
            {"pass", rep.pass}};
}

inline std::string format_table(const verification_report& rep) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "GL(2) expansion check: s = %.15g%+.15gi, y = %.15g, N = %d\n",
                  rep.s.real(), rep.s.imag(), rep.y, rep.cutoff);
    os << line;
    std::snprintf(line, sizeof line, "%4s  %24s  %24s  %12s  %s\n", "n", "lattice", "formula",
                  "rel err", "status");
    os << line;
    for (const auto& t : rep.terms) {
        std::snprintf(line, sizeof line, "%4d  %24.15g  %24.15g  %12.3e  %s\n", t.n,
                      t.brute.real(), t.formula.real(), t.rel_err, t.pass ? "pass" : "FAIL");
        os << line;
    }
    os << (rep.pass ? "all terms pass" : "FAILURES present") << " (tolerance "
       << rep.tolerance << ")\n";
    return os.str();
}

} // namespace eisenlab
