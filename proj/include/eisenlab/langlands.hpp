#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eisenlab/errors.hpp"
#include "eisenlab/iwasawa.hpp"
#include "eisenlab/rational.hpp"
#include "eisenlab/special_functions.hpp"

namespace eisenlab {

// rho_i = (n+1)/2 - i for i = 1..n; sums to zero.
inline std::vector<rational> rho_vector(int n) {
    if (n < 2) throw std::invalid_argument("rho_vector: n must be >= 2");
    std::vector<rational> r;
    r.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) r.push_back(rational(n + 1, 2) - rational(i));
    return r;
}

// Vector of n complex numbers summing to zero. Degree-1 parameters are the
// zero scalar (the convention for constant-function blocks).
class langlands_parameter {
public:
    explicit langlands_parameter(std::vector<std::complex<double>> entries)
        : a_(std::move(entries)) {
        if (a_.empty()) throw std::invalid_argument("langlands_parameter: empty");
        std::complex<double> sum = 0.0;
        double scale = 1.0;
        for (auto v : a_) {
            sum += v;
            scale = std::max(scale, std::abs(v));
        }
        if (std::abs(sum) > 1e-12 * scale)
            throw std::domain_error("langlands_parameter: entries must sum to zero (|sum| = " +
                                    std::to_string(std::abs(sum)) + ")");
    }

    int size() const noexcept { return static_cast<int>(a_.size()); }
    std::complex<double> operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
    const std::vector<std::complex<double>>& entries() const noexcept { return a_; }

private:
    std::vector<std::complex<double>> a_;
};

// Partition n = n_1 + ... + n_r with the derived rho_P values
//   rho_P(1) = (n - n_1)/2,   rho_P(j) = (n - n_j)/2 - n_1 - ... - n_{j-1},
// and cumulative block offsets. sum n_j rho_P(j) = 0 exactly.
class parabolic_data {
public:
    explicit parabolic_data(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("parabolic_data: empty partition");
        n_ = 0;
        offsets_.reserve(parts_.size() + 1);
        offsets_.push_back(0);
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("parabolic_data: parts must be positive");
            n_ += p;
            offsets_.push_back(n_);
        }
        rho_p_.reserve(parts_.size());
        int before = 0;
        rational weighted(0);
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            rational rp = rational(n_ - parts_[j], 2) - rational(before);
            rho_p_.push_back(rp);
            weighted += rational(parts_[j]) * rp;
            before += parts_[j];
        }
        if (!weighted.is_zero())
            throw std::logic_error("parabolic_data: rho_P weight sum must vanish");
    }

    int n() const noexcept { return n_; }
    int rank() const noexcept { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    int part(int k) const { return parts_[static_cast<std::size_t>(k)]; }
    rational rho_p(int k) const { return rho_p_[static_cast<std::size_t>(k)]; }
    const std::vector<rational>& rho_p_values() const noexcept { return rho_p_; }
    // first global slot of block k; block_offset(rank()) == n
    int block_offset(int k) const { return offsets_[static_cast<std::size_t>(k)]; }

private:
    int n_ = 0;
    std::vector<int> parts_;
    std::vector<rational> rho_p_;
    std::vector<int> offsets_;
};

// Spectral point (s_1, ..., s_r) attached to a partition; sum n_i s_i = 0.
class spectral_point {
public:
    spectral_point(const parabolic_data& parts, std::vector<std::complex<double>> s)
        : s_(std::move(s)) {
        if (static_cast<int>(s_.size()) != parts.rank())
            throw std::invalid_argument("spectral_point: rank mismatch");
        std::complex<double> sum = 0.0;
        double scale = 1.0;
        for (int k = 0; k < parts.rank(); ++k) {
            sum += static_cast<double>(parts.part(k)) * s_[static_cast<std::size_t>(k)];
            scale = std::max(scale, std::abs(s_[static_cast<std::size_t>(k)]));
        }
        if (std::abs(sum) > 1e-12 * scale * parts.n())
            throw std::domain_error("spectral_point: sum n_i s_i must vanish (|sum| = " +
                                    std::to_string(std::abs(sum)) + ")");
    }

    int rank() const noexcept { return static_cast<int>(s_.size()); }
    std::complex<double> operator[](int k) const { return s_[static_cast<std::size_t>(k)]; }
    const std::vector<std::complex<double>>& entries() const noexcept { return s_; }

private:
    std::vector<std::complex<double>> s_;
};

// A cusp form enters only as data: its degree, its Langlands parameter and a
// Hecke-eigenvalue oracle. Degree 1 is the constant function (parameter 0,
// eigenvalues identically 1).
class cusp_form_handle {
public:
    using hecke_oracle = std::function<std::complex<double>(std::uint64_t)>;

    cusp_form_handle(int degree, langlands_parameter parameter, hecke_oracle oracle,
                     std::string label)
        : degree_(degree), parameter_(std::move(parameter)), hecke_(std::move(oracle)),
          label_(std::move(label)) {
        if (degree_ < 1) throw std::invalid_argument("cusp_form_handle: degree must be >= 1");
        if (parameter_.size() != degree_)
            throw std::invalid_argument("cusp_form_handle: parameter size must equal degree");
        if (degree_ == 1 && std::abs(parameter_[0]) != 0.0)
            throw std::invalid_argument("cusp_form_handle: degree-1 parameter must be 0");
        if (!hecke_) throw std::invalid_argument("cusp_form_handle: missing Hecke oracle");
    }

    static cusp_form_handle trivial(std::string label = "1") {
        return cusp_form_handle(1, langlands_parameter({0.0}),
                                [](std::uint64_t) { return std::complex<double>(1.0); },
                                std::move(label));
    }

    int degree() const noexcept { return degree_; }
    const langlands_parameter& parameter() const noexcept { return parameter_; }
    std::complex<double> hecke(std::uint64_t m) const { return hecke_(m); }
    const std::string& label() const noexcept { return label_; }

private:
    int degree_;
    langlands_parameter parameter_;
    hecke_oracle hecke_;
    std::string label_;
};

// Power function: prod_i d_i^{alpha_i + rho_i} over the Iwasawa diagonal.
inline std::complex<double> power_function(const iwasawa_coordinates& coords,
                                           const langlands_parameter& alpha) {
    const int n = coords.dim();
    if (alpha.size() != n) throw std::invalid_argument("power_function: dimension mismatch");
    const auto rho = rho_vector(n);
    std::complex<double> log_val = 0.0;
    for (int i = 0; i < n; ++i) {
        const double di = coords.d(i);
        log_val += (alpha[i] + rho[static_cast<std::size_t>(i)].to_double()) * std::log(di);
    }
    return std::exp(log_val);
}

// Same value through the y-coordinate exponents
//   prod_i y_i^{alpha_1+...+alpha_{n-i} + rho_1+...+rho_{n-i}};
// kept separate so the two product forms can be checked against each other.
inline std::complex<double> power_function_via_y(const iwasawa_coordinates& coords,
                                                 const langlands_parameter& alpha) {
    const int n = coords.dim();
    if (alpha.size() != n) throw std::invalid_argument("power_function: dimension mismatch");
    const auto rho = rho_vector(n);
    std::complex<double> log_val = 0.0;
    for (int i = 1; i <= n - 1; ++i) {
        std::complex<double> expo = 0.0;
        for (int j = 0; j < n - i; ++j) expo += alpha[j] + rho[static_cast<std::size_t>(j)].to_double();
        log_val += expo * std::log(coords.y(i - 1));
    }
    return std::exp(log_val);
}

// psi_M(x) = m_1 x_{1,2} + m_2 x_{2,3} + ... + m_{n-1} x_{n-1,n}.
inline double psi_m(const iwasawa_coordinates& coords, const std::vector<std::int64_t>& m) {
    const int n = coords.dim();
    if (m.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("psi_m: character vector must have length n-1");
    double v = 0.0;
    for (int i = 0; i < n - 1; ++i) v += static_cast<double>(m[static_cast<std::size_t>(i)]) * coords.x(i, i + 1);
    return v;
}

// e^{2 pi i psi_M(x)}
inline std::complex<double> psi_m_character(const iwasawa_coordinates& coords,
                                            const std::vector<std::int64_t>& m) {
    const double v = 2.0 * pi * psi_m(coords, m);
    return {std::cos(v), std::sin(v)};
}

// The Langlands parameter of the normalized inducing character: block k
// contributes s_k - rho_P(k) + (2t - 1 - n_k)/2 for t = 1..n_k. Entries sum
// to zero whenever sum n_k s_k = 0.
inline langlands_parameter parabolic_alpha(const parabolic_data& parts, const spectral_point& s) {
    if (s.rank() != parts.rank()) throw std::invalid_argument("parabolic_alpha: rank mismatch");
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(parts.n()));
    for (int k = 0; k < parts.rank(); ++k) {
        const int nk = parts.part(k);
        for (int t = 1; t <= nk; ++t) {
            const rational shift = rational(2 * t - 1 - nk, 2) - parts.rho_p(k);
            out.push_back(s[k] + shift.to_double());
        }
    }
    return langlands_parameter(std::move(out));
}

// prod_i |det m_i|^{s_i} over the Levi blocks.
inline std::complex<double> parabolic_character(const std::vector<double>& block_dets,
                                                const spectral_point& s) {
    if (block_dets.size() != static_cast<std::size_t>(s.rank()))
        throw std::invalid_argument("parabolic_character: rank mismatch");
    std::complex<double> log_val = 0.0;
    for (int k = 0; k < s.rank(); ++k) {
        const double d = std::abs(block_dets[static_cast<std::size_t>(k)]);
        if (d == 0.0) throw std::domain_error("parabolic_character: zero block determinant");
        log_val += s[k] * std::log(d);
    }
    return std::exp(log_val);
}

// Langlands parameter of the Eisenstein series attached to (parts, forms, s):
// the concatenation over blocks of (alpha_{k,1}+s_k, ..., alpha_{k,n_k}+s_k).
inline langlands_parameter eisenstein_parameters(const parabolic_data& parts,
                                                 const std::vector<cusp_form_handle>& forms,
                                                 const spectral_point& s) {
    if (static_cast<int>(forms.size()) != parts.rank() || s.rank() != parts.rank())
        throw std::invalid_argument("eisenstein_parameters: rank mismatch");
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(parts.n()));
    for (int k = 0; k < parts.rank(); ++k) {
        const auto& form = forms[static_cast<std::size_t>(k)];
        if (form.degree() != parts.part(k))
            throw std::domain_error("eisenstein_parameters: form degree does not match block " +
                                    std::to_string(k + 1));
        for (int i = 0; i < form.degree(); ++i) out.push_back(form.parameter()[i] + s[k]);
    }
    return langlands_parameter(std::move(out));
}

// (n^3 - n)/24 - (alpha_1^2 + ... + alpha_n^2)/2
inline std::complex<double> laplace_eigenvalue(const langlands_parameter& alpha) {
    const double n = alpha.size();
    std::complex<double> sq = 0.0;
    for (int i = 0; i < alpha.size(); ++i) sq += alpha[i] * alpha[i];
    return (n * n * n - n) / 24.0 - 0.5 * sq;
}

} // namespace eisenlab
