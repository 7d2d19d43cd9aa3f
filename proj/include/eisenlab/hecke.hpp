#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "eisenlab/langlands.hpp"
#include "eisenlab/special_functions.hpp"

namespace eisenlab {

namespace detail {

// Divisor lists, memoized; built once per m and read-only afterwards.
inline const std::vector<std::uint64_t>& cached_divisors(std::uint64_t m) {
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, divisors(m)).first;
    return it->second;
}

} // namespace detail

// Enumerates exactly the ordered tuples (c_1, ..., c_arity) of positive
// integers with product m, each once, by recursive divisor splitting.
class factorization_enumerator {
public:
    factorization_enumerator(std::uint64_t m, int arity) : m_(m), arity_(arity) {
        if (m_ == 0) throw std::invalid_argument("factorization_enumerator: m must be positive");
        if (arity_ < 1) throw std::invalid_argument("factorization_enumerator: arity must be >= 1");
    }

    template <typename Fn> // Fn(const std::vector<std::uint64_t>&)
    void for_each(Fn&& fn) const {
        std::vector<std::uint64_t> tuple(static_cast<std::size_t>(arity_));
        recurse(m_, 0, tuple, fn);
    }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for_each([&](const std::vector<std::uint64_t>&) { ++c; });
        return c;
    }

private:
    template <typename Fn>
    void recurse(std::uint64_t rem, int idx, std::vector<std::uint64_t>& tuple, Fn&& fn) const {
        if (idx == arity_ - 1) {
            tuple[static_cast<std::size_t>(idx)] = rem;
            fn(tuple);
            return;
        }
        for (std::uint64_t d : detail::cached_divisors(rem)) {
            tuple[static_cast<std::size_t>(idx)] = d;
            recurse(rem / d, idx + 1, tuple, fn);
        }
    }

    std::uint64_t m_;
    int arity_;
};

// m-th Hecke eigenvalue of the Borel Eisenstein series:
//   sum over c_1 ... c_n = m of c_1^{alpha_1} ... c_n^{alpha_n}.
inline std::complex<double> borel_hecke(std::uint64_t m, const langlands_parameter& alpha) {
    const int n = alpha.size();
    std::complex<double> total = 0.0;
    factorization_enumerator enumerator(m, n);
    enumerator.for_each([&](const std::vector<std::uint64_t>& tuple) {
        std::complex<double> term = 1.0;
        for (int i = 0; i < n; ++i) {
            if (tuple[static_cast<std::size_t>(i)] != 1)
                term *= std::exp(alpha[i] * std::log(static_cast<double>(tuple[static_cast<std::size_t>(i)])));
        }
        total += term;
    });
    return total;
}

// m-th Hecke eigenvalue of the Eisenstein series attached to (parts, forms, s):
//   sum over c_1 ... c_r = m of lambda_{phi_1}(c_1) ... lambda_{phi_r}(c_r)
//                               c_1^{s_1} ... c_r^{s_r}.
inline std::complex<double> eisenstein_hecke(std::uint64_t m, const parabolic_data& parts,
                                             const std::vector<cusp_form_handle>& forms,
                                             const spectral_point& s) {
    const int r = parts.rank();
    if (static_cast<int>(forms.size()) != r || s.rank() != r)
        throw std::invalid_argument("eisenstein_hecke: rank mismatch");
    std::complex<double> total = 0.0;
    factorization_enumerator enumerator(m, r);
    enumerator.for_each([&](const std::vector<std::uint64_t>& tuple) {
        std::complex<double> term = 1.0;
        for (int k = 0; k < r; ++k) {
            const std::uint64_t ck = tuple[static_cast<std::size_t>(k)];
            std::complex<double> lam;
            try {
                lam = forms[static_cast<std::size_t>(k)].hecke(ck);
            } catch (const std::exception& e) {
                throw std::runtime_error("eisenstein_hecke: oracle failure at block " +
                                         std::to_string(k + 1) + ", c = " + std::to_string(ck) +
                                         ": " + e.what());
            }
            term *= lam;
            if (ck != 1) term *= std::exp(s[k] * std::log(static_cast<double>(ck)));
        }
        total += term;
    });
    return total;
}

// Oracle m -> borel_hecke(m, alpha); the eigenvalues of the Borel Eisenstein
// series standing in for a cusp form with the same Langlands parameter.
inline cusp_form_handle::hecke_oracle cusp_oracle_from_borel(const langlands_parameter& alpha) {
    return [alpha](std::uint64_t m) { return borel_hecke(m, alpha); };
}

// A cusp-form handle backed by the Borel oracle above.
inline cusp_form_handle borel_backed_form(const langlands_parameter& alpha,
                                          std::string label = "E_B") {
    const int degree = alpha.size();
    auto oracle = cusp_oracle_from_borel(alpha);
    return cusp_form_handle(degree, alpha, std::move(oracle), std::move(label));
}

} // namespace eisenlab
