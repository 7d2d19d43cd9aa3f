#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "eisenlab/errors.hpp"
#include "eisenlab/rational.hpp"

namespace eisenlab {

// A formal symbol: a spectral variable s_j, a Langlands-parameter slot
// alpha_{k,i} (slot 0 renders as the single-index alpha_k used for a
// standalone Borel parameter), or a user-named symbol from the CLI.
struct symbol {
    enum class kind_t : std::uint8_t { s, alpha, named };

    kind_t kind = kind_t::s;
    int block = 0; // 1-based
    int slot = 0;  // 1-based; 0 means single-index
    std::string name;

    static symbol s_var(int block) { return {kind_t::s, block, 0, {}}; }
    static symbol alpha_var(int block, int slot = 0) { return {kind_t::alpha, block, slot, {}}; }
    static symbol named_var(std::string n) { return {kind_t::named, 0, 0, std::move(n)}; }

    friend auto operator<=>(const symbol&, const symbol&) = default;

    std::string latex() const {
        switch (kind) {
        case kind_t::s:
            return "s_" + std::to_string(block);
        case kind_t::alpha:
            if (slot == 0) return "\\alpha_" + std::to_string(block);
            return "\\alpha_{" + std::to_string(block) + "," + std::to_string(slot) + "}";
        case kind_t::named:
            return name;
        }
        return {};
    }
};

// Affine expression: rational constant plus integer combinations of symbols.
// Equality and ordering are componentwise exact; zero coefficients are never
// stored.
class affine_arg {
public:
    affine_arg() = default;
    affine_arg(rational c) : constant_(c) {}
    affine_arg(std::int64_t c) : constant_(rational(c)) {}
    affine_arg(const symbol& sym) { coeffs_[sym] = 1; }

    const rational& constant() const noexcept { return constant_; }
    const std::map<symbol, std::int64_t>& coefficients() const noexcept { return coeffs_; }
    bool is_constant() const noexcept { return coeffs_.empty(); }

    affine_arg& operator+=(const affine_arg& o) {
        constant_ += o.constant_;
        for (const auto& [sym, c] : o.coeffs_) add_term(sym, c);
        return *this;
    }
    affine_arg& operator-=(const affine_arg& o) {
        constant_ -= o.constant_;
        for (const auto& [sym, c] : o.coeffs_) add_term(sym, -c);
        return *this;
    }
    affine_arg operator-() const {
        affine_arg r;
        r.constant_ = -constant_;
        for (const auto& [sym, c] : coeffs_) r.coeffs_[sym] = -c;
        return r;
    }

    friend affine_arg operator+(affine_arg a, const affine_arg& b) { return a += b; }
    friend affine_arg operator-(affine_arg a, const affine_arg& b) { return a -= b; }

    friend bool operator==(const affine_arg&, const affine_arg&) = default;
    friend auto operator<=>(const affine_arg& a, const affine_arg& b) {
        if (auto c = a.constant_ <=> b.constant_; c != 0) return c;
        return std::compare_three_way{}(a.coeffs_, b.coeffs_);
    }

    std::complex<double> evaluate(const std::map<symbol, std::complex<double>>& bindings) const {
        std::complex<double> v = constant_.to_double();
        for (const auto& [sym, c] : coeffs_) {
            const auto it = bindings.find(sym);
            if (it == bindings.end()) throw eval_error("unbound symbol", sym.latex());
            v += static_cast<double>(c) * it->second;
        }
        return v;
    }

    // "1+s_1-s_2+\alpha_{1,2}", "-1/2+2s_1", "0"
    std::string latex() const {
        std::string out;
        if (!constant_.is_zero() || coeffs_.empty()) out = constant_.str();
        for (const auto& [sym, c] : coeffs_) {
            if (c >= 0 && !out.empty()) out += "+";
            if (c == -1)
                out += "-";
            else if (c != 1)
                out += std::to_string(c);
            out += sym.latex();
        }
        return out;
    }

private:
    void add_term(const symbol& sym, std::int64_t c) {
        auto it = coeffs_.find(sym);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[sym] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    rational constant_;
    std::map<symbol, std::int64_t> coeffs_;
};

} // namespace eisenlab
