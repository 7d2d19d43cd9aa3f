#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "eisenlab/errors.hpp"
#include "eisenlab/langlands.hpp"
#include "eisenlab/rational.hpp"
#include "eisenlab/special_functions.hpp"
#include "eisenlab/symbols.hpp"

namespace eisenlab {

// Completed L-factor kinds. gamma_half holds the unhalved argument w and
// stands for Gamma(w/2), so that all affine arguments keep integer symbol
// coefficients. adjoint_finite is the finite part L(1, Ad phi_k): the
// completed adjoint token expands into adjoint_finite times its Gamma
// product, mirroring the normalization of a Petersson-normalized cusp form.
enum class l_factor_kind : std::uint8_t {
    completed_adjoint,
    adjoint_finite,
    completed_standard,
    completed_rankin_selberg,
    completed_zeta,
    gamma_half,
};

// One factor of a formula product. block_j/block_l carry the ordered block
// pair for cross factors (standard and Rankin-Selberg); form is the block
// index of the attached cusp form for standard/adjoint kinds.
struct l_factor {
    l_factor_kind kind = l_factor_kind::completed_zeta;
    int block_j = 0;
    int block_l = 0;
    int form = 0;
    affine_arg arg;
    rational exponent = rational(1);

    static l_factor zeta_star_factor(affine_arg w, rational e = rational(-1)) {
        return {l_factor_kind::completed_zeta, 0, 0, 0, std::move(w), e};
    }
    static l_factor gamma_half_factor(affine_arg w, rational e) {
        return {l_factor_kind::gamma_half, 0, 0, 0, std::move(w), e};
    }
    static l_factor adjoint(int form_block, rational e = rational(-1, 2)) {
        return {l_factor_kind::completed_adjoint, form_block, 0, form_block, affine_arg(1), e};
    }
    static l_factor adjoint_finite_part(int form_block, rational e) {
        return {l_factor_kind::adjoint_finite, form_block, 0, form_block, affine_arg(1), e};
    }
    static l_factor standard(int j, int l, int form_block, affine_arg w,
                             rational e = rational(-1)) {
        return {l_factor_kind::completed_standard, j, l, form_block, std::move(w), e};
    }
    static l_factor rankin_selberg(int j, int l, affine_arg w, rational e = rational(-1)) {
        return {l_factor_kind::completed_rankin_selberg, j, l, 0, std::move(w), e};
    }

    std::string latex_base() const {
        switch (kind) {
        case l_factor_kind::completed_adjoint:
            return "L^*(1,\\mathrm{Ad}\\,\\phi_" + std::to_string(form) + ")";
        case l_factor_kind::adjoint_finite:
            return "L(1,\\mathrm{Ad}\\,\\phi_" + std::to_string(form) + ")";
        case l_factor_kind::completed_standard:
            return "L^*(" + arg.latex() + ",\\phi_" + std::to_string(form) + ")";
        case l_factor_kind::completed_rankin_selberg:
            return "L^*(" + arg.latex() + ",\\phi_" + std::to_string(block_j) +
                   "\\times\\phi_" + std::to_string(block_l) + ")";
        case l_factor_kind::completed_zeta:
            return "\\zeta^*(" + arg.latex() + ")";
        case l_factor_kind::gamma_half:
            return "\\Gamma\\left(\\frac{" + arg.latex() + "}{2}\\right)";
        }
        return {};
    }

    std::string latex() const {
        std::string s = latex_base();
        if (!(exponent == rational(1))) s += "^{" + exponent.str() + "}";
        return s;
    }
};

// Multiset of L-factors with rational exponents: equal factors merge by
// adding exponents and zero exponents vanish. Canonically ordered by
// (kind, block indices, argument). All first-coefficient statements hold up
// to a nonzero constant; the flag records that.
class formula_product {
public:
    using factor_key = std::tuple<l_factor_kind, int, int, int, affine_arg>;

    static formula_product one() { return {}; }

    bool empty() const noexcept { return factors_.empty(); }
    std::size_t size() const noexcept { return factors_.size(); }
    bool up_to_constant() const noexcept { return up_to_constant_; }

    void multiply(const l_factor& f) {
        if (f.exponent.is_zero()) return;
        const factor_key key{f.kind, f.block_j, f.block_l, f.form, f.arg};
        auto it = factors_.find(key);
        if (it == factors_.end()) {
            factors_.emplace(key, f.exponent);
        } else {
            it->second += f.exponent;
            if (it->second.is_zero()) factors_.erase(it);
        }
    }

    formula_product& operator*=(const formula_product& o) {
        for (const auto& f : o.factors()) multiply(f);
        return *this;
    }
    friend formula_product operator*(formula_product a, const formula_product& b) {
        return a *= b;
    }

    formula_product inverse() const {
        formula_product r;
        for (const auto& [key, e] : factors_) r.factors_.emplace(key, -e);
        return r;
    }

    std::vector<l_factor> factors() const {
        std::vector<l_factor> out;
        out.reserve(factors_.size());
        for (const auto& [key, e] : factors_)
            out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key),
                           std::get<4>(key), e});
        return out;
    }

    friend bool operator==(const formula_product& a, const formula_product& b) {
        return a.factors_ == b.factors_;
    }

    std::string latex() const {
        if (factors_.empty()) return "1";
        std::string out;
        for (const auto& f : factors()) {
            if (!out.empty()) out += "\\,";
            out += f.latex();
        }
        return out;
    }

private:
    std::map<factor_key, rational> factors_;
    bool up_to_constant_ = true;
};

inline std::string render_latex(const formula_product& f) { return f.latex(); }

// A cusp form at the symbolic level: a degree and the affine expressions of
// its Langlands-parameter entries. Degree 1 is the constant function with
// the zero entry. generic() fills the entries with the opaque symbols
// alpha_{block,i}.
struct symbolic_cusp_form {
    int degree = 1;
    std::vector<affine_arg> alpha;
    std::string label;

    static symbolic_cusp_form generic(int block, int degree) {
        symbolic_cusp_form f;
        f.degree = degree;
        f.label = "\\phi_" + std::to_string(block);
        if (degree == 1) {
            f.alpha = {affine_arg(0)};
        } else {
            for (int i = 1; i <= degree; ++i)
                f.alpha.push_back(affine_arg(symbol::alpha_var(block, i)));
        }
        return f;
    }

    void check() const {
        if (degree < 1) throw std::invalid_argument("symbolic_cusp_form: degree must be >= 1");
        if (static_cast<int>(alpha.size()) != degree)
            throw std::invalid_argument("symbolic_cusp_form: parameter size must equal degree");
        if (degree == 1 && !(alpha[0] == affine_arg(0)))
            throw std::invalid_argument("symbolic_cusp_form: degree-1 parameter must be 0");
    }
};

inline std::vector<symbolic_cusp_form> generic_forms(const parabolic_data& parts) {
    std::vector<symbolic_cusp_form> forms;
    for (int k = 0; k < parts.rank(); ++k)
        forms.push_back(symbolic_cusp_form::generic(k + 1, parts.part(k)));
    return forms;
}

// First coefficient of the Borel Eisenstein series with parameter slots
// given by arbitrary affine expressions:
//   prod_{j < k} zeta*(1 + slot_j - slot_k)^{-1},
// up to a nonzero constant.
inline formula_product borel_first_coeff(const std::vector<affine_arg>& slots) {
    if (slots.size() < 2)
        throw std::invalid_argument("borel_first_coeff: need at least two parameter slots");
    formula_product p;
    for (std::size_t j = 0; j < slots.size(); ++j)
        for (std::size_t k = j + 1; k < slots.size(); ++k)
            p.multiply(l_factor::zeta_star_factor(affine_arg(1) + slots[j] - slots[k]));
    return p;
}

// Convenience overload over the single-index symbols alpha_1..alpha_n.
inline formula_product borel_first_coeff(int n) {
    std::vector<affine_arg> slots;
    for (int j = 1; j <= n; ++j) slots.push_back(affine_arg(symbol::alpha_var(j)));
    return borel_first_coeff(slots);
}

// First coefficient of a Petersson-normalized cusp form of degree n_k > 1:
//   L(1, Ad phi_k)^{-1/2} prod_{i<j} Gamma((1 + alpha_{k,i} - alpha_{k,j})/2)^{-1},
// the empty product for degree 1.
inline formula_product cusp_normalization(int block, const symbolic_cusp_form& form) {
    form.check();
    formula_product p;
    if (form.degree == 1) return p;
    p.multiply(l_factor::adjoint_finite_part(block, rational(-1, 2)));
    for (int i = 0; i < form.degree; ++i)
        for (int j = i + 1; j < form.degree; ++j)
            p.multiply(l_factor::gamma_half_factor(affine_arg(1) + form.alpha[static_cast<std::size_t>(i)] -
                                                       form.alpha[static_cast<std::size_t>(j)],
                                                   rational(-1)));
    return p;
}

// Intermediate products of the Borel-substitution derivation, for tracing.
struct template_trace {
    std::vector<affine_arg> borel_slots;
    formula_product borel_product;
    std::vector<formula_product> block_normalizations;
    std::vector<formula_product> block_replacements;
};

// First coefficient of the Eisenstein series attached to (parts, forms) by
// substituting, for each cusp form, a Borel Eisenstein series with the same
// Langlands parameters (normalized to share the form's first coefficient),
// and reading off the first coefficient of the assembled Borel series. The
// intra-block zeta* factors cancel exactly; what survives is the adjoint
// normalization of each block and the cross-block factors
//   zeta*(1 + s_k - s_l + alpha_{k,i} - alpha_{l,j})^{-1}.
inline formula_product template_first_coeff(const parabolic_data& parts,
                                            const std::vector<symbolic_cusp_form>& forms,
                                            template_trace* trace = nullptr) {
    const int r = parts.rank();
    if (static_cast<int>(forms.size()) != r)
        throw std::invalid_argument("template_first_coeff: one form per block required");
    for (int k = 0; k < r; ++k) {
        forms[static_cast<std::size_t>(k)].check();
        if (forms[static_cast<std::size_t>(k)].degree != parts.part(k))
            throw std::invalid_argument("template_first_coeff: form degree mismatch at block " +
                                        std::to_string(k + 1));
    }

    // Langlands parameter of the assembled Borel series: alpha_{k,i} + s_k.
    std::vector<affine_arg> slots;
    slots.reserve(static_cast<std::size_t>(parts.n()));
    for (int k = 0; k < r; ++k) {
        const affine_arg sk{symbol::s_var(k + 1)};
        for (const auto& entry : forms[static_cast<std::size_t>(k)].alpha)
            slots.push_back(sk + entry);
    }

    formula_product result =
        parts.n() >= 2 ? borel_first_coeff(slots) : formula_product::one();
    if (trace) {
        trace->borel_slots = slots;
        trace->borel_product = result;
    }

    for (int k = 0; k < r; ++k) {
        const auto& form = forms[static_cast<std::size_t>(k)];
        formula_product normalization = cusp_normalization(k + 1, form);
        formula_product replacement;
        for (int i = 0; i < form.degree; ++i)
            for (int j = i + 1; j < form.degree; ++j)
                replacement.multiply(l_factor::zeta_star_factor(
                    affine_arg(1) + form.alpha[static_cast<std::size_t>(i)] -
                        form.alpha[static_cast<std::size_t>(j)],
                    rational(1)));
        if (trace) {
            trace->block_normalizations.push_back(normalization);
            trace->block_replacements.push_back(replacement);
        }
        result *= normalization;
        result *= replacement;
    }

    // The surviving zeta* factors must all be cross-block: their arguments
    // carry an s-difference. Anything else is a cancellation failure.
    for (const auto& f : result.factors()) {
        if (f.kind != l_factor_kind::completed_zeta) continue;
        bool has_s = false;
        for (const auto& [sym, c] : f.arg.coefficients())
            if (sym.kind == symbol::kind_t::s && c != 0) has_s = true;
        if (!has_s)
            throw consistency_error(
                "template_first_coeff: intra-block factor survived cancellation: " + f.latex());
    }
    return result;
}

// The case analysis for the cross-block factor attached to blocks (j, l):
// a Rankin-Selberg convolution when both blocks carry cusp forms, the
// standard L-function of the non-trivial form when exactly one does, and a
// completed zeta when both blocks are trivial.
enum class cross_factor_case : std::uint8_t {
    rankin_selberg,
    standard_of_first,
    standard_of_second,
    zeta,
};

using cross_case_table = std::function<cross_factor_case(int deg_j, int deg_l)>;

inline cross_factor_case default_cross_case(int deg_j, int deg_l) {
    if (deg_j > 1 && deg_l > 1) return cross_factor_case::rankin_selberg;
    if (deg_j > 1) return cross_factor_case::standard_of_first;
    if (deg_l > 1) return cross_factor_case::standard_of_second;
    return cross_factor_case::zeta;
}

// The grouped first-coefficient product:
//   prod_{n_k > 1} L*(1, Ad phi_k)^{-1/2}
//   prod_{j < l} L*(1 + s_j - s_l, phi_j x phi_l)^{-1},
// with the degenerate cases of the cross factor resolved by the case table.
inline formula_product grouped_first_coeff(const parabolic_data& parts,
                                           const std::vector<symbolic_cusp_form>& forms,
                                           const cross_case_table& table = default_cross_case) {
    const int r = parts.rank();
    if (static_cast<int>(forms.size()) != r)
        throw std::invalid_argument("grouped_first_coeff: one form per block required");
    formula_product p;
    for (int k = 0; k < r; ++k) {
        forms[static_cast<std::size_t>(k)].check();
        if (forms[static_cast<std::size_t>(k)].degree > 1)
            p.multiply(l_factor::adjoint(k + 1));
    }
    for (int j = 0; j < r; ++j) {
        for (int l = j + 1; l < r; ++l) {
            const affine_arg w = affine_arg(1) + affine_arg(symbol::s_var(j + 1)) -
                                 affine_arg(symbol::s_var(l + 1));
            switch (table(forms[static_cast<std::size_t>(j)].degree,
                          forms[static_cast<std::size_t>(l)].degree)) {
            case cross_factor_case::rankin_selberg:
                p.multiply(l_factor::rankin_selberg(j + 1, l + 1, w));
                break;
            case cross_factor_case::standard_of_first:
                p.multiply(l_factor::standard(j + 1, l + 1, j + 1, w));
                break;
            case cross_factor_case::standard_of_second:
                p.multiply(l_factor::standard(j + 1, l + 1, l + 1, w));
                break;
            case cross_factor_case::zeta:
                p.multiply(l_factor::zeta_star_factor(w));
                break;
            }
        }
    }
    return p;
}

// Rewrites completed L-factors into their zeta*/Gamma constituents:
//   RS(j,l) at w        -> prod_{i,t} zeta*(w + alpha_{j,i} - alpha_{l,t})
//   standard, paired    -> the same with the trivial block contributing 0
//   standard, standalone-> prod_i zeta*(w + alpha_{k,i})
//   completed adjoint   -> adjoint_finite times prod_{i<j} Gamma-half^2e
// zeta*, Gamma and finite parts pass through. The pairing convention keeps
// the finite-part/Gamma ledger identical to cusp_normalization.
inline formula_product expand_l_symbols(const formula_product& f,
                                        const std::vector<symbolic_cusp_form>& forms) {
    const auto form_of = [&](int block) -> const symbolic_cusp_form& {
        if (block < 1 || block > static_cast<int>(forms.size()))
            throw std::invalid_argument("expand_l_symbols: factor references unknown block " +
                                        std::to_string(block));
        return forms[static_cast<std::size_t>(block - 1)];
    };
    formula_product out;
    for (const auto& fac : f.factors()) {
        switch (fac.kind) {
        case l_factor_kind::completed_zeta:
        case l_factor_kind::gamma_half:
        case l_factor_kind::adjoint_finite:
            out.multiply(fac);
            break;
        case l_factor_kind::completed_adjoint: {
            const auto& form = form_of(fac.form);
            out.multiply(l_factor::adjoint_finite_part(fac.form, fac.exponent));
            for (int i = 0; i < form.degree; ++i)
                for (int j = i + 1; j < form.degree; ++j)
                    out.multiply(l_factor::gamma_half_factor(
                        affine_arg(1) + form.alpha[static_cast<std::size_t>(i)] -
                            form.alpha[static_cast<std::size_t>(j)],
                        fac.exponent * rational(2)));
            break;
        }
        case l_factor_kind::completed_standard: {
            // prod_i zeta*(w + alpha_{k,i}) when the form sits in the left
            // slot of its block pair (or stands alone); the parameter enters
            // negated from the right slot, the contragredient reading.
            const auto& form = form_of(fac.form);
            const bool dual = fac.block_l != 0 && fac.form == fac.block_l;
            for (const auto& entry : form.alpha)
                out.multiply(l_factor::zeta_star_factor(
                    dual ? fac.arg - entry : fac.arg + entry, fac.exponent));
            break;
        }
        case l_factor_kind::completed_rankin_selberg: {
            const auto& fj = form_of(fac.block_j);
            const auto& fl = form_of(fac.block_l);
            for (const auto& ej : fj.alpha)
                for (const auto& el : fl.alpha)
                    out.multiply(l_factor::zeta_star_factor(fac.arg + ej - el, fac.exponent));
            break;
        }
        }
    }
    return out;
}

struct grouping_report {
    bool ok = false;
    formula_product residue; // expanded grouped product divided by the template product
    std::string diff_latex;
};

// Checks that the grouped product and the Borel-substitution derivation
// agree as exact multisets of zeta*/Gamma/finite factors.
inline grouping_report verify_grouping(const parabolic_data& parts,
                                       const std::vector<symbolic_cusp_form>& forms,
                                       const cross_case_table& table = default_cross_case) {
    grouping_report rep;
    const formula_product expanded = expand_l_symbols(grouped_first_coeff(parts, forms, table), forms);
    const formula_product derived = template_first_coeff(parts, forms);
    rep.residue = expanded * derived.inverse();
    rep.ok = rep.residue.empty();
    if (!rep.ok) rep.diff_latex = rep.residue.latex();
    return rep;
}

// Numeric value of a fully reduced product (only zeta* and Gamma-half
// factors) under the given symbol bindings.
inline std::complex<double> numeric_eval(const formula_product& f,
                                         const std::map<symbol, std::complex<double>>& bindings) {
    std::complex<double> result = 1.0;
    for (const auto& fac : f.factors()) {
        std::complex<double> base;
        switch (fac.kind) {
        case l_factor_kind::completed_zeta: {
            const auto w = fac.arg.evaluate(bindings);
            try {
                base = zeta_star(w);
            } catch (const pole_error&) {
                throw eval_error("factor at a pole", fac.latex());
            }
            break;
        }
        case l_factor_kind::gamma_half: {
            const auto w = fac.arg.evaluate(bindings);
            try {
                base = gamma(0.5 * w);
            } catch (const pole_error&) {
                throw eval_error("factor at a pole", fac.latex());
            }
            break;
        }
        default:
            throw eval_error("factor is not zeta*/Gamma reducible", fac.latex());
        }
        if (!(std::abs(base) > 0.0)) throw eval_error("factor vanishes", fac.latex());
        result *= std::pow(base, std::complex<double>(fac.exponent.to_double(), 0.0));
    }
    return result;
}

} // namespace eisenlab
