// Command-line front end: first-coefficient formulas, Hecke eigenvalues,
// Whittaker evaluation, and the degree-2 Eisenstein verification harness.
//
// Exit codes: 0 success, 2 usage error, 3 numerical-verification failure,
// 4 internal-consistency failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <eisenlab/eisenlab.hpp>

namespace {

using namespace eisenlab;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_verification = 3;
constexpr int exit_consistency = 4;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt(cdouble v) {
    if (v.imag() == 0.0) return fmt(v.real());
    return fmt(v.real()) + (v.imag() < 0 ? "" : "+") + fmt(v.imag()) + "i";
}

// "1.5", "-2", "3i", "1+2i", "2.5-0.3i"
std::optional<cdouble> parse_complex(const std::string& text) {
    const char* p = text.c_str();
    char* end = nullptr;
    double first = std::strtod(p, &end);
    if (end == p) {
        // allow a bare "i" / "-i"
        std::string t = text;
        if (t == "i") return cdouble(0.0, 1.0);
        if (t == "-i") return cdouble(0.0, -1.0);
        return std::nullopt;
    }
    if (*end == '\0') return cdouble(first, 0.0);
    if (*end == 'i' && end[1] == '\0') return cdouble(0.0, first);
    if (*end != '+' && *end != '-') return std::nullopt;
    const char* q = end;
    char* end2 = nullptr;
    double second = std::strtod(q, &end2);
    if (end2 == q) {
        if ((q[0] == '+' || q[0] == '-') && q[1] == 'i' && q[2] == '\0')
            return cdouble(first, q[0] == '+' ? 1.0 : -1.0);
        return std::nullopt;
    }
    if (*end2 == 'i' && end2[1] == '\0') return cdouble(first, second);
    return std::nullopt;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct token_value {
    bool numeric = false;
    cdouble value;
    affine_arg expr; // symbolic form when not numeric
    std::string name;
};

// A token is a number, a symbol name, or a negated symbol name.
std::optional<token_value> parse_token(const std::string& text) {
    token_value tv;
    if (auto v = parse_complex(text)) {
        tv.numeric = true;
        tv.value = *v;
        return tv;
    }
    std::string name = text;
    bool neg = false;
    if (!name.empty() && name[0] == '-') {
        neg = true;
        name = name.substr(1);
    }
    if (name.empty()) return std::nullopt;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return std::nullopt;
    tv.numeric = false;
    tv.name = name;
    tv.expr = affine_arg(symbol::named_var(name));
    if (neg) tv.expr = -tv.expr;
    return tv;
}

quadrature_spec quad_from_env() {
    quadrature_spec spec;
    if (const char* env = std::getenv("EISENLAB_QUAD_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) {
            spec.abs_tol = v;
            spec.rel_tol = v;
        }
    }
    return spec;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw CLI::ValidationError("--out", "cannot open " + out_path);
    os << text;
}

std::vector<int> parse_partition(const std::string& text, int n) {
    std::vector<int> parts;
    int sum = 0;
    for (const auto& tok : split_list(text)) {
        try {
            parts.push_back(std::stoi(tok));
        } catch (...) {
            throw CLI::ValidationError("--partition", "bad part '" + tok + "'");
        }
        if (parts.back() < 1) throw CLI::ValidationError("--partition", "parts must be positive");
        sum += parts.back();
    }
    if (n != 0 && sum != n)
        throw CLI::ValidationError("--partition", "parts sum to " + std::to_string(sum) +
                                                      ", expected n = " + std::to_string(n));
    return parts;
}

void partitions_descending(int n, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_descending(n - p, p, cur, out);
        cur.pop_back();
    }
}

// --------------------------------------------------------------- first-coeff

struct first_coeff_options {
    int n = 0;
    std::string partition;
    std::vector<std::string> alpha_lists; // per block, "a,-a" or "" for generic
    std::string s_list;
    bool derive = false;
    bool verify = false;
    bool all_partitions = false;
    bool mutate = false; // corrupts the case table; testing hook
    std::string format = "latex";
    std::string out_path;
};

std::vector<symbolic_cusp_form> forms_from_options(const parabolic_data& parts,
                                                   const std::vector<std::string>& alpha_lists,
                                                   std::map<symbol, cdouble>& bindings) {
    auto forms = generic_forms(parts);
    for (std::size_t k = 0; k < alpha_lists.size() && k < forms.size(); ++k) {
        if (alpha_lists[k].empty()) continue;
        const auto toks = split_list(alpha_lists[k]);
        if (static_cast<int>(toks.size()) != parts.part(static_cast<int>(k)))
            throw CLI::ValidationError("--alpha" + std::to_string(k + 1),
                                       "needs " + std::to_string(parts.part(static_cast<int>(k))) +
                                           " entries");
        std::vector<affine_arg> entries;
        for (const auto& t : toks) {
            auto tok = parse_token(t);
            if (!tok) throw CLI::ValidationError("--alpha" + std::to_string(k + 1), "bad token '" + t + "'");
            if (tok->numeric) {
                // numeric entries keep the generic symbol and bind its value
                const symbol sym = symbol::alpha_var(static_cast<int>(k) + 1,
                                                     static_cast<int>(entries.size()) + 1);
                bindings[sym] = tok->value;
                entries.push_back(affine_arg(sym));
            } else {
                entries.push_back(tok->expr);
            }
        }
        if (parts.part(static_cast<int>(k)) > 1) forms[k].alpha = std::move(entries);
    }
    return forms;
}

int run_first_coeff(const first_coeff_options& opt) {
    const cross_case_table table =
        opt.mutate ? cross_case_table([](int dj, int dl) {
            auto c = default_cross_case(dj, dl);
            if (c == cross_factor_case::standard_of_first) return cross_factor_case::standard_of_second;
            if (c == cross_factor_case::standard_of_second) return cross_factor_case::standard_of_first;
            return c;
        })
                   : cross_case_table(default_cross_case);

    std::vector<std::vector<int>> partition_set;
    if (opt.all_partitions) {
        std::vector<int> cur;
        partitions_descending(opt.n, opt.n, cur, partition_set);
    } else {
        partition_set.push_back(parse_partition(opt.partition, opt.n));
    }

    std::string text;
    json out_terms = json::array();
    bool all_ok = true;
    for (const auto& pvec : partition_set) {
        parabolic_data parts(pvec);
        std::map<symbol, cdouble> bindings;
        auto forms = forms_from_options(parts, opt.alpha_lists, bindings);
        if (!opt.s_list.empty()) {
            const auto toks = split_list(opt.s_list);
            if (static_cast<int>(toks.size()) != parts.rank())
                throw CLI::ValidationError("--s", "needs one entry per block");
            for (std::size_t k = 0; k < toks.size(); ++k) {
                auto tok = parse_token(toks[k]);
                if (!tok) throw CLI::ValidationError("--s", "bad token '" + toks[k] + "'");
                if (tok->numeric) bindings[symbol::s_var(static_cast<int>(k) + 1)] = tok->value;
            }
        }

        const formula_product grouped = grouped_first_coeff(parts, forms, table);
        std::string partition_str;
        for (std::size_t i = 0; i < pvec.size(); ++i)
            partition_str += (i ? "," : "") + std::to_string(pvec[i]);

        json entry{{"partition", pvec}, {"latex", grouped.latex()}};
        if (partition_set.size() > 1) text += partition_str + ":  ";
        text += grouped.latex() + "\n";

        if (opt.derive) {
            template_trace trace;
            const formula_product derived = template_first_coeff(parts, forms, &trace);
            text += "  borel parameter: (";
            for (std::size_t i = 0; i < trace.borel_slots.size(); ++i)
                text += (i ? ", " : "") + trace.borel_slots[i].latex();
            text += ")\n";
            text += "  borel first coefficient: " + trace.borel_product.latex() + "\n";
            for (std::size_t k = 0; k < trace.block_normalizations.size(); ++k) {
                text += "  block " + std::to_string(k + 1) +
                        " normalization: " + trace.block_normalizations[k].latex() +
                        "   replacement: " + trace.block_replacements[k].latex() + "\n";
            }
            text += "  derived product: " + derived.latex() + "\n";
            entry["derived"] = derived.latex();
        }
        if (opt.verify) {
            const auto rep = verify_grouping(parts, forms, table);
            all_ok = all_ok && rep.ok;
            text += std::string("  grouping: ") + (rep.ok ? "verified" : ("MISMATCH " + rep.diff_latex)) + "\n";
            entry["verified"] = rep.ok;
            if (!rep.ok) entry["diff"] = rep.diff_latex;
        }
        // numeric evaluation where the expanded product is zeta*/Gamma-reducible
        if (!bindings.empty()) {
            try {
                const cdouble v = numeric_eval(expand_l_symbols(grouped, forms), bindings);
                text += "  value: " + fmt(v) + "\n";
                entry["value"] = {v.real(), v.imag()};
            } catch (const eval_error& e) {
                text += std::string("  value: not zeta*/Gamma-reducible (") + e.what() + ")\n";
            }
        }
        out_terms.push_back(entry);
    }

    if (opt.verify && partition_set.size() > 1) {
        text += std::to_string(partition_set.size()) + " partitions, " +
                (all_ok ? "all grouped correctly" : "MISMATCHES present") + "\n";
    }

    if (opt.format == "json") {
        json j{{"schema", "eisenstein-lab/1"}, {"kind", "first-coeff"}, {"results", out_terms}};
        if (opt.verify) j["all_verified"] = all_ok;
        emit(j.dump(2) + "\n", opt.out_path);
    } else {
        emit(text, opt.out_path);
    }
    if (opt.verify && !all_ok) return exit_consistency;
    return exit_ok;
}

// --------------------------------------------------------------------- hecke

struct hecke_options {
    int n = 0;
    std::string alpha_list;
    std::string partition;
    std::string s_list;
    std::vector<std::string> alpha_lists;
    std::string m_spec = "1";
    std::string format = "table";
    std::string out_path;
};

int run_hecke(const hecke_options& opt) {
    std::uint64_t m_lo = 1, m_hi = 1;
    const auto colon = opt.m_spec.find(':');
    try {
        if (colon == std::string::npos) {
            m_lo = m_hi = std::stoull(opt.m_spec);
        } else {
            m_lo = std::stoull(opt.m_spec.substr(0, colon));
            m_hi = std::stoull(opt.m_spec.substr(colon + 1));
        }
    } catch (...) {
        throw CLI::ValidationError("--m", "bad value '" + opt.m_spec + "'");
    }
    if (m_lo < 1 || m_hi < m_lo) throw CLI::ValidationError("--m", "bad range");

    std::function<cdouble(std::uint64_t)> eigenvalue;
    if (!opt.alpha_list.empty()) {
        std::vector<cdouble> entries;
        for (const auto& t : split_list(opt.alpha_list)) {
            auto v = parse_complex(t);
            if (!v) throw CLI::ValidationError("--alpha", "bad numeric token '" + t + "'");
            entries.push_back(*v);
        }
        if (opt.n != 0 && static_cast<int>(entries.size()) != opt.n)
            throw CLI::ValidationError("--alpha", "needs n entries");
        langlands_parameter alpha(entries);
        eigenvalue = [alpha](std::uint64_t m) { return borel_hecke(m, alpha); };
    } else if (!opt.partition.empty()) {
        parabolic_data parts(parse_partition(opt.partition, opt.n));
        std::vector<cdouble> s_values;
        for (const auto& t : split_list(opt.s_list)) {
            auto v = parse_complex(t);
            if (!v) throw CLI::ValidationError("--s", "numeric values required");
            s_values.push_back(*v);
        }
        spectral_point s(parts, s_values);
        std::vector<cusp_form_handle> forms;
        for (int k = 0; k < parts.rank(); ++k) {
            if (parts.part(k) == 1) {
                forms.push_back(cusp_form_handle::trivial());
                continue;
            }
            if (static_cast<int>(opt.alpha_lists.size()) < k + 1 || opt.alpha_lists[static_cast<std::size_t>(k)].empty())
                throw CLI::ValidationError("--alpha" + std::to_string(k + 1),
                                           "required for block of size " + std::to_string(parts.part(k)));
            std::vector<cdouble> entries;
            for (const auto& t : split_list(opt.alpha_lists[static_cast<std::size_t>(k)])) {
                auto v = parse_complex(t);
                if (!v) throw CLI::ValidationError("--alpha" + std::to_string(k + 1), "numeric values required");
                entries.push_back(*v);
            }
            forms.push_back(borel_backed_form(langlands_parameter(entries)));
        }
        eigenvalue = [parts, forms, s](std::uint64_t m) {
            return eisenstein_hecke(m, parts, forms, s);
        };
    } else {
        throw CLI::ValidationError("hecke", "need --alpha (with --n) or --partition with --s");
    }

    json values = json::array();
    std::string text;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        const cdouble v = eigenvalue(m);
        values.push_back({{"m", m}, {"value", {v.real(), v.imag()}}});
        text += std::to_string(m) + "  " + fmt(v) + "\n";
    }
    if (opt.format == "json")
        emit(json{{"schema", "eisenstein-lab/1"}, {"kind", "hecke"}, {"values", values}}.dump(2) + "\n",
             opt.out_path);
    else
        emit(text, opt.out_path);
    return exit_ok;
}

// ----------------------------------------------------------------- whittaker

struct whittaker_options {
    std::string alpha = "0";
    double y = 1.0;
    bool check_bessel = false;
    std::string format = "table";
    std::string out_path;
};

int run_whittaker(const whittaker_options& opt) {
    const auto alpha = parse_complex(opt.alpha);
    if (!alpha) throw CLI::ValidationError("--alpha", "bad complex value '" + opt.alpha + "'");
    if (!(opt.y > 0.0)) throw CLI::ValidationError("--y", "must be positive");
    const quadrature_spec spec = quad_from_env();
    const cdouble value = w2_integral(*alpha, opt.y, spec);
    json j{{"schema", "eisenstein-lab/1"},
           {"kind", "whittaker"},
           {"alpha", {alpha->real(), alpha->imag()}},
           {"y", opt.y},
           {"value", {value.real(), value.imag()}}};
    std::string text = "W_2(alpha = " + fmt(*alpha) + ", y = " + fmt(opt.y) + ") = " + fmt(value) + "\n";
    bool pass = true;
    if (opt.check_bessel) {
        const cdouble oracle = std::sqrt(opt.y) * bessel_k(*alpha, 2.0 * pi * opt.y);
        const double residual = std::abs(value - oracle) / std::max(std::abs(oracle), 1e-300);
        pass = residual <= 1e-8;
        text += "K-Bessel oracle = " + fmt(oracle) + ", relative residual = " + fmt(residual) +
                (pass ? " (pass)\n" : " (FAIL)\n");
        j["bessel_oracle"] = {oracle.real(), oracle.imag()};
        j["residual"] = residual;
        j["pass"] = pass;
    }
    emit(opt.format == "json" ? j.dump(2) + "\n" : text, opt.out_path);
    return pass ? exit_ok : exit_verification;
}

// ---------------------------------------------------------------- verify-gl2

struct verify_gl2_options {
    std::string s = "3";
    double y = 1.0;
    int n_max = 3;
    int cutoff = 300;
    double tol = 1e-4;
    std::string format = "table";
    std::string out_path;
};

int run_verify_gl2(const verify_gl2_options& opt) {
    const auto s = parse_complex(opt.s);
    if (!s) throw CLI::ValidationError("--s", "bad complex value '" + opt.s + "'");
    if (!(opt.y > 0.0)) throw CLI::ValidationError("--y", "must be positive");
    if (!(s->real() > 1.0))
        throw CLI::ValidationError("--s", "requires Re(s) > 1 (the series only converges there)");
    const double tail = eisenstein_tail_bound(*s, opt.y, opt.cutoff) /
                        std::pow(opt.y, s->real());
    if (tail > 0.3 * opt.tol) {
        std::cerr << "refusing: estimated lattice tail " << fmt(tail) << " exceeds tolerance "
                  << fmt(opt.tol) << " at N = " << opt.cutoff
                  << "; increase --N or move Re(s) away from the convergence boundary\n";
        return exit_usage;
    }
    const verification_report rep = run_verification(*s, opt.y, opt.n_max, opt.cutoff,
                                                     quad_from_env(), opt.tol);
    emit(opt.format == "json" ? to_json(rep).dump(2) + "\n" : format_table(rep), opt.out_path);
    return rep.pass ? exit_ok : exit_verification;
}

// -------------------------------------------------------------------- params

struct params_options {
    int n = 0;
    std::string partition;
    std::vector<std::string> alpha_lists;
    std::string s_list;
    bool rho_only = false;
    std::string format = "table";
    std::string out_path;
};

int run_params(const params_options& opt) {
    parabolic_data parts(parse_partition(opt.partition, opt.n));
    const int n = parts.n();
    std::string text;
    json j{{"schema", "eisenstein-lab/1"}, {"kind", "params"}, {"n", n}, {"partition", parts.parts()}};

    text += "rho   = (";
    json rho_json = json::array();
    const auto rho = rho_vector(n);
    for (int i = 0; i < n; ++i) {
        text += (i ? ", " : "") + rho[static_cast<std::size_t>(i)].str();
        rho_json.push_back(rho[static_cast<std::size_t>(i)].str());
    }
    text += ")\nrho_P = (";
    json rho_p_json = json::array();
    for (int k = 0; k < parts.rank(); ++k) {
        text += (k ? ", " : "") + parts.rho_p(k).str();
        rho_p_json.push_back(parts.rho_p(k).str());
    }
    text += ")\n";
    j["rho"] = rho_json;
    j["rho_p"] = rho_p_json;

    if (!opt.rho_only) {
        if (opt.s_list.empty()) throw CLI::ValidationError("--s", "required unless --rho-only");
        const auto s_tokens = split_list(opt.s_list);
        if (static_cast<int>(s_tokens.size()) != parts.rank())
            throw CLI::ValidationError("--s", "needs one entry per block");

        bool numeric = true;
        std::vector<token_value> s_vals;
        for (const auto& t : s_tokens) {
            auto tok = parse_token(t);
            if (!tok) throw CLI::ValidationError("--s", "bad token '" + t + "'");
            numeric = numeric && tok->numeric;
            s_vals.push_back(*tok);
        }
        std::vector<std::vector<token_value>> alpha_vals;
        for (int k = 0; k < parts.rank(); ++k) {
            std::vector<token_value> block;
            if (static_cast<int>(opt.alpha_lists.size()) >= k + 1 &&
                !opt.alpha_lists[static_cast<std::size_t>(k)].empty()) {
                const auto toks = split_list(opt.alpha_lists[static_cast<std::size_t>(k)]);
                if (static_cast<int>(toks.size()) != parts.part(k))
                    throw CLI::ValidationError("--alpha" + std::to_string(k + 1),
                                               "needs " + std::to_string(parts.part(k)) + " entries");
                for (const auto& t : toks) {
                    auto tok = parse_token(t);
                    if (!tok) throw CLI::ValidationError("--alpha" + std::to_string(k + 1),
                                                         "bad token '" + t + "'");
                    numeric = numeric && tok->numeric;
                    block.push_back(*tok);
                }
            } else {
                for (int i = 1; i <= parts.part(k); ++i) {
                    token_value tv;
                    if (parts.part(k) == 1) {
                        tv.numeric = true;
                        tv.value = 0.0;
                    } else {
                        tv.numeric = false;
                        tv.expr = affine_arg(symbol::alpha_var(k + 1, i));
                    }
                    block.push_back(tv);
                    numeric = numeric && tv.numeric;
                }
            }
            alpha_vals.push_back(std::move(block));
        }

        if (numeric) {
            std::vector<cdouble> s_num;
            for (const auto& t : s_vals) s_num.push_back(t.value);
            spectral_point s(parts, s_num); // throws on constraint violation
            std::vector<cusp_form_handle> forms;
            for (int k = 0; k < parts.rank(); ++k) {
                std::vector<cdouble> entries;
                for (const auto& t : alpha_vals[static_cast<std::size_t>(k)]) entries.push_back(t.value);
                forms.push_back(parts.part(k) == 1
                                    ? cusp_form_handle::trivial()
                                    : borel_backed_form(langlands_parameter(entries)));
            }
            const auto pa = parabolic_alpha(parts, s);
            const auto ep = eisenstein_parameters(parts, forms, s);
            const auto ev = laplace_eigenvalue(ep);
            text += "parabolic alpha      = (";
            json pa_json = json::array(), ep_json = json::array();
            for (int i = 0; i < n; ++i) {
                text += (i ? ", " : "") + fmt(pa[i]);
                pa_json.push_back({pa[i].real(), pa[i].imag()});
            }
            text += ")\neisenstein parameter = (";
            for (int i = 0; i < n; ++i) {
                text += (i ? ", " : "") + fmt(ep[i]);
                ep_json.push_back({ep[i].real(), ep[i].imag()});
            }
            text += ")\nlaplace eigenvalue   = " + fmt(ev) + "\n";
            j["parabolic_alpha"] = pa_json;
            j["eisenstein_parameter"] = ep_json;
            j["laplace_eigenvalue"] = {ev.real(), ev.imag()};
        } else {
            // symbolic display
            text += "parabolic alpha      = (";
            json pa_json = json::array(), ep_json = json::array();
            for (int k = 0, slot = 0; k < parts.rank(); ++k) {
                const int nk = parts.part(k);
                for (int t = 1; t <= nk; ++t, ++slot) {
                    affine_arg e = s_vals[static_cast<std::size_t>(k)].numeric
                                       ? affine_arg(symbol::s_var(k + 1))
                                       : s_vals[static_cast<std::size_t>(k)].expr;
                    const rational shift = rational(2 * t - 1 - nk, 2) - parts.rho_p(k);
                    e += affine_arg(shift);
                    text += (slot ? ", " : "") + e.latex();
                    pa_json.push_back(e.latex());
                }
            }
            text += ")\neisenstein parameter = (";
            for (int k = 0, slot = 0; k < parts.rank(); ++k) {
                for (int i = 0; i < parts.part(k); ++i, ++slot) {
                    const auto& av = alpha_vals[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
                    affine_arg e = s_vals[static_cast<std::size_t>(k)].numeric
                                       ? affine_arg(symbol::s_var(k + 1))
                                       : s_vals[static_cast<std::size_t>(k)].expr;
                    if (av.numeric) {
                        if (av.value != cdouble(0.0)) {
                            text += (slot ? ", " : "") + fmt(av.value) + "+" + e.latex();
                            ep_json.push_back(fmt(av.value) + "+" + e.latex());
                            continue;
                        }
                    } else {
                        e += av.expr;
                    }
                    text += (slot ? ", " : "") + e.latex();
                    ep_json.push_back(e.latex());
                }
            }
            text += ")\n";
            j["parabolic_alpha"] = pa_json;
            j["eisenstein_parameter"] = ep_json;
        }
    }
    emit(opt.format == "json" ? j.dump(2) + "\n" : text, opt.out_path);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eisenlab: Fourier-Whittaker data of Langlands Eisenstein series for SL(n,Z)"};
    app.require_subcommand(1);

    first_coeff_options fc;
    auto* cmd_fc = app.add_subcommand("first-coeff",
                                      "first Fourier coefficient as a product of completed L-factors");
    cmd_fc->add_option("--n", fc.n, "degree n")->required();
    cmd_fc->add_option("--partition", fc.partition, "partition n_1,...,n_r");
    cmd_fc->add_option("--s", fc.s_list, "spectral values or symbol names, one per block");
    fc.alpha_lists.resize(8);
    for (int k = 1; k <= 8; ++k)
        cmd_fc->add_option("--alpha" + std::to_string(k), fc.alpha_lists[static_cast<std::size_t>(k - 1)],
                           "Langlands parameter of block " + std::to_string(k));
    cmd_fc->add_flag("--derive", fc.derive, "print the Borel-substitution derivation");
    cmd_fc->add_flag("--verify", fc.verify, "check the grouped product against the derivation");
    cmd_fc->add_flag("--all-partitions", fc.all_partitions, "sweep every partition of n");
    cmd_fc->add_flag("--mutate-grouping", fc.mutate, "corrupt the case table (self-test)")
        ->group("");
    cmd_fc->add_option("--format", fc.format, "latex|json")->check(CLI::IsMember({"latex", "json"}));
    cmd_fc->add_option("--out", fc.out_path, "write output to file");

    hecke_options hk;
    auto* cmd_hk = app.add_subcommand("hecke", "Hecke eigenvalues of Eisenstein series");
    cmd_hk->add_option("--n", hk.n, "degree n");
    cmd_hk->add_option("--alpha", hk.alpha_list, "Langlands parameter (numeric), Borel series");
    cmd_hk->add_option("--partition", hk.partition, "partition for the general series");
    cmd_hk->add_option("--s", hk.s_list, "numeric spectral values, one per block");
    hk.alpha_lists.resize(8);
    for (int k = 1; k <= 8; ++k)
        cmd_hk->add_option("--alpha" + std::to_string(k), hk.alpha_lists[static_cast<std::size_t>(k - 1)],
                           "numeric parameter of the block-" + std::to_string(k) + " form");
    cmd_hk->add_option("--m", hk.m_spec, "index m, or range lo:hi")->required();
    cmd_hk->add_option("--format", hk.format, "table|json")->check(CLI::IsMember({"table", "json"}));
    cmd_hk->add_option("--out", hk.out_path, "write output to file");

    whittaker_options wh;
    auto* cmd_wh = app.add_subcommand("whittaker", "degree-2 Whittaker function W_{2,alpha}(y)");
    cmd_wh->add_option("--alpha", wh.alpha, "order (complex)")->required();
    cmd_wh->add_option("--y", wh.y, "argument y > 0")->required();
    cmd_wh->add_flag("--check-bessel", wh.check_bessel, "compare against the K-Bessel oracle");
    cmd_wh->add_option("--format", wh.format, "table|json")->check(CLI::IsMember({"table", "json"}));
    cmd_wh->add_option("--out", wh.out_path, "write output to file");

    verify_gl2_options vg;
    auto* cmd_vg = app.add_subcommand("verify-gl2",
                                      "verify the degree-2 Fourier expansion term by term");
    cmd_vg->add_option("--s", vg.s, "spectral parameter, Re(s) > 1")->required();
    cmd_vg->add_option("--y", vg.y, "height y > 0");
    cmd_vg->add_option("--nmax", vg.n_max, "largest coefficient index to check");
    cmd_vg->add_option("--N", vg.cutoff, "lattice cutoff");
    cmd_vg->add_option("--tol", vg.tol, "per-term relative tolerance");
    cmd_vg->add_option("--format", vg.format, "table|json")->check(CLI::IsMember({"table", "json"}));
    cmd_vg->add_option("--out", vg.out_path, "write output to file");

    params_options pr;
    auto* cmd_pr = app.add_subcommand("params", "Langlands parameters and eigenvalue data");
    cmd_pr->add_option("--n", pr.n, "degree n");
    cmd_pr->add_option("--partition", pr.partition, "partition n_1,...,n_r")->required();
    cmd_pr->add_option("--s", pr.s_list, "spectral values or symbol names");
    pr.alpha_lists.resize(8);
    for (int k = 1; k <= 8; ++k)
        cmd_pr->add_option("--alpha" + std::to_string(k), pr.alpha_lists[static_cast<std::size_t>(k - 1)],
                           "parameter of block " + std::to_string(k));
    cmd_pr->add_flag("--rho-only", pr.rho_only, "print only the rho and rho_P tables");
    cmd_pr->add_option("--format", pr.format, "table|json")->check(CLI::IsMember({"table", "json"}));
    cmd_pr->add_option("--out", pr.out_path, "write output to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return exit_usage;
    }

    try {
        if (cmd_fc->parsed()) return run_first_coeff(fc);
        if (cmd_hk->parsed()) return run_hecke(hk);
        if (cmd_wh->parsed()) return run_whittaker(wh);
        if (cmd_vg->parsed()) return run_verify_gl2(vg);
        if (cmd_pr->parsed()) return run_params(pr);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return exit_consistency;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification;
    }
    return exit_usage;
}
