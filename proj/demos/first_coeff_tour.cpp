// Walks the first-coefficient machinery: formulas for every partition of a
// small degree, one derivation trace, and the numeric degree-2 cross-check.
#include <cstdio>
#include <eisenlab/eisenlab.hpp>

using namespace eisenlab;

int main() {
    std::printf("first coefficients for n = 4\n");
    const std::vector<std::vector<int>> partitions = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    for (const auto& pvec : partitions) {
        parabolic_data parts(pvec);
        const auto forms = generic_forms(parts);
        const auto grouped = grouped_first_coeff(parts, forms);
        const auto check = verify_grouping(parts, forms);
        std::printf("  (");
        for (std::size_t i = 0; i < pvec.size(); ++i) std::printf("%s%d", i ? "," : "", pvec[i]);
        std::printf("): %s   [%s]\n", grouped.latex().c_str(), check.ok ? "verified" : "MISMATCH");
    }

    // the degree-2 Borel product evaluates to 1/zeta*(2s)
    const double s = 3.0;
    std::map<symbol, cdouble> bindings{{symbol::alpha_var(1), cdouble(s - 0.5)},
                                       {symbol::alpha_var(2), cdouble(0.5 - s)}};
    const cdouble value = numeric_eval(borel_first_coeff(2), bindings);
    std::printf("\nborel n=2 at alpha=(s-1/2,1/2-s), s=3: %.15g (1/zeta*(6) = %.15g)\n",
                value.real(), 1.0 / zeta_star(cdouble(6.0)).real());
    return 0;
}
