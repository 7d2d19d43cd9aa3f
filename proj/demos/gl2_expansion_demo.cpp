// Compares lattice-sampled Fourier coefficients of the degree-2 Eisenstein
// series against the closed-form expansion at one spectral point.
#include <cstdio>
#include <eisenlab/eisenlab.hpp>

using namespace eisenlab;

int main() {
    const auto report = run_verification(cdouble(3.0), 1.0, 3, 200, {}, 1e-3);
    std::fputs(format_table(report).c_str(), stdout);
    return report.pass ? 0 : 1;
}
