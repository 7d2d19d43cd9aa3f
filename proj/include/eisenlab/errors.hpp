#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace eisenlab {

// Pole of a special function, carried as a first-class error with the pole
// location so callers can react structurally instead of seeing an infinity.
class pole_error : public std::domain_error {
public:
    pole_error(const std::string& what, std::complex<double> where)
        : std::domain_error(what), location_(where) {}

    std::complex<double> location() const noexcept { return location_; }

private:
    std::complex<double> location_;
};

// Quadrature did not reach the requested tolerance within the subdivision
// budget; carries the error estimate that was actually achieved.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}

    double achieved_error() const noexcept { return achieved_; }

private:
    double achieved_;
};

// The symbolic cancellation in the first-coefficient derivation left a
// residue it must not leave. Indicates a bug in the engine, not bad input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Numeric evaluation of a symbolic product failed: unbound symbol, an
// unevaluable factor kind, or a factor sitting on a pole/zero.
class eval_error : public std::runtime_error {
public:
    eval_error(const std::string& what, std::string factor)
        : std::runtime_error(what + ": " + factor), factor_(std::move(factor)) {}

    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

} // namespace eisenlab
