#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hyperclass {

using cplx = std::complex<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point outside the domain of an evaluation, or parameters at a degeneracy.
struct DomainError : Error {
    using Error::Error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct PreconditionError : DomainError {
    using DomainError::DomainError;
};

// Iteration or quadrature failed to reach the requested accuracy.
struct ConvergenceError : Error {
    cplx best;
    double estimate;
    ConvergenceError(const std::string& what, cplx best_value, double err)
        : Error(what), best(best_value), estimate(err) {}
};

}  // namespace hyperclass
