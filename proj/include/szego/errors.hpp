#ifndef SZEGO_ERRORS_HPP
#define SZEGO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace szego {

// Invalid inputs (bad coefficients, out-of-range parameters, empty sets).
// The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCoefficientError : DomainError {
    using DomainError::DomainError;
};

// Spectral parameter outside the gap arc R_alpha.
struct OutOfGapError : DomainError {
    using DomainError::DomainError;
};

// w does not satisfy Re w > sqrt(1-A^2), |Im w| < A.
struct AdmissibilityError : DomainError {
    using DomainError::DomainError;
};

struct SizeError : DomainError {
    using DomainError::DomainError;
};

struct UnsupportedMeasureError : DomainError {
    using DomainError::DomainError;
};

struct NotHyperbolicError : DomainError {
    using DomainError::DomainError;
};

struct SingularityError : DomainError {
    using DomainError::DomainError;
};

// Numerical pipelines disagree or a root leaves the unit circle beyond
// tolerance. The CLI maps this to exit code 2.
struct NumericalFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace szego

#endif
