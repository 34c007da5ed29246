#pragma once

#include <stdexcept>
#include <string>

namespace discordlab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square input, incompatible factorizations, bad vector length.
struct DimensionError : Error {
    using Error::Error;
};

/// Scalar parameter outside its admissible interval (z, f, d, ...).
struct RangeError : Error {
    using Error::Error;
};

/// Eigeniteration failed to reach the off-diagonal threshold within the sweep cap.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
    double residual;
};

/// Base class for density-matrix admission failures.
struct ValidationError : Error {
    using Error::Error;
};

struct HermiticityError : ValidationError {
    using ValidationError::ValidationError;
};

struct TraceError : ValidationError {
    using ValidationError::ValidationError;
};

struct PositivityError : ValidationError {
    using ValidationError::ValidationError;
};

/// Malformed state file (syntax, shape, or non-finite numbers).
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace discordlab
