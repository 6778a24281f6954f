#pragma once

#include <stdexcept>
#include <string>

namespace swanson {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Truncation dimension below the minimum, or mismatched operand shapes.
struct DimensionError : Error {
    using Error::Error;
};

// Hamiltonian/oscillator parameters outside the admissible domain.
struct InvalidParameterError : Error {
    using Error::Error;
};

// Eigensolver input fails the hermiticity precondition.
struct NotHermitianError : Error {
    using Error::Error;
};

// Iteration cap reached without meeting the convergence threshold.
struct ConvergenceError : Error {
    using Error::Error;
};

// An intermediate or final entry left the finite floating-point range.
struct OverflowError : Error {
    using Error::Error;
};

// Metric parameter z lies inside (or on the boundary of) the singular band.
struct InvalidRegionError : Error {
    using Error::Error;
};

// Evaluation requested at the collapsed band of an exceptional point.
struct ExceptionalPointError : Error {
    using Error::Error;
};

// alpha == beta: no singular band exists.
struct HermitianCaseError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace swanson
