#pragma once

#include <cmath>

#include "swanson/fock_matrix.hpp"

namespace swanson {

/// Annihilation operator: a[n-1, n] = sqrt(n).
inline FockMatrix ladder_a(std::size_t dim) {
    if (dim < 2) throw DimensionError("ladder_a: dim must be >= 2");
    FockMatrix a(dim);
    for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

/// Number operator a^dagger a = diag(0, 1, ..., dim-1), exact under truncation.
inline FockMatrix number_op(std::size_t dim) {
    FockMatrix n(dim);
    for (std::size_t k = 0; k < dim; ++k) n(k, k) = double(k);
    return n;
}

/// x = (a + a^dagger) / sqrt(2 omega); Hermitian by construction.
inline FockMatrix position_op(std::size_t dim, double omega) {
    if (!(omega > 0.0)) throw InvalidParameterError("position_op: omega must be positive");
    if (dim < 2) throw DimensionError("position_op: dim must be >= 2");
    const double c = 1.0 / std::sqrt(2.0 * omega);
    FockMatrix x(dim);
    for (std::size_t n = 1; n < dim; ++n) {
        const double s = c * std::sqrt(double(n));
        x(n - 1, n) = s;
        x(n, n - 1) = s;
    }
    return x;
}

/// p = i sqrt(omega/2) (a^dagger - a); Hermitian by construction.
inline FockMatrix momentum_op(std::size_t dim, double omega) {
    if (!(omega > 0.0)) throw InvalidParameterError("momentum_op: omega must be positive");
    if (dim < 2) throw DimensionError("momentum_op: dim must be >= 2");
    const double c = std::sqrt(omega / 2.0);
    FockMatrix p(dim);
    for (std::size_t n = 1; n < dim; ++n) {
        const double s = c * std::sqrt(double(n));
        p(n - 1, n) = Complex(0.0, -s);
        p(n, n - 1) = Complex(0.0, s);
    }
    return p;
}

} // namespace swanson
