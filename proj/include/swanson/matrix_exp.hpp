#pragma once

#include <cmath>
#include <cstddef>

#include "swanson/fock_matrix.hpp"

namespace swanson {

/// exp(m) by scaling-and-squaring: scale so ||m/2^s||_F <= 0.5, apply a
/// fixed-order Taylor kernel (order 18; remainder below 1e-21 at norm 0.5),
/// square s times.  exp(0) == I exactly.
inline FockMatrix matrix_exp(const FockMatrix& m) {
    if (!m.is_finite()) throw OverflowError("matrix_exp: input has non-finite entries");
    const std::size_t n = m.dim();
    const double norm = m.frobenius_norm();

    int s = 0;
    if (norm > 0.5) s = int(std::ceil(std::log2(norm / 0.5)));

    FockMatrix scaled = m * (1.0 / std::ldexp(1.0, s));

    constexpr int kOrder = 18;
    FockMatrix result = FockMatrix::identity(n);
    FockMatrix term = FockMatrix::identity(n);
    for (int k = 1; k <= kOrder; ++k) {
        term = term * scaled;
        term *= Complex(1.0 / double(k));
        result += term;
    }

    for (int k = 0; k < s; ++k) {
        result = result * result;
        if (!result.is_finite())
            throw OverflowError("matrix_exp: intermediate entries exceed floating-point range");
    }
    return result;
}

} // namespace swanson
