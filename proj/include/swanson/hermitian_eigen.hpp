#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "swanson/fock_matrix.hpp"

namespace swanson {

struct SpectralDecomposition {
    std::vector<double> eigenvalues; // ascending
    FockMatrix eigenvectors;         // column k pairs with eigenvalue k
};

namespace detail {

inline double offdiag_norm(const FockMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

} // namespace detail

/// Cyclic Jacobi for Hermitian matrices with complex plane rotations.
/// Converged when the off-diagonal Frobenius mass drops below 1e-13 ||m||_F;
/// at most 100 sweeps.
inline SpectralDecomposition hermitian_eigen(const FockMatrix& m) {
    const std::size_t n = m.dim();
    const double norm = m.frobenius_norm();
    if (hermiticity_residual(m) > 1e-10 * std::max(norm, 1e-300))
        throw NotHermitianError("hermitian_eigen: input is not Hermitian");

    FockMatrix a = m;
    FockMatrix v = FockMatrix::identity(n);
    const double threshold = 1e-13 * std::max(norm, 1e-300);

    bool converged = detail::offdiag_norm(a) < threshold;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sp = s * phase;
                const Complex spc = s * std::conj(phase);
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex colp = a(r, p), colq = a(r, q);
                    a(r, p) = c * colp - spc * colq;
                    a(r, q) = sp * colp + c * colq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex rowp = a(p, r), rowq = a(q, r);
                    a(p, r) = c * rowp - sp * rowq;
                    a(q, r) = spc * rowp + c * rowq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex vp = v(r, p), vq = v(r, q);
                    v(r, p) = c * vp - spc * vq;
                    v(r, q) = sp * vp + c * vq;
                }
            }
        }
        converged = detail::offdiag_norm(a) < threshold;
    }
    if (!converged) throw ConvergenceError("hermitian_eigen: no convergence within 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });

    SpectralDecomposition dec{std::vector<double>(n), FockMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        dec.eigenvalues[k] = diag[order[k]];
        for (std::size_t r = 0; r < n; ++r) dec.eigenvectors(r, k) = v(r, order[k]);
    }
    return dec;
}

} // namespace swanson
