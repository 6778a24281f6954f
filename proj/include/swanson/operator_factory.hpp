#pragma once

#include <cmath>
#include <utility>

#include "swanson/closed_forms.hpp"
#include "swanson/fock_matrix.hpp"
#include "swanson/fock_ops.hpp"
#include "swanson/hermitian_eigen.hpp"
#include "swanson/matrix_exp.hpp"

namespace swanson {

namespace detail {

/// sinh(t)/t with a series fallback for the removable singularity.
inline double sinhc(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 + t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sinh(t) / t;
}

} // namespace detail

/// H = omega (a^dagger a + 1/2) + alpha a^2 + beta a^dagger^2.
inline FockMatrix build_hamiltonian(const OscillatorParams& p, std::size_t dim) {
    if (dim < 4) throw DimensionError("build_hamiltonian: dim must be >= 4");
    const FockMatrix a = ladder_a(dim);
    const FockMatrix ad = a.adjoint();
    return p.omega * (ad * a + 0.5 * FockMatrix::identity(dim)) + p.alpha * (a * a) +
           p.beta * (ad * ad);
}

/// A = epsilon a^dagger a + eta (a^2 + a^dagger^2); Hermitian since eta is real.
inline FockMatrix build_generator(const OscillatorParams& p, const MetricChoice& c,
                                  std::size_t dim) {
    const MetricScalars ms = metric_scalars(p, c);
    const FockMatrix a = ladder_a(dim);
    const FockMatrix ad = a.adjoint();
    return ms.epsilon * (ad * a) + ms.eta * (a * a + ad * ad);
}

struct MetricTriple {
    FockMatrix s;
    FockMatrix s_inv;
    FockMatrix theta; // S^2
};

/// S = exp(A), S^-1 = exp(-A), Theta = S^2.
inline MetricTriple build_metric(const OscillatorParams& p, const MetricChoice& c,
                                 std::size_t dim) {
    const FockMatrix a = build_generator(p, c, dim);
    FockMatrix s = matrix_exp(a);
    FockMatrix s_inv = matrix_exp(-1.0 * a);
    FockMatrix theta = s * s;
    return {std::move(s), std::move(s_inv), std::move(theta)};
}

/// h_S = S H S^-1.
inline FockMatrix hermitize(const OscillatorParams& p, const MetricChoice& c, std::size_t dim) {
    const MetricTriple m = build_metric(p, c, dim);
    return m.s * build_hamiltonian(p, dim) * m.s_inv;
}

/// The closed form 1/2 (mu p^2 + nu x^2) assembled from x-hat, p-hat.
inline FockMatrix closed_form_h(const OscillatorParams& p, const MetricChoice& c,
                                std::size_t dim) {
    const auto [mu, nu] = mu_nu(p, c);
    const FockMatrix x = position_op(dim, p.omega);
    const FockMatrix pm = momentum_op(dim, p.omega);
    return 0.5 * (mu * (pm * pm) + nu * (x * x));
}

/// x = cosh(theta) x-hat + (i/omega) (eps - 2 eta) sinhc(theta) p-hat,
/// p = cosh(theta) p-hat - i omega (eps + 2 eta) sinhc(theta) x-hat.
/// Not Hermitian in general.
inline std::pair<FockMatrix, FockMatrix> transformed_xp(const OscillatorParams& p,
                                                        const MetricChoice& c, std::size_t dim) {
    const MetricScalars ms = metric_scalars(p, c);
    const double theta = ms.epsilon >= 0 ? std::sqrt(ms.theta_sq) : -std::sqrt(ms.theta_sq);
    const double ch = std::cosh(theta);
    const double sc = detail::sinhc(theta);
    const FockMatrix xh = position_op(dim, p.omega);
    const FockMatrix ph = momentum_op(dim, p.omega);
    FockMatrix x = ch * xh + Complex(0.0, (ms.epsilon - 2.0 * ms.eta) * sc / p.omega) * ph;
    FockMatrix pt = ch * ph + Complex(0.0, -p.omega * (ms.epsilon + 2.0 * ms.eta) * sc) * xh;
    return {std::move(x), std::move(pt)};
}

/// The same pair via the direct similarity transforms S^-1 x-hat S, S^-1 p-hat S.
/// Numerically meaningful only where the truncated metric is well conditioned.
inline std::pair<FockMatrix, FockMatrix> similarity_xp(const OscillatorParams& p,
                                                       const MetricChoice& c, std::size_t dim) {
    const MetricTriple m = build_metric(p, c, dim);
    FockMatrix x = m.s_inv * position_op(dim, p.omega) * m.s;
    FockMatrix pt = m.s_inv * momentum_op(dim, p.omega) * m.s;
    return {std::move(x), std::move(pt)};
}

/// O = omega^2 x^2 (1 + z_eff) + p^2 (1 - z_eff) built from the transformed
/// x, p; on the mirrored branch z_eff = -z reproduces the swapped weights.
inline FockMatrix observable_O(const OscillatorParams& p, const MetricChoice& c,
                               std::size_t dim) {
    const double z = c.effective_z();
    const auto [x, pt] = transformed_xp(p, c, dim);
    return (p.omega * p.omega * (1.0 + z)) * (x * x) + (1.0 - z) * (pt * pt);
}

/// The manifestly Hermitian counterpart built from x-hat, p-hat.
inline FockMatrix observable_O_hat(const OscillatorParams& p, const MetricChoice& c,
                                   std::size_t dim) {
    const double z = c.effective_z();
    const FockMatrix xh = position_op(dim, p.omega);
    const FockMatrix ph = momentum_op(dim, p.omega);
    return (p.omega * p.omega * (1.0 + z)) * (xh * xh) + (1.0 - z) * (ph * ph);
}

/// Printed special-case metric at effective z in {-1, 0, +1}.  The z = +-1
/// forms are exponentials of pure x-hat^2 / p-hat^2 terms; the scalar factor
/// exp(-eps) restores the constant dropped when the exponent was written
/// without its -omega/2 shift, so the result equals exp(2A) analytically.
inline FockMatrix special_case_theta(const OscillatorParams& p, const MetricChoice& c,
                                     std::size_t dim) {
    detail::require_valid(p, c);
    if (p.hermitian()) return FockMatrix::identity(dim);
    const double z = c.effective_z();
    if (z == 0.0) {
        FockMatrix t(dim);
        const double ratio = p.alpha / p.beta;
        for (std::size_t n = 0; n < dim; ++n) t(n, n) = std::pow(ratio, 0.5 * double(n));
        return t;
    }
    if (std::abs(1.0 - z * z) < detail::kEndpointTol) {
        const double eps = detail::epsilon_at(p, z);
        if (z > 0.0) {
            const FockMatrix xh = position_op(dim, p.omega);
            const double coef = -(p.alpha - p.beta) / (p.omega - p.alpha - p.beta) * p.omega;
            return std::exp(-eps) * matrix_exp(coef * (xh * xh));
        }
        const FockMatrix ph = momentum_op(dim, p.omega);
        const double coef = (p.alpha - p.beta) / (p.omega + p.alpha + p.beta) / p.omega;
        return std::exp(-eps) * matrix_exp(coef * (ph * ph));
    }
    throw InvalidParameterError("special_case_theta: effective z must be one of -1, 0, +1");
}

/// Coefficients of h projected onto {a^dagger a + 1/2, a^2, a^dagger^2} over
/// the top-left sector (the three basis matrices are Frobenius-orthogonal).
struct QuadraticCoefficients {
    Complex u;
    Complex v;
    Complex w;
};

inline QuadraticCoefficients extract_quadratic(const FockMatrix& h, std::size_t sector) {
    const FockMatrix hp = h.project_sector(sector);
    const FockMatrix a = ladder_a(sector);
    const FockMatrix ad = a.adjoint();
    const FockMatrix b0 = ad * a + 0.5 * FockMatrix::identity(sector);
    const FockMatrix b1 = a * a;
    const FockMatrix b2 = ad * ad;
    auto inner = [](const FockMatrix& x, const FockMatrix& y) {
        Complex s{};
        for (std::size_t i = 0; i < x.dim(); ++i)
            for (std::size_t j = 0; j < x.dim(); ++j) s += std::conj(x(i, j)) * y(i, j);
        return s;
    };
    auto norm2 = [&](const FockMatrix& x) { return inner(x, x).real(); };
    return {inner(b0, hp) / norm2(b0), inner(b1, hp) / norm2(b1), inner(b2, hp) / norm2(b2)};
}

/// Everything assembled for one (params, choice, truncation).
struct OperatorSet {
    OscillatorParams params;
    MetricChoice choice;
    std::size_t dim;
    std::size_t sector;
    FockMatrix h;
    FockMatrix generator;
    FockMatrix s;
    FockMatrix s_inv;
    FockMatrix theta;
    FockMatrix h_s;
    FockMatrix x_transformed;
    FockMatrix p_transformed;
    FockMatrix o_combination;
};

inline OperatorSet build_operator_set(const OscillatorParams& p, const MetricChoice& c,
                                      std::size_t dim) {
    FockMatrix h = build_hamiltonian(p, dim);
    FockMatrix gen = build_generator(p, c, dim);
    MetricTriple m = build_metric(p, c, dim);
    FockMatrix h_s = m.s * h * m.s_inv;
    auto [x, pt] = transformed_xp(p, c, dim);
    FockMatrix o = observable_O(p, c, dim);
    return {p,      c,
            dim,    dim / 4,
            std::move(h),     std::move(gen),
            std::move(m.s),   std::move(m.s_inv),
            std::move(m.theta), std::move(h_s),
            std::move(x),     std::move(pt),
            std::move(o)};
}

/// Sorted spectrum of the Hermitian part of h, computed on the top block
/// dim - max(1, dim/8) to keep the corrupted truncation corner out.
inline SpectralDecomposition spectrum_of(const FockMatrix& h) {
    const std::size_t dim = h.dim();
    const std::size_t drop = std::max<std::size_t>(1, dim / 8);
    const std::size_t block = dim > drop + 1 ? dim - drop : dim;
    FockMatrix sym = 0.5 * (h + h.adjoint());
    return hermitian_eigen(sym.project_sector(block));
}

} // namespace swanson
