#pragma once

#include <cmath>
#include <utility>

#include "swanson/errors.hpp"

namespace swanson {

/// The Hamiltonian triple (omega, alpha, beta) with the derived frequency
/// Omega = sqrt(omega^2 - 4 alpha beta).  Requires a real spectrum;
/// Omega == 0 is the exceptional point.
struct OscillatorParams {
    double omega;
    double alpha;
    double beta;
    double big_omega;

    OscillatorParams(double omega_, double alpha_, double beta_)
        : omega(omega_), alpha(alpha_), beta(beta_), big_omega(0.0) {
        if (!(omega > 0.0)) throw InvalidParameterError("OscillatorParams: omega must be positive");
        const double disc = omega * omega - 4.0 * alpha * beta;
        if (disc < 0.0)
            throw InvalidParameterError("OscillatorParams: omega^2 - 4 alpha beta must be >= 0");
        big_omega = std::sqrt(disc);
    }

    bool hermitian() const { return alpha == beta; }
    bool at_exceptional_point() const { return big_omega == 0.0; }
};

enum class Branch { Standard, Mirrored };

inline const char* branch_name(Branch b) { return b == Branch::Standard ? "standard" : "mirrored"; }

/// Metric parameter z in [-1, 1] plus the branch selector.  The mirrored
/// branch is the z -> -z replacement, so every formula is evaluated at
/// effective_z().
struct MetricChoice {
    double z;
    Branch branch;

    MetricChoice(double z_, Branch branch_ = Branch::Standard) : z(z_), branch(branch_) {
        if (!(std::abs(z) <= 1.0)) throw InvalidParameterError("MetricChoice: |z| must be <= 1");
    }

    double effective_z() const { return branch == Branch::Standard ? z : -z; }
};

struct MetricScalars {
    double epsilon;
    double eta;      // eta = z * epsilon / 2
    double theta_sq; // epsilon^2 - 4 eta^2 = epsilon^2 (1 - z^2)
    double mu;
    double nu;
    bool valid;
};

struct SingularBand {
    double z_minus;
    double z_plus;
};

struct ClassicalQuantities {
    double mass;        // 1 / mu(z)
    double e_classical; // nu(z) A^2 / 2
    double amplitude;
};

/// z_pm = ((alpha+beta) omega +- (alpha-beta) Omega) / (omega^2 + (alpha-beta)^2),
/// ordered so z_minus <= z_plus.  No band exists for alpha == beta.
inline SingularBand singular_band(const OscillatorParams& p) {
    if (p.hermitian()) throw HermitianCaseError("singular_band: alpha == beta has no singular band");
    const double denom = p.omega * p.omega + (p.alpha - p.beta) * (p.alpha - p.beta);
    const double base = (p.alpha + p.beta) * p.omega;
    const double spread = (p.alpha - p.beta) * p.big_omega;
    const double a = (base - spread) / denom;
    const double b = (base + spread) / denom;
    return {std::min(a, b), std::max(a, b)};
}

/// True iff the effective z lies strictly outside the singular band (the
/// boundary counts as invalid).  Equivalent to the arctanh argument in the
/// epsilon formula having magnitude < 1.
inline bool is_valid(const OscillatorParams& p, const MetricChoice& c) {
    if (p.hermitian()) return true;
    const SingularBand band = singular_band(p);
    const double z = c.effective_z();
    return z < band.z_minus || z > band.z_plus;
}

namespace detail {

constexpr double kEndpointTol = 1e-9; // |1 - z^2| below this routes to the z = +-1 closed forms

/// epsilon at effective z; the |z| = 1 limits use the closed-form special cases.
inline double epsilon_at(const OscillatorParams& p, double z) {
    // alpha == beta needs no rotation; the general formula would divide
    // 0 by 0 where alpha + beta - z omega vanishes
    if (p.hermitian()) return 0.0;
    const double one_minus_z2 = 1.0 - z * z;
    if (std::abs(one_minus_z2) < kEndpointTol) {
        if (z > 0.0) return -(p.alpha - p.beta) / (2.0 * (p.omega - p.alpha - p.beta));
        return (p.alpha - p.beta) / (2.0 * (p.omega + p.alpha + p.beta));
    }
    const double s = std::sqrt(one_minus_z2);
    const double arg = (p.alpha - p.beta) * s / (p.alpha + p.beta - z * p.omega);
    return std::atanh(arg) / (2.0 * s);
}

/// (mu, nu) at effective z; |z| = 1 limits use the case (ii)/(iii) forms.
inline std::pair<double, double> mu_nu_at(const OscillatorParams& p, double z) {
    const double om2 = p.big_omega * p.big_omega;
    const double one_minus_z2 = 1.0 - z * z;
    if (std::abs(one_minus_z2) < kEndpointTol) {
        if (z > 0.0) {
            const double d = p.omega - p.alpha - p.beta;
            return {d / p.omega, p.omega * om2 / d};
        }
        const double d = p.omega + p.alpha + p.beta;
        return {om2 / (p.omega * d), p.omega * d};
    }
    const double w = p.alpha + p.beta - z * p.omega;
    const double root = std::sqrt(1.0 - one_minus_z2 * (p.alpha - p.beta) * (p.alpha - p.beta) / (w * w));
    const double mu = (-z * (p.alpha + p.beta) + p.omega - w * root) / ((1.0 + z) * p.omega);
    const double nu = -p.omega * (z * (p.alpha + p.beta) - p.omega - w * root) / (1.0 - z);
    return {mu, nu};
}

inline void require_valid(const OscillatorParams& p, const MetricChoice& c) {
    if (is_valid(p, c)) return;
    if (p.at_exceptional_point())
        throw ExceptionalPointError("metric requested at the collapsed band of an exceptional point");
    throw InvalidRegionError("metric parameter z lies inside the singular band");
}

} // namespace detail

/// mu(z), nu(z); satisfies mu * nu == Omega^2 identically.
inline std::pair<double, double> mu_nu(const OscillatorParams& p, const MetricChoice& c) {
    detail::require_valid(p, c);
    return detail::mu_nu_at(p, c.effective_z());
}

inline MetricScalars metric_scalars(const OscillatorParams& p, const MetricChoice& c) {
    detail::require_valid(p, c);
    const double z = c.effective_z();
    const double eps = detail::epsilon_at(p, z);
    const double eta = z * eps / 2.0;
    const double theta_sq = eps * eps * (1.0 - z * z);
    const auto [mu, nu] = detail::mu_nu_at(p, z);
    return {eps, eta, theta_sq < 0.0 ? 0.0 : theta_sq, mu, nu, true};
}

/// Classical oscillator with mass 1/mu(z): E_cl = nu(z) A^2 / 2.
inline ClassicalQuantities classical(const OscillatorParams& p, const MetricChoice& c,
                                     double amplitude) {
    if (!(amplitude > 0.0)) throw InvalidParameterError("classical: amplitude must be positive");
    const auto [mu, nu] = mu_nu(p, c);
    return {1.0 / mu, nu * amplitude * amplitude / 2.0, amplitude};
}

} // namespace swanson
