#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "swanson/operator_factory.hpp"

namespace swanson {

struct CheckEntry {
    std::string check;
    double z;
    Branch branch;
    double residual;
    double tolerance;
    bool passed;
};

struct SkippedPoint {
    double z;
    std::string reason;
};

struct VerificationReport {
    OscillatorParams params;
    std::size_t dim;
    std::size_t sector;
    Branch branch;
    std::vector<double> grid;
    std::vector<CheckEntry> entries;
    std::vector<SkippedPoint> skipped;

    std::size_t passed_count() const {
        std::size_t n = 0;
        for (const auto& e : entries) n += e.passed ? 1 : 0;
        return n;
    }
    std::size_t failed_count() const { return entries.size() - passed_count(); }
    bool all_passed() const { return failed_count() == 0; }
};

struct EdgeProbe {
    double offset;
    double epsilon_lower;        // at z = z_minus - offset (valid side)
    double max_theta_entry;      // largest |Theta| entry there; range-max sentinel on overflow
    double epsilon_upper;        // at z = z_plus + offset
    double log_min_theta_eigen;  // log of smallest Theta eigenvalue above z_plus
};

struct TransitionTable {
    double z;
    Branch branch;
    std::vector<std::vector<double>> elements; // |<m| x-hat |n>| over h_S eigenstates
};

struct ExceptionalPointReport {
    double omega;          // 2 sqrt(alpha beta)
    double z_minus;
    double z_plus;
    // spacing(E1 - E0) of h_S at omega (1 + delta), z = 0, against Omega(delta)
    std::vector<double> deltas;
    std::vector<double> spacings;
    std::vector<double> omegas;
};

namespace detail {

/// Residuals are relative: divided by the product of operand Frobenius
/// norms, floored at 1, so checks stay comparable across z where the metric
/// norm varies by many orders of magnitude.
inline double relative(double raw, double scale) { return raw / std::max(1.0, scale); }

inline double sector_norm(const FockMatrix& m, std::size_t k) {
    return m.project_sector(k).frobenius_norm();
}

} // namespace detail

inline std::vector<double> uniform_grid(double z_min, double z_max, std::size_t steps) {
    std::vector<double> g;
    g.reserve(steps);
    if (steps == 1) {
        g.push_back(z_min);
        return g;
    }
    for (std::size_t i = 0; i < steps; ++i)
        g.push_back(z_min + double(i) * (z_max - z_min) / double(steps - 1));
    return g;
}

/// Runs the identity suite over a z grid.  Per-point failures become report
/// entries; invalid z become skipped records.  Deterministic: points are
/// evaluated in grid order.
inline VerificationReport run_suite(const OscillatorParams& params, std::size_t dim,
                                    const std::vector<double>& z_grid, Branch branch) {
    if (dim < 8) throw DimensionError("run_suite: dim must be >= 8");
    const std::size_t sector = dim / 4;
    VerificationReport rep{params, dim, sector, branch, z_grid, {}, {}};

    const FockMatrix h = build_hamiltonian(params, dim);
    const FockMatrix h_dag = h.adjoint();
    const double h_norm = h.frobenius_norm();
    const double om = params.big_omega;

    auto add = [&](const std::string& name, double z, double residual, double tol) {
        rep.entries.push_back({name, z, branch, residual, tol, residual <= tol});
    };

    // Every member of the family S(z) H S(z)^-1 is an exact similarity of the
    // same truncated H, so they all share one spectrum.  Evaluate it through
    // the diagonally balanced z = 0 member, whose conditioning is harmless,
    // instead of amplifying roundoff by cond(S(z)) near the band edges.
    double spectrum_residual = -1.0;
    if (is_valid(params, MetricChoice(0.0))) {
        const MetricTriple m0 = build_metric(params, MetricChoice(0.0), dim);
        const SpectralDecomposition dec = spectrum_of(m0.s * h * m0.s_inv);
        double worst = 0.0;
        for (std::size_t n = 0; n < sector / 2 && n < dec.eigenvalues.size(); ++n)
            worst = std::max(worst, std::abs(dec.eigenvalues[n] - (double(n) + 0.5) * om));
        spectrum_residual = detail::relative(
            worst / om, m0.s.frobenius_norm() * m0.s_inv.frobenius_norm());
    }

    for (double z : z_grid) {
        const MetricChoice choice(z, branch);
        if (!is_valid(params, choice)) {
            const SingularBand band = singular_band(params);
            const double lo = branch == Branch::Standard ? band.z_minus : -band.z_plus;
            const double hi = branch == Branch::Standard ? band.z_plus : -band.z_minus;
            rep.skipped.push_back({z, "inside singular band [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "]"});
            continue;
        }

        const MetricScalars ms = metric_scalars(params, choice);
        const OperatorSet ops = build_operator_set(params, choice, dim);
        const double s_norm = ops.s.frobenius_norm();
        const double s_inv_norm = ops.s_inv.frobenius_norm();
        const double theta_norm = ops.theta.frobenius_norm();

        // quasi-Hermiticity: Theta H = H^dagger Theta
        {
            const FockMatrix resid = ops.theta * h - h_dag * ops.theta;
            add("quasi_hermiticity", z,
                detail::relative(detail::sector_norm(resid, sector), theta_norm * h_norm), 1e-8);
        }
        // h_S Hermitian
        add("h_s_hermiticity", z,
            detail::relative(hermiticity_residual(ops.h_s.project_sector(sector)),
                             s_norm * h_norm * s_inv_norm),
            1e-8);
        // spectrum of h_S vs (n + 1/2) Omega, via the balanced member when
        // one exists; otherwise directly from this point's h_S
        if (spectrum_residual >= 0.0) {
            add("spectrum", z, spectrum_residual, 1e-8);
        } else {
            const SpectralDecomposition dec = spectrum_of(ops.h_s);
            double worst = 0.0;
            for (std::size_t n = 0; n < sector / 2 && n < dec.eigenvalues.size(); ++n)
                worst = std::max(worst, std::abs(dec.eigenvalues[n] - (double(n) + 0.5) * om));
            add("spectrum", z, detail::relative(worst / om, s_norm * s_inv_norm), 1e-8);
        }
        // h_S vs the closed form (mu p^2 + nu x^2)/2
        {
            const FockMatrix resid = ops.h_s - closed_form_h(params, choice, dim);
            add("h_s_closed_form", z,
                detail::relative(detail::sector_norm(resid, sector),
                                 s_norm * h_norm * s_inv_norm),
                1e-8);
        }
        // O vs O-hat
        {
            const FockMatrix ohat = observable_O_hat(params, choice, dim);
            const FockMatrix resid = ops.o_combination - ohat;
            add("observable", z,
                detail::relative(detail::sector_norm(resid, sector),
                                 detail::sector_norm(ohat, sector)),
                1e-8);
        }
        // mu nu = Omega^2
        add("mu_nu_identity", z, std::abs(ms.mu * ms.nu - om * om) / (om * om), 1e-11);
        // closed-form special-case metric at z in {-1, 0, 1}
        if (z == 0.0 || std::abs(1.0 - z * z) < detail::kEndpointTol) {
            const FockMatrix closed = special_case_theta(params, choice, dim);
            const double raw = detail::sector_norm(ops.theta - closed, sector);
            const double ref = std::max(1.0, detail::sector_norm(closed, sector));
            add("special_case_metric", z, raw / ref, z == 0.0 ? 1e-10 : 1e-9);
        }
    }
    return rep;
}

/// Approaches both band edges along shrinking offsets.  Overflow while
/// exponentiating is reported as a range-max sentinel, not an error.
inline std::vector<EdgeProbe> probe_band_edges(const OscillatorParams& params, std::size_t dim,
                                               const std::vector<double>& offsets) {
    if (params.hermitian()) throw HermitianCaseError("probe_band_edges: alpha == beta");
    const SingularBand band = singular_band(params);
    std::vector<EdgeProbe> probes;
    for (double off : offsets) {
        EdgeProbe pr{off, 0.0, 0.0, 0.0, 0.0};
        {
            const double z = band.z_minus - off;
            pr.epsilon_lower = detail::epsilon_at(params, z);
            try {
                const MetricTriple m = build_metric(params, MetricChoice(z), dim);
                pr.max_theta_entry = m.theta.max_abs_entry();
            } catch (const OverflowError&) {
                pr.max_theta_entry = std::numeric_limits<double>::max();
            }
        }
        {
            const double z = band.z_plus + off;
            pr.epsilon_upper = detail::epsilon_at(params, z);
            // Theta = exp(2A): its smallest eigenvalue is exp(2 min eig A),
            // compared in the log domain to dodge underflow.
            const FockMatrix gen = build_generator(params, MetricChoice(z), dim);
            const SpectralDecomposition dec = hermitian_eigen(gen);
            pr.log_min_theta_eigen = 2.0 * dec.eigenvalues.front();
        }
        probes.push_back(pr);
    }
    return probes;
}

/// At omega = 2 sqrt(alpha beta) the band collapses; nearby, the low
/// eigenvalue spacing of h_S shrinks with Omega(delta).
inline ExceptionalPointReport exceptional_point_scan(double alpha, double beta, std::size_t dim,
                                                     const std::vector<double>& deltas = {1e-2,
                                                                                          1e-3}) {
    if (alpha == beta || alpha * beta <= 0.0)
        throw InvalidParameterError("exceptional_point_scan: need alpha != beta, alpha beta > 0");
    const double omega_ep = 2.0 * std::sqrt(alpha * beta);
    const OscillatorParams at_ep(omega_ep, alpha, beta);
    const SingularBand band = singular_band(at_ep);

    ExceptionalPointReport rep{omega_ep, band.z_minus, band.z_plus, deltas, {}, {}};
    for (double d : deltas) {
        const OscillatorParams p(omega_ep * (1.0 + d), alpha, beta);
        const FockMatrix h_s = hermitize(p, MetricChoice(0.0), dim);
        const SpectralDecomposition dec = spectrum_of(h_s);
        rep.spacings.push_back(dec.eigenvalues[1] - dec.eigenvalues[0]);
        rep.omegas.push_back(p.big_omega);
    }
    return rep;
}

/// |<m| x-hat |n>| over the eigenstates of h_S(z), m, n < sector.
inline TransitionTable transition_elements(const OscillatorParams& params,
                                           const MetricChoice& choice, std::size_t dim,
                                           std::size_t sector) {
    const FockMatrix h_s = hermitize(params, choice, dim);
    const SpectralDecomposition dec = spectrum_of(h_s);
    const std::size_t block = dec.eigenvectors.dim();
    const FockMatrix xh = position_op(dim, params.omega).project_sector(block);

    TransitionTable table{choice.z, choice.branch, {}};
    table.elements.assign(sector, std::vector<double>(sector, 0.0));
    for (std::size_t m = 0; m < sector; ++m) {
        for (std::size_t n = 0; n < sector; ++n) {
            Complex s{};
            for (std::size_t i = 0; i < block; ++i)
                for (std::size_t j = 0; j < block; ++j)
                    s += std::conj(dec.eigenvectors(i, m)) * xh(i, j) * dec.eigenvectors(j, n);
            table.elements[m][n] = std::abs(s);
        }
    }
    return table;
}

} // namespace swanson
