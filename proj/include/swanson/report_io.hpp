#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "swanson/run_config.hpp"
#include "swanson/verification.hpp"

namespace swanson {

/// One sweep row; invalid rows carry no numeric payload.
struct SweepRow {
    double z;
    Branch branch;
    bool valid;
    MetricScalars scalars{};   // meaningful only when valid
    double mass = 0.0;         // 1/mu
    bool has_band = false;
    SingularBand band{};
};

namespace detail {

/// Full double precision, 17 significant digits, '.' decimal.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

inline std::vector<SweepRow> compute_sweep(const OscillatorParams& params,
                                           const std::vector<double>& grid, Branch branch) {
    const bool has_band = !params.hermitian();
    SingularBand band{0.0, 0.0};
    if (has_band) band = singular_band(params);

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double z : grid) {
        const MetricChoice choice(z, branch);
        SweepRow row{z, branch, false, {}, 0.0, has_band, band};
        if (is_valid(params, choice)) {
            row.valid = true;
            row.scalars = metric_scalars(params, choice);
            row.mass = 1.0 / row.scalars.mu;
        }
        rows.push_back(row);
    }
    return rows;
}

inline void write_sweep_csv(std::ostream& out, const OscillatorParams& params,
                            const std::vector<SweepRow>& rows) {
    const double om2 = params.big_omega * params.big_omega;
    out << "z,branch,valid,epsilon,eta,theta_sq,mu,nu,mu_nu_minus_omega_sq,mass,z_minus,z_plus\n";
    for (const SweepRow& r : rows) {
        out << detail::fmt17(r.z) << ',' << branch_name(r.branch) << ','
            << (r.valid ? "true" : "false") << ',';
        if (r.valid) {
            out << detail::fmt17(r.scalars.epsilon) << ',' << detail::fmt17(r.scalars.eta) << ','
                << detail::fmt17(r.scalars.theta_sq) << ',' << detail::fmt17(r.scalars.mu) << ','
                << detail::fmt17(r.scalars.nu) << ','
                << detail::fmt17(r.scalars.mu * r.scalars.nu - om2) << ','
                << detail::fmt17(r.mass) << ',';
        } else {
            out << ",,,,,,,";
        }
        if (r.has_band)
            out << detail::fmt17(r.band.z_minus) << ',' << detail::fmt17(r.band.z_plus);
        else
            out << ',';
        out << '\n';
    }
}

inline void write_sweep_json(std::ostream& out, const OscillatorParams& params,
                             const std::vector<SweepRow>& rows) {
    const double om2 = params.big_omega * params.big_omega;
    nlohmann::ordered_json doc;
    doc["omega"] = params.omega;
    doc["alpha"] = params.alpha;
    doc["beta"] = params.beta;
    doc["big_omega"] = params.big_omega;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        nlohmann::ordered_json j;
        j["z"] = r.z;
        j["branch"] = branch_name(r.branch);
        j["valid"] = r.valid;
        if (r.valid) {
            j["epsilon"] = r.scalars.epsilon;
            j["eta"] = r.scalars.eta;
            j["theta_sq"] = r.scalars.theta_sq;
            j["mu"] = r.scalars.mu;
            j["nu"] = r.scalars.nu;
            j["mu_nu_minus_omega_sq"] = r.scalars.mu * r.scalars.nu - om2;
            j["mass"] = r.mass;
        }
        if (r.has_band) {
            j["z_minus"] = r.band.z_minus;
            j["z_plus"] = r.band.z_plus;
        }
        doc["rows"].push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
}

inline void write_report_csv(std::ostream& out, const VerificationReport& rep) {
    out << "check,z,branch,residual,tolerance,passed,note\n";
    for (const CheckEntry& e : rep.entries) {
        out << e.check << ',' << detail::fmt17(e.z) << ',' << branch_name(e.branch) << ','
            << detail::fmt17(e.residual) << ',' << detail::fmt17(e.tolerance) << ','
            << (e.passed ? "true" : "false") << ",\n";
    }
    for (const SkippedPoint& s : rep.skipped) {
        std::string reason = s.reason;
        for (char& ch : reason)
            if (ch == ',') ch = ';';
        out << "skipped," << detail::fmt17(s.z) << ',' << branch_name(rep.branch)
            << ",,,," << reason << '\n';
    }
}

inline void write_report_json(std::ostream& out, const VerificationReport& rep) {
    nlohmann::ordered_json doc;
    doc["omega"] = rep.params.omega;
    doc["alpha"] = rep.params.alpha;
    doc["beta"] = rep.params.beta;
    doc["dim"] = rep.dim;
    doc["sector"] = rep.sector;
    doc["branch"] = branch_name(rep.branch);
    doc["grid"] = rep.grid;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const CheckEntry& e : rep.entries) {
        doc["entries"].push_back({{"check", e.check},
                                  {"z", e.z},
                                  {"branch", branch_name(e.branch)},
                                  {"residual", e.residual},
                                  {"tolerance", e.tolerance},
                                  {"passed", e.passed}});
    }
    doc["skipped"] = nlohmann::ordered_json::array();
    for (const SkippedPoint& s : rep.skipped)
        doc["skipped"].push_back({{"z", s.z}, {"reason", s.reason}});
    doc["summary"] = {{"passed", rep.passed_count()}, {"failed", rep.failed_count()}};
    out << doc.dump(2) << '\n';
}

} // namespace swanson
