#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "swanson/report_io.hpp"

namespace swanson {

// Exit codes: 0 pass, 1 verification failure, 2 config error, 3 I/O error,
// 4 invalid z request.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitConfigError = 2,
    kExitIoError = 3,
    kExitInvalidZ = 4,
};

namespace detail {

class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (path == "-") {
            out_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw IoError("cannot open output file: " + path);
        out_ = file_.get();
    }

    std::ostream& stream() { return *out_; }

    void finish() {
        out_->flush();
        if (file_ && !*file_) throw IoError("error writing output file");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* out_ = nullptr;
};

} // namespace detail

/// One row per grid z with the scalar formulas; invalid rows marked.
inline int cmd_sweep(const RunConfig& cfg, std::ostream& console = std::cout) {
    cfg.validate();
    const OscillatorParams params(cfg.omega, cfg.alpha, cfg.beta);
    const auto grid = uniform_grid(cfg.z_min, cfg.z_max, cfg.steps);
    const auto rows = compute_sweep(params, grid, cfg.branch);

    detail::OutputTarget target(cfg.output_path, console);
    if (cfg.format == OutputFormat::Csv)
        write_sweep_csv(target.stream(), params, rows);
    else
        write_sweep_json(target.stream(), params, rows);
    target.finish();
    return kExitOk;
}

/// Full identity suite; exit 0 iff all checks passed.
inline int cmd_verify(const RunConfig& cfg, std::ostream& console = std::cout) {
    cfg.validate();
    const OscillatorParams params(cfg.omega, cfg.alpha, cfg.beta);
    const auto grid = uniform_grid(cfg.z_min, cfg.z_max, cfg.steps);
    const VerificationReport rep = run_suite(params, cfg.dim, grid, cfg.branch);

    detail::OutputTarget target(cfg.output_path, console);
    if (cfg.format == OutputFormat::Csv)
        write_report_csv(target.stream(), rep);
    else
        write_report_json(target.stream(), rep);
    target.finish();

    // human-readable summary: pass/fail counts and worst residual per check
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    std::map<std::string, double> worst;
    for (const CheckEntry& e : rep.entries) {
        auto& c = counts[e.check];
        (e.passed ? c.first : c.second) += 1;
        worst[e.check] = std::max(worst[e.check], e.residual);
    }
    for (const auto& [name, c] : counts)
        console << name << ": " << c.first << " passed, " << c.second
                << " failed, worst residual " << detail::fmt17(worst[name]) << '\n';
    console << "total: " << rep.passed_count() << " passed, " << rep.failed_count()
            << " failed, " << rep.skipped.size() << " grid points skipped\n";
    if (rep.entries.empty() && !rep.skipped.empty())
        console << "warning: every grid point fell inside the singular band; "
                   "nothing was checked\n";

    return rep.all_passed() ? kExitOk : kExitVerificationFailed;
}

/// Low spectrum of h_S at one z: n, eigenvalue, (n+1/2) Omega, abs_error.
inline int cmd_spectrum(const RunConfig& cfg, std::ostream& console = std::cout) {
    cfg.validate();
    const OscillatorParams params(cfg.omega, cfg.alpha, cfg.beta);
    const MetricChoice choice(cfg.z, cfg.branch);
    if (!is_valid(params, choice)) return kExitInvalidZ;

    const FockMatrix h_s = hermitize(params, choice, cfg.dim);
    const SpectralDecomposition dec = spectrum_of(h_s);

    detail::OutputTarget target(cfg.output_path, console);
    std::ostream& out = target.stream();
    if (cfg.format == OutputFormat::Csv) {
        out << "n,eigenvalue,expected,abs_error\n";
        for (std::size_t n = 0; n < cfg.sector; ++n) {
            const double expect = (double(n) + 0.5) * params.big_omega;
            out << n << ',' << detail::fmt17(dec.eigenvalues[n]) << ',' << detail::fmt17(expect)
                << ',' << detail::fmt17(std::abs(dec.eigenvalues[n] - expect)) << '\n';
        }
    } else {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n < cfg.sector; ++n) {
            const double expect = (double(n) + 0.5) * params.big_omega;
            doc.push_back({{"n", n},
                           {"eigenvalue", dec.eigenvalues[n]},
                           {"expected", expect},
                           {"abs_error", std::abs(dec.eigenvalues[n] - expect)}});
        }
        out << doc.dump(2) << '\n';
    }
    target.finish();
    return kExitOk;
}

/// Compares the general Theta(z) against the special-case closed forms at
/// z = 0, +-1 (branch-adjusted) and reports sector residuals.
inline int cmd_special_cases(const RunConfig& cfg, std::ostream& console = std::cout) {
    cfg.validate();
    const OscillatorParams params(cfg.omega, cfg.alpha, cfg.beta);

    detail::OutputTarget target(cfg.output_path, console);
    std::ostream& out = target.stream();
    bool all_passed = true;

    struct Case {
        const char* name;
        double z;
    };
    const Case cases[] = {{"t1", 0.0},
                          {"t2", cfg.branch == Branch::Standard ? 1.0 : -1.0},
                          {"t3", cfg.branch == Branch::Standard ? -1.0 : 1.0}};

    nlohmann::ordered_json jdoc = nlohmann::ordered_json::array();
    if (cfg.format == OutputFormat::Csv) out << "case,z,branch,residual,tolerance,passed\n";
    for (const Case& cs : cases) {
        const MetricChoice choice(cs.z, cfg.branch);
        const double tol = cs.z == 0.0 ? 1e-10 : 1e-9;
        if (!is_valid(params, choice)) {
            if (cfg.format == OutputFormat::Csv)
                out << cs.name << ',' << detail::fmt17(cs.z) << ',' << branch_name(cfg.branch)
                    << ",,,skipped\n";
            else
                jdoc.push_back({{"case", cs.name}, {"z", cs.z}, {"skipped", true}});
            continue;
        }
        const MetricTriple m = build_metric(params, choice, cfg.dim);
        const FockMatrix closed = special_case_theta(params, choice, cfg.dim);
        const double raw = (m.theta - closed).project_sector(cfg.sector).frobenius_norm();
        const double residual =
            raw / std::max(1.0, closed.project_sector(cfg.sector).frobenius_norm());
        const bool passed = residual <= tol;
        all_passed = all_passed && passed;
        if (cfg.format == OutputFormat::Csv)
            out << cs.name << ',' << detail::fmt17(cs.z) << ',' << branch_name(cfg.branch) << ','
                << detail::fmt17(residual) << ',' << detail::fmt17(tol) << ','
                << (passed ? "true" : "false") << '\n';
        else
            jdoc.push_back({{"case", cs.name},
                            {"z", cs.z},
                            {"branch", branch_name(cfg.branch)},
                            {"residual", residual},
                            {"tolerance", tol},
                            {"passed", passed}});
    }
    if (cfg.format == OutputFormat::Json) out << jdoc.dump(2) << '\n';
    target.finish();
    return all_passed ? kExitOk : kExitVerificationFailed;
}

} // namespace swanson
