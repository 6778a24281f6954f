// Command-line front end: sweep, verify, spectrum, special-cases.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swanson/cli_commands.hpp"

namespace {

void add_common_flags(CLI::App* cmd, swanson::RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "flat key=value config file");
    cmd->add_option("--omega", cfg.omega, "oscillator frequency omega (> 0)");
    cmd->add_option("--alpha", cfg.alpha, "coefficient of a^2");
    cmd->add_option("--beta", cfg.beta, "coefficient of a^dagger^2");
    cmd->add_option("--z-min", cfg.z_min, "grid lower bound");
    cmd->add_option("--z-max", cfg.z_max, "grid upper bound");
    cmd->add_option("--steps", cfg.steps, "number of grid points");
    cmd->add_option("--branch", [&cfg](const CLI::results_t& r) {
        cfg.branch = swanson::parse_branch(r.at(0));
        return true;
    }, "standard | mirrored");
    cmd->add_option("--dim", cfg.dim, "Fock-space truncation");
    cmd->add_option("--sector", cfg.sector, "residual / output sector");
    cmd->add_option("--z", cfg.z, "metric parameter z (spectrum command)");
    cmd->add_option("--out", cfg.output_path, "output path, '-' for stdout");
    cmd->add_option("--format", [&cfg](const CLI::results_t& r) {
        cfg.format = swanson::parse_format(r.at(0));
        return true;
    }, "csv | json");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metric family toolkit for the non-Hermitian oscillator"};
    app.require_subcommand(1);

    struct Sub {
        swanson::RunConfig cfg;
        std::string config_path;
        CLI::App* cmd = nullptr;
    };
    Sub sweep, verify, spectrum, special;

    sweep.cmd = app.add_subcommand("sweep", "scalar formulas over a z grid");
    verify.cmd = app.add_subcommand("verify", "run the identity suite");
    spectrum.cmd = app.add_subcommand("spectrum", "low spectrum of h_S at one z");
    special.cmd = app.add_subcommand("special-cases", "metric vs special-case closed forms");
    add_common_flags(sweep.cmd, sweep.cfg, sweep.config_path);
    add_common_flags(verify.cmd, verify.cfg, verify.config_path);
    add_common_flags(spectrum.cmd, spectrum.cfg, spectrum.config_path);
    add_common_flags(special.cmd, special.cfg, special.config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return swanson::kExitConfigError;
    } catch (const swanson::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return swanson::kExitConfigError;
    }

    auto run = [](Sub& sub, int (*fn)(const swanson::RunConfig&, std::ostream&)) {
        try {
            if (!sub.config_path.empty()) {
                // flags override the file: re-parse flag values on top
                swanson::RunConfig from_file;
                swanson::apply_config_file(from_file, sub.config_path);
                swanson::RunConfig merged = from_file;
                auto take = [&](const char* flag, auto member) {
                    if (sub.cmd->count(flag) > 0) merged.*member = sub.cfg.*member;
                };
                take("--omega", &swanson::RunConfig::omega);
                take("--alpha", &swanson::RunConfig::alpha);
                take("--beta", &swanson::RunConfig::beta);
                take("--z-min", &swanson::RunConfig::z_min);
                take("--z-max", &swanson::RunConfig::z_max);
                take("--steps", &swanson::RunConfig::steps);
                take("--branch", &swanson::RunConfig::branch);
                take("--dim", &swanson::RunConfig::dim);
                take("--sector", &swanson::RunConfig::sector);
                take("--z", &swanson::RunConfig::z);
                take("--out", &swanson::RunConfig::output_path);
                take("--format", &swanson::RunConfig::format);
                sub.cfg = merged;
            }
            return fn(sub.cfg, std::cout);
        } catch (const swanson::ConfigError& e) {
            std::cerr << "config error: " << e.what() << '\n';
            return int(swanson::kExitConfigError);
        } catch (const swanson::InvalidParameterError& e) {
            std::cerr << "config error: " << e.what() << '\n';
            return int(swanson::kExitConfigError);
        } catch (const swanson::IoError& e) {
            std::cerr << "i/o error: " << e.what() << '\n';
            return int(swanson::kExitIoError);
        } catch (const swanson::Error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return int(swanson::kExitVerificationFailed);
        }
    };

    if (sweep.cmd->parsed()) return run(sweep, swanson::cmd_sweep);
    if (verify.cmd->parsed()) return run(verify, swanson::cmd_verify);
    if (spectrum.cmd->parsed()) return run(spectrum, swanson::cmd_spectrum);
    if (special.cmd->parsed()) return run(special, swanson::cmd_special_cases);
    return swanson::kExitConfigError;
}
