#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "swanson/closed_forms.hpp"

namespace swanson {

enum class OutputFormat { Csv, Json };

/// One run of the CLI.  Parses identically from flags and from a flat
/// key=value config file; flags override the file.
struct RunConfig {
    double omega = 1.0;
    double alpha = 0.5;
    double beta = 0.25;
    double z_min = -1.0;
    double z_max = 1.0;
    std::size_t steps = 41;
    Branch branch = Branch::Standard;
    std::size_t dim = 64;
    std::size_t sector = 16;
    double z = 0.0; // cmd_spectrum only
    std::string output_path = "-";
    OutputFormat format = OutputFormat::Csv;

    void validate() const {
        if (!(omega > 0.0)) throw ConfigError("omega must be positive");
        if (omega * omega - 4.0 * alpha * beta < 0.0)
            throw ConfigError("omega^2 - 4 alpha beta must be >= 0");
        if (!(z_min <= z_max)) throw ConfigError("z_min must be <= z_max");
        if (std::abs(z_min) > 1.0 || std::abs(z_max) > 1.0 || std::abs(z) > 1.0)
            throw ConfigError("z values must lie in [-1, 1]");
        if (steps < 1) throw ConfigError("steps must be >= 1");
        if (dim < 8) throw ConfigError("dim must be >= 8");
        if (sector < 2 || sector > dim / 2) throw ConfigError("need 2 <= sector <= dim/2");
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double d;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("invalid number for '" + key + "': " + v);
    }
    if (pos != v.size()) throw ConfigError("invalid number for '" + key + "': " + v);
    return d;
}

inline std::size_t parse_size(const std::string& key, const std::string& v) {
    const double d = parse_double(key, v);
    if (d < 0 || d != std::floor(d)) throw ConfigError("invalid integer for '" + key + "': " + v);
    return std::size_t(d);
}

} // namespace detail

inline Branch parse_branch(const std::string& v) {
    if (v == "standard") return Branch::Standard;
    if (v == "mirrored") return Branch::Mirrored;
    throw ConfigError("branch must be 'standard' or 'mirrored', got '" + v + "'");
}

inline OutputFormat parse_format(const std::string& v) {
    if (v == "csv") return OutputFormat::Csv;
    if (v == "json") return OutputFormat::Json;
    throw ConfigError("format must be 'csv' or 'json', got '" + v + "'");
}

/// key=value lines, '#' comments, unknown keys are errors.
inline void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        if (key == "omega") cfg.omega = detail::parse_double(key, val);
        else if (key == "alpha") cfg.alpha = detail::parse_double(key, val);
        else if (key == "beta") cfg.beta = detail::parse_double(key, val);
        else if (key == "z_min") cfg.z_min = detail::parse_double(key, val);
        else if (key == "z_max") cfg.z_max = detail::parse_double(key, val);
        else if (key == "z") cfg.z = detail::parse_double(key, val);
        else if (key == "steps") cfg.steps = detail::parse_size(key, val);
        else if (key == "branch") cfg.branch = parse_branch(val);
        else if (key == "dim") cfg.dim = detail::parse_size(key, val);
        else if (key == "sector") cfg.sector = detail::parse_size(key, val);
        else if (key == "out") cfg.output_path = val;
        else if (key == "format") cfg.format = parse_format(val);
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

} // namespace swanson
