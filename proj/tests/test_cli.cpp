#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "swanson/cli_commands.hpp"

using namespace swanson;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "swanson_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SWANSON_CLI_PATH) + " " + args + " > " +
                            (temp_dir() / "stdout.txt").string() + " 2> " +
                            (temp_dir() / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("RunConfig validation") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.omega = -1.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.alpha = 2.0;
    cfg.beta = 2.0; // omega^2 < 4 alpha beta
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.z_min = 0.5;
    cfg.z_max = -0.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.z = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.dim = 6;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = RunConfig{};
    cfg.sector = 40; // > dim/2
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("branch and format parsing") {
    CHECK(parse_branch("standard") == Branch::Standard);
    CHECK(parse_branch("mirrored") == Branch::Mirrored);
    CHECK_THROWS_AS(parse_branch("sideways"), ConfigError);
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("config file parsing") {
    const fs::path p = temp_dir() / "good.cfg";
    write_file(p, "# comment line\n"
                  "omega = 1.5\n"
                  "alpha=0.25\n"
                  "steps = 11   # trailing comment\n"
                  "branch = mirrored\n"
                  "format = json\n"
                  "out = result.csv\n"
                  "\n");
    RunConfig cfg;
    apply_config_file(cfg, p.string());
    CHECK(cfg.omega == 1.5);
    CHECK(cfg.alpha == 0.25);
    CHECK(cfg.beta == 0.25); // untouched default
    CHECK(cfg.steps == 11);
    CHECK(cfg.branch == Branch::Mirrored);
    CHECK(cfg.format == OutputFormat::Json);
    CHECK(cfg.output_path == "result.csv");

    const fs::path bad = temp_dir() / "bad.cfg";
    write_file(bad, "omeg = 1.0\n");
    RunConfig c2;
    CHECK_THROWS_AS(apply_config_file(c2, bad.string()), ConfigError);
    write_file(bad, "omega 1.0\n");
    CHECK_THROWS_AS(apply_config_file(c2, bad.string()), ConfigError);
    write_file(bad, "omega = abc\n");
    CHECK_THROWS_AS(apply_config_file(c2, bad.string()), ConfigError);
    write_file(bad, "steps = 2.5\n");
    CHECK_THROWS_AS(apply_config_file(c2, bad.string()), ConfigError);
    CHECK_THROWS_AS(apply_config_file(c2, (temp_dir() / "missing.cfg").string()), ConfigError);
}

TEST_CASE("sweep CSV shape and invalid-row marking") {
    RunConfig cfg;
    cfg.steps = 21;
    std::ostringstream out;
    const OscillatorParams params(cfg.omega, cfg.alpha, cfg.beta);
    const auto rows = compute_sweep(params, uniform_grid(-1.0, 1.0, cfg.steps), cfg.branch);
    write_sweep_csv(out, params, rows);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line ==
          "z,branch,valid,epsilon,eta,theta_sq,mu,nu,mu_nu_minus_omega_sq,mass,z_minus,z_plus");
    std::size_t n = 0, invalid = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.find(",false,") != std::string::npos) {
            ++invalid;
            CHECK(line.find(",,,,,,,") != std::string::npos);
        }
    }
    CHECK(n == 21);
    // grid points 0.6, 0.7, 0.8 fall inside [0.5395..., 0.8722...]
    CHECK(invalid == 3);
}

TEST_CASE("report CSV covers every grid point") {
    const VerificationReport rep = run_suite(OscillatorParams(1.0, 0.5, 0.25), 32,
                                             uniform_grid(-1.0, 1.0, 11), Branch::Standard);
    std::ostringstream out;
    write_report_csv(out, rep);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "check,z,branch,residual,tolerance,passed,note");
    std::size_t skipped = 0;
    while (std::getline(in, line))
        if (line.rfind("skipped,", 0) == 0) ++skipped;
    CHECK(skipped == rep.skipped.size());
}

TEST_CASE("cli: sweep writes deterministic CSV and exits 0") {
    const fs::path out1 = temp_dir() / "sweep1.csv";
    const fs::path out2 = temp_dir() / "sweep2.csv";
    CHECK(run_cli("sweep --steps 11 --out " + out1.string()) == 0);
    CHECK(run_cli("sweep --steps 11 --out " + out2.string()) == 0);
    const std::string a = slurp(out1), b = slurp(out2);
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(a.rfind("z,branch,valid,", 0) == 0);
}

TEST_CASE("cli: sweep json format") {
    const fs::path out = temp_dir() / "sweep.json";
    CHECK(run_cli("sweep --steps 5 --format json --out " + out.string()) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("\"rows\"") != std::string::npos);
    CHECK(text.find("\"big_omega\"") != std::string::npos);
}

TEST_CASE("cli: spectrum at a valid z exits 0, inside the band exits 4") {
    const fs::path out = temp_dir() / "spec.csv";
    CHECK(run_cli("spectrum --z 0 --dim 32 --sector 8 --out " + out.string()) == 0);
    const std::string text = slurp(out);
    CHECK(text.rfind("n,eigenvalue,expected,abs_error", 0) == 0);
    // lowest eigenvalue ~ Omega/2 = 0.35355...
    CHECK(text.find("0,0.35355339") != std::string::npos);

    CHECK(run_cli("spectrum --z 0.7 --dim 32 --sector 8") == 4);
}

TEST_CASE("cli: verify exit codes") {
    const fs::path out = temp_dir() / "verify.csv";
    // tiny dimension: truncation-dominated residuals fail the default tolerances
    CHECK(run_cli("verify --dim 8 --sector 2 --steps 21 --out " + out.string()) == 1);
    // grid entirely inside the singular band: vacuous pass with a warning
    CHECK(run_cli("verify --dim 32 --sector 8 --z-min 0.6 --z-max 0.8 --steps 3") == 0);
    const std::string console = slurp(temp_dir() / "stdout.txt");
    CHECK(console.find("warning") != std::string::npos);
}

TEST_CASE("cli: special-cases passes at the demo parameters") {
    const fs::path out = temp_dir() / "special.csv";
    // default dim 64: the z = +1 comparison is truncation-limited below ~48
    CHECK(run_cli("special-cases --out " + out.string()) == 0);
    const std::string text = slurp(out);
    CHECK(text.rfind("case,z,branch,residual,tolerance,passed", 0) == 0);
    CHECK(text.find("t1,") != std::string::npos);
    CHECK(text.find("t2,") != std::string::npos);
    CHECK(text.find("t3,") != std::string::npos);
    CHECK(text.find("false") == std::string::npos);
}

TEST_CASE("cli: config errors exit 2, I/O errors exit 3") {
    CHECK(run_cli("sweep --branch sideways") == 2);
    CHECK(run_cli("sweep --omega -1") == 2);
    CHECK(run_cli("sweep --steps 5 --out /nonexistent_dir_xyz/out.csv") == 3);
    CHECK(run_cli("") == 2); // missing subcommand
}

TEST_CASE("cli: config file with flag override") {
    const fs::path cfg = temp_dir() / "run.cfg";
    const fs::path out = temp_dir() / "cfg_sweep.csv";
    write_file(cfg, "steps = 5\nomega = 1.0\nalpha = 0.5\nbeta = 0.25\n");
    CHECK(run_cli("sweep --config " + cfg.string() + " --steps 7 --out " + out.string()) == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 8); // header + 7 (flag overrides the file's 5)

    const fs::path bad = temp_dir() / "bad_key.cfg";
    write_file(bad, "bogus = 1\n");
    CHECK(run_cli("sweep --config " + bad.string()) == 2);
}
