#include "geomgate/cli.hpp"
#include "geomgate/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace geomgate;
using namespace geomgate::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("geomgate_test_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

} // namespace

TEST_CASE("config file sections map onto fields") {
    const auto dir = scratch("parse");
    write(dir / "run.toml", "# comment\ncommand = simulate\ngate = \"H\"\n\n[path]\nlambda_over_pi = 0.7  # trailing\n"
                            "[transmon]\nwith_drag = false\nalpha_mhz = 250\n");
    RunConfig c;
    load_config_file((dir / "run.toml").string(), c);
    CHECK(c.command == "simulate");
    CHECK(c.gate == "H");
    CHECK(c.lambda_over_pi == 0.7);
    CHECK_FALSE(c.with_drag);
    CHECK(c.alpha_mhz == 250.0);
}

TEST_CASE("config diagnostics name the line and the field") {
    const auto dir = scratch("diag");
    const auto check = [&](const std::string& text, const std::string& needle) {
        write(dir / "bad.toml", text);
        RunConfig c;
        try {
            load_config_file((dir / "bad.toml").string(), c);
            FAIL("expected a ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    check("gate = S\n[path]\nlambda_over_pi = x\n", "bad.toml:3");
    check("gate = S\n[path]\nlambda_over_pi = x\n", "lambda_over_pi");
    check("[transmon]\nwarp = 3\n", "unknown field 'transmon.warp'");
    check("[path]\nomega0_mhz 19\n", "expected 'key = value'");
    check("[path\n", "malformed section");
    check("with_drag = maybe\n", "true or false");
    CHECK_THROWS_AS([] { RunConfig c; load_config_file("/nonexistent/x.toml", c); }(), ConfigError);
}

TEST_CASE("set_field accepts dotted, bare and dashed names") {
    RunConfig c;
    set_field(c, "twoqubit.beta", "1.85");
    set_field(c, "delta1-mhz", "390");
    set_field(c, "omega0_mhz", "24");
    CHECK(c.beta == 1.85);
    CHECK(c.delta1_mhz == 390.0);
    CHECK(c.omega0_mhz == 24.0);
    CHECK_THROWS_AS(set_field(c, "path.beta", "1"), ConfigError);
    CHECK_THROWS_AS(set_field(c, "beta", "1.9x"), ConfigError);
}

TEST_CASE("JSON round-trip restores an equivalent config and hash") {
    RunConfig c;
    c.command = "sweep1q";
    c.gate = "T";
    c.error = "sigma_z";
    c.kappa_z_khz = 7.5;
    c.with_drag = false;
    const auto back = config_from_json(nlohmann::json::parse(to_json(c).dump()));
    CHECK(to_json(back) == to_json(c));
    CHECK(config_hash(back) == config_hash(c));
    CHECK(config_hash(c).size() == 16);
    RunConfig d = c;
    d.kappa_z_khz = 7.6;
    CHECK(config_hash(d) != config_hash(c));
    d = c;
    d.output_dir = "elsewhere";
    CHECK(config_hash(d) == config_hash(c));
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"path": {"omega0_mhz": "fast"}})")), ConfigError);
}

TEST_CASE("validation rejects inconsistent configs") {
    const auto bad = [](auto mutate, const std::string& field) {
        RunConfig c;
        mutate(c);
        try {
            validate(c);
            FAIL("expected a ConfigError for " << field);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find(field) != std::string::npos);
        }
    };
    CHECK_NOTHROW(validate(RunConfig{}));
    bad([](RunConfig& c) { c.command = "plot"; }, "command");
    bad([](RunConfig& c) { c.gate = "CNOT"; }, "gate");
    bad([](RunConfig& c) { c.lambda_over_pi = 0.5; }, "lambda_over_pi");
    bad([](RunConfig& c) { c.eps_step = 0.0; }, "eps_step");
    bad([](RunConfig& c) { c.kappa_z_khz = -1; }, "kappa_z_khz");
    bad([](RunConfig& c) { c.figure = "fig1"; }, "figure");
    bad([](RunConfig& c) { c.command = "sweep1q"; c.gate = "CPHASE"; }, "gate");
    bad([](RunConfig& c) { c.gamma_over_pi = 0.25; }, "gamma_over_pi");
}

TEST_CASE("synth writes a schedule, a manifest, and embeds the hash") {
    const auto dir = scratch("synth");
    RunConfig c;
    c.output_dir = dir.string();
    REQUIRE(run(c) == 0);
    const auto sched = nlohmann::json::parse(slurp(dir / "schedule_S_geometric_A.json"));
    CHECK(sched["config_hash"] == config_hash(c));
    CHECK(sched["total_area_rad"].get<double>() == doctest::Approx(3.14159).epsilon(1e-3));
    const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    CHECK(manifest["config_hash"] == config_hash(c));
    CHECK(manifest["artifacts"][0] == "schedule_S_geometric_A.json");
    CHECK(config_hash(config_from_json(manifest["config"])) == config_hash(c));
}

TEST_CASE("exit codes distinguish configuration errors") {
    RunConfig c;
    c.output_dir = scratch("exit").string();
    c.lambda_over_pi = 0.5;
    CHECK(run(c) == 2);
    c.lambda_over_pi = 0.42;
    c.output_dir = "/proc/geomgate_cannot_write_here";
    CHECK(run(c) == 2);
}

TEST_CASE("sweep1q output is deterministic and reports the advantage") {
    RunConfig c;
    c.command = "sweep1q";
    c.gate = "T";
    c.error = "sigma_z";
    c.lambda_min = 0.8;
    c.lambda_max = 0.82;
    c.delta_step = 0.05;
    c.output_dir = scratch("sweep_a").string();
    REQUIRE(run(c) == 0);
    const auto first = slurp(fs::path(c.output_dir) / "sweep_T_geometric_A.csv");
    c.output_dir = scratch("sweep_b").string();
    REQUIRE(run(c) == 0);
    CHECK(slurp(fs::path(c.output_dir) / "sweep_T_geometric_A.csv") == first);
    CHECK(first.rfind("# config_hash=", 0) == 0);
    CHECK(first.find("T,dynamical,") != std::string::npos);
    const auto adv = nlohmann::json::parse(slurp(fs::path(c.output_dir) / "advantage_T_geometric_A.json"));
    CHECK(adv["sigma_z"].size() == 1);
    CHECK_FALSE(adv.contains("sigma_x"));
}

TEST_CASE("figure CSV schemas") {
    RunConfig c;
    c.lambda_min = 0.2;
    c.lambda_max = 0.3;
    c.lambda_step = 0.05;
    const auto header = [](const std::string& csv) {
        const auto a = csv.find('\n') + 1;
        return csv.substr(a, csv.find('\n', a) - a);
    };
    const auto f2 = figure_csv("fig2b", c);
    CHECK(header(f2) == "Lambda_over_pi,area_S,area_T,area_H,dyn_S,dyn_T,dyn_H");
    CHECK(f2.find("\n0.25,") != std::string::npos);
    CHECK(f2.rfind("# config_hash=" + config_hash(c), 0) == 0);
    CHECK(figure_csv("fig2b", c) == f2);
    CHECK(figure_ids().size() == 9);
    CHECK_THROWS_AS(figure_csv("fig10", c), ConfigError);
}
