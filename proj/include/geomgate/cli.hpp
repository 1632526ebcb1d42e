#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace geomgate::cli {

// Every user-facing frequency is in MHz or kHz with the 2pi factor implied;
// conversion to rad/s happens once, in the accessors below.
struct RunConfig {
    std::string command = "synth";
    std::string gate = "S";
    std::string family = "geometric_A";
    std::string shape = "sin2";
    std::string figure = "all";
    std::string output_dir = "out";

    double lambda_over_pi = 0.42;
    double omega0_mhz = 19.0;

    std::string error = "both";
    double eps_min = -0.1, eps_max = 0.1, eps_step = 0.005;
    double delta_min = -0.1, delta_max = 0.1, delta_step = 0.005;
    double lambda_min = 0.10, lambda_max = 1.00, lambda_step = 0.01;
    double surface_step = 0.02;

    double alpha_mhz = 220.0;
    double kappa_minus_khz = 4.0;
    double kappa_z_khz = 4.0;
    bool with_drag = true;
    double omega0_min_mhz = 5.0, omega0_max_mhz = 40.0, omega0_step_mhz = 1.0;

    double g12_mhz = 8.0;
    double delta1_mhz = 388.0;
    double beta = 1.9;
    double alpha1_mhz = 220.0;
    double alpha2_mhz = 220.0;
    double gamma_over_pi = -0.25;
    double lambda2_over_pi = 0.45;
    double beta_min = 1.8, beta_max = 2.0, beta_step = 0.05;
    double delta1_min_mhz = 383.0, delta1_max_mhz = 393.0, delta1_step_mhz = 2.5;
    double spp = 40.0;

    double dt_ns = 0.0;  // 0 selects the per-schedule default
};

struct Field {
    std::string section;
    std::string key;
    std::variant<std::string RunConfig::*, double RunConfig::*, bool RunConfig::*> member;
    std::string help;
};

const std::vector<Field>& fields();

nlohmann::json to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);
// FNV-1a over the canonical JSON dump (output_dir excluded), as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

// Reads "[section]" headers and "key = value" lines; '#' starts a comment. Errors name
// the file, the line and the field.
void load_config_file(const std::string& path, RunConfig& cfg);
void set_field(RunConfig& cfg, const std::string& name, const std::string& value);

// Validates the whole config against the chosen command; throws ConfigError.
void validate(const RunConfig& cfg);

// Executes the command and writes its artifacts plus manifest.json. Returns the exit
// status: 0 success, 2 configuration error, 3 numerical failure.
int run(const RunConfig& cfg);

// Parses argv (command, flags and an optional --config file) and runs.
int main_entry(int argc, char** argv);

// Figure data as CSV text. Ids: fig2b fig3 fig4 fig5 fig6 fig7a fig7b fig8 fig9.
std::string figure_csv(const std::string& id, const RunConfig& cfg);
const std::vector<std::string>& figure_ids();

} // namespace geomgate::cli
