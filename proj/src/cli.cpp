#include "geomgate/cli.hpp"

#include "geomgate/errors.hpp"
#include "geomgate/gates.hpp"
#include "geomgate/kernels.hpp"
#include "geomgate/parallel.hpp"
#include "geomgate/path.hpp"
#include "geomgate/transmon.hpp"
#include "geomgate/twoqubit.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

namespace geomgate::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMHz = 2 * kPi * 1e6;
constexpr double kKHz = 2 * kPi * 1e3;
constexpr const char* kVersion = "1.0.0";

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string flag_name(const std::string& key) {
    std::string f = key;
    std::replace(f.begin(), f.end(), '_', '-');
    return f;
}

const Field* find_field(const std::string& name) {
    // Accepts "section.key", a bare key, or its dashed flag spelling.
    std::string section, key = name;
    if (const auto dot = name.find('.'); dot != std::string::npos) {
        section = name.substr(0, dot);
        key = name.substr(dot + 1);
    }
    std::replace(key.begin(), key.end(), '-', '_');
    for (const auto& f : fields())
        if (f.key == key && (section.empty() || f.section == section)) return &f;
    return nullptr;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw ConfigError("cannot write '" + p.string() + "': output directory not writable");
    os << text;
    if (!os) throw ConfigError("failed while writing '" + p.string() + "'");
}

std::vector<double> grid(double lo, double hi, double step) { return gates::uniform_grid(lo, hi, step); }

std::vector<double> lambda_grid(const RunConfig& c) {
    std::vector<double> out;
    for (double v : grid(c.lambda_min, c.lambda_max, c.lambda_step))
        if (std::abs(v - 0.5) > 1e-9) out.push_back(v);
    return out;
}

transmon::TransmonParams transmon_params(const RunConfig& c) {
    return {0.0, c.alpha_mhz * kMHz, c.kappa_minus_khz * kKHz, c.kappa_z_khz * kKHz};
}

twoqubit::TwoQubitParams twoqubit_params(const RunConfig& c) {
    twoqubit::TwoQubitParams p;
    p.g12 = c.g12_mhz * kMHz;
    p.Delta1 = c.delta1_mhz * kMHz;
    p.beta = c.beta;
    p.alpha1 = c.alpha1_mhz * kMHz;
    p.alpha2 = c.alpha2_mhz * kMHz;
    p.nu = p.Delta1 + p.alpha2;
    p.kappa_minus = c.kappa_minus_khz * kKHz;
    p.kappa_z = c.kappa_z_khz * kKHz;
    return p;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string intervals_text(const std::vector<gates::Interval>& iv) {
    std::string s;
    for (const auto& i : iv) s += (s.empty() ? "" : " ") + std::string("[") + num(i.lo) + ", " + num(i.hi) + "]";
    return s.empty() ? "(none)" : s;
}

nlohmann::json intervals_json(const std::vector<gates::Interval>& iv) {
    auto j = nlohmann::json::array();
    for (const auto& i : iv) j.push_back({i.lo, i.hi});
    return j;
}

} // namespace

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        {"run", "command", &RunConfig::command, "synth | simulate | sweep1q | sweep2q | figure"},
        {"run", "gate", &RunConfig::gate, "S | T | H | CPHASE"},
        {"run", "family", &RunConfig::family, "geometric_A | geometric_B | dynamical"},
        {"run", "shape", &RunConfig::shape, "pulse envelope: sin2 | const"},
        {"run", "figure", &RunConfig::figure, "figure id for the figure command, or all"},
        {"run", "output_dir", &RunConfig::output_dir, "directory for artifacts"},
        {"path", "lambda_over_pi", &RunConfig::lambda_over_pi, "path parameter Lambda in units of pi"},
        {"path", "omega0_mhz", &RunConfig::omega0_mhz, "pulse peak Omega0/2pi in MHz"},
        {"errors", "error", &RunConfig::error, "sigma_x | sigma_z | both"},
        {"errors", "eps_min", &RunConfig::eps_min, "amplitude error grid start"},
        {"errors", "eps_max", &RunConfig::eps_max, "amplitude error grid end"},
        {"errors", "eps_step", &RunConfig::eps_step, "amplitude error grid step"},
        {"errors", "delta_min", &RunConfig::delta_min, "detuning error grid start"},
        {"errors", "delta_max", &RunConfig::delta_max, "detuning error grid end"},
        {"errors", "delta_step", &RunConfig::delta_step, "detuning error grid step"},
        {"errors", "lambda_min", &RunConfig::lambda_min, "Lambda/pi grid start"},
        {"errors", "lambda_max", &RunConfig::lambda_max, "Lambda/pi grid end"},
        {"errors", "lambda_step", &RunConfig::lambda_step, "Lambda/pi grid step (0.5 is always skipped)"},
        {"errors", "surface_step", &RunConfig::surface_step, "error grid step for decoherent robustness surfaces"},
        {"transmon", "alpha_mhz", &RunConfig::alpha_mhz, "anharmonicity alpha/2pi in MHz"},
        {"transmon", "kappa_minus_khz", &RunConfig::kappa_minus_khz, "relaxation rate /2pi in kHz"},
        {"transmon", "kappa_z_khz", &RunConfig::kappa_z_khz, "dephasing rate /2pi in kHz"},
        {"transmon", "with_drag", &RunConfig::with_drag, "apply the DRAG correction"},
        {"transmon", "omega0_min_mhz", &RunConfig::omega0_min_mhz, "pulse-peak scan start, MHz"},
        {"transmon", "omega0_max_mhz", &RunConfig::omega0_max_mhz, "pulse-peak scan end, MHz"},
        {"transmon", "omega0_step_mhz", &RunConfig::omega0_step_mhz, "pulse-peak scan step, MHz"},
        {"twoqubit", "g12_mhz", &RunConfig::g12_mhz, "static coupling g12/2pi in MHz"},
        {"twoqubit", "delta1_mhz", &RunConfig::delta1_mhz, "qubit detuning Delta1/2pi in MHz"},
        {"twoqubit", "beta", &RunConfig::beta, "modulation amplitude"},
        {"twoqubit", "alpha1_mhz", &RunConfig::alpha1_mhz, "anharmonicity of qubit 1, MHz"},
        {"twoqubit", "alpha2_mhz", &RunConfig::alpha2_mhz, "anharmonicity of qubit 2, MHz"},
        {"twoqubit", "gamma_over_pi", &RunConfig::gamma_over_pi, "control phase in units of pi (negative)"},
        {"twoqubit", "lambda2_over_pi", &RunConfig::lambda2_over_pi, "two-qubit path parameter in units of pi"},
        {"twoqubit", "beta_min", &RunConfig::beta_min, "beta grid start"},
        {"twoqubit", "beta_max", &RunConfig::beta_max, "beta grid end"},
        {"twoqubit", "beta_step", &RunConfig::beta_step, "beta grid step"},
        {"twoqubit", "delta1_min_mhz", &RunConfig::delta1_min_mhz, "Delta1 grid start, MHz"},
        {"twoqubit", "delta1_max_mhz", &RunConfig::delta1_max_mhz, "Delta1 grid end, MHz"},
        {"twoqubit", "delta1_step_mhz", &RunConfig::delta1_step_mhz, "Delta1 grid step, MHz"},
        {"twoqubit", "spp", &RunConfig::spp, "time steps per fastest modulation period"},
        {"numerics", "dt_ns", &RunConfig::dt_ns, "nominal single-qubit step in ns (0: duration/4000)"},
    };
    return table;
}

void set_field(RunConfig& cfg, const std::string& name, const std::string& value) {
    const Field* f = find_field(name);
    if (!f) throw ConfigError("unknown field '" + name + "'");
    std::visit(
        [&](auto member) {
            using T = std::remove_reference_t<decltype(cfg.*member)>;
            if constexpr (std::is_same_v<T, std::string>) {
                std::string v = value;
                if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
                cfg.*member = v;
            } else if constexpr (std::is_same_v<T, bool>) {
                if (value == "true" || value == "1") cfg.*member = true;
                else if (value == "false" || value == "0") cfg.*member = false;
                else throw ConfigError("field '" + f->key + "' expects true or false, got '" + value + "'");
            } else {
                std::size_t used = 0;
                double v = 0.0;
                try {
                    v = std::stod(value, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != value.size() || !std::isfinite(v))
                    throw ConfigError("field '" + f->key + "' expects a number, got '" + value + "'");
                cfg.*member = v;
            }
        },
        f->member);
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    std::string line, section;
    for (int lineno = 1; std::getline(is, line); ++lineno) {
        const auto hash = line.find('#');
        const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        const std::string where = path + ":" + std::to_string(lineno) + ": ";
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') throw ConfigError(where + "malformed section header");
            section = trim(body.substr(1, body.size() - 2));
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        const std::string name = section.empty() ? key : section + "." + key;
        try {
            set_field(cfg, name, value);
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what());
        }
    }
}

nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& f : fields())
        std::visit([&](auto member) { j[f.section][f.key] = cfg.*member; }, f.member);
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig cfg;
    for (const auto& f : fields()) {
        if (!j.contains(f.section) || !j.at(f.section).contains(f.key)) continue;
        const auto& v = j.at(f.section).at(f.key);
        std::visit(
            [&](auto member) {
                using T = std::remove_reference_t<decltype(cfg.*member)>;
                try {
                    cfg.*member = v.get<T>();
                } catch (const nlohmann::json::exception&) {
                    throw ConfigError("manifest field '" + f.section + "." + f.key + "' has the wrong type");
                }
            },
            f.member);
    }
    return cfg;
}

std::string config_hash(const RunConfig& cfg) {
    // Where artifacts land does not change their content, so it stays out of the hash.
    auto j = to_json(cfg);
    j["run"].erase("output_dir");
    const std::string text = j.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void validate(const RunConfig& c) {
    const auto require = [](bool ok, const std::string& field, const std::string& why) {
        if (!ok) throw ConfigError("field '" + field + "': " + why);
    };
    const std::vector<std::string> commands{"synth", "simulate", "sweep1q", "sweep2q", "figure"};
    require(std::find(commands.begin(), commands.end(), c.command) != commands.end(), "command",
            "expected synth, simulate, sweep1q, sweep2q or figure, got '" + c.command + "'");
    require(c.gate == "S" || c.gate == "T" || c.gate == "H" || c.gate == "CPHASE", "gate",
            "expected S, T, H or CPHASE, got '" + c.gate + "'");
    require(c.family == "geometric_A" || c.family == "geometric_B" || c.family == "dynamical", "family",
            "expected geometric_A, geometric_B or dynamical, got '" + c.family + "'");
    require(c.shape == "sin2" || c.shape == "const", "shape", "expected sin2 or const");
    require(c.error == "sigma_x" || c.error == "sigma_z" || c.error == "both", "error",
            "expected sigma_x, sigma_z or both");
    require(c.figure == "all" || std::find(figure_ids().begin(), figure_ids().end(), c.figure) != figure_ids().end(),
            "figure", "unknown figure id '" + c.figure + "'");
    require(!c.output_dir.empty(), "output_dir", "must not be empty");
    require(c.lambda_over_pi > 0.0 && c.lambda_over_pi <= 1.0, "lambda_over_pi", "must lie in (0, 1]");
    require(std::abs(c.lambda_over_pi - 0.5) > 1e-12, "lambda_over_pi", "0.5 is singular; use 0.495 or 0.505");
    require(c.omega0_mhz > 0.0, "omega0_mhz", "must be positive");
    for (const auto& [name, lo, hi, step] :
         {std::tuple{"eps", c.eps_min, c.eps_max, c.eps_step}, std::tuple{"delta", c.delta_min, c.delta_max, c.delta_step},
          std::tuple{"lambda", c.lambda_min, c.lambda_max, c.lambda_step},
          std::tuple{"omega0", c.omega0_min_mhz, c.omega0_max_mhz, c.omega0_step_mhz},
          std::tuple{"beta", c.beta_min, c.beta_max, c.beta_step},
          std::tuple{"delta1", c.delta1_min_mhz, c.delta1_max_mhz, c.delta1_step_mhz}}) {
        require(step > 0.0, std::string(name) + "_step", "must be positive");
        require(hi >= lo, std::string(name) + "_max", "must not be below the grid start");
    }
    require(c.lambda_min > 0.0 && c.lambda_max <= 1.0, "lambda_min", "Lambda/pi grid must lie in (0, 1]");
    require(c.omega0_min_mhz > 0.0, "omega0_min_mhz", "must be positive");
    require(c.surface_step > 0.0, "surface_step", "must be positive");
    require(c.alpha_mhz > 0.0, "alpha_mhz", "must be positive");
    require(c.kappa_minus_khz >= 0.0, "kappa_minus_khz", "must be non-negative");
    require(c.kappa_z_khz >= 0.0, "kappa_z_khz", "must be non-negative");
    require(c.g12_mhz > 0.0, "g12_mhz", "must be positive");
    require(std::abs(c.beta) <= 20.0, "beta", "must satisfy |beta| <= 20");
    require(c.gamma_over_pi < 0.0, "gamma_over_pi", "must be negative");
    require(c.lambda2_over_pi > 0.0 && c.lambda2_over_pi <= 1.0 && std::abs(c.lambda2_over_pi - 0.5) > 1e-12,
            "lambda2_over_pi", "must lie in (0, 1] without 0.5");
    require(c.spp > 0.0, "spp", "must be positive");
    require(c.dt_ns >= 0.0, "dt_ns", "must be non-negative");
    if (c.gate == "CPHASE")
        require(c.command != "sweep1q", "gate", "sweep1q needs S, T or H");
}

namespace {

struct Context {
    const RunConfig& cfg;
    std::string hash;
    std::filesystem::path dir;
    std::vector<std::string> artifacts;

    void emit(const std::string& name, const std::string& text) {
        write_file(dir / name, text);
        artifacts.push_back(name);
    }
    void emit_json(const std::string& name, nlohmann::json j) {
        j["config_hash"] = hash;
        emit(name, j.dump(2) + "\n");
    }
};

nlohmann::json twoqubit_schedule_json(const twoqubit::TwoQubitSchedule& s, const twoqubit::TwoQubitParams& p) {
    nlohmann::json j = path::to_json(s.pseudo);
    j["gate"] = "CPHASE";
    j["nu_rad_s"] = s.nu;
    j["g12_eff_rad_s"] = p.g12_eff();
    j["tau_s"] = s.tau;
    j["frame_phase_rad"] = s.frame_phase(s.tau);
    return j;
}

void cmd_synth(Context& ctx) {
    const auto& c = ctx.cfg;
    if (c.gate == "CPHASE") {
        const auto p = twoqubit_params(c);
        const auto s = twoqubit::synthesize_cphase(c.gamma_over_pi * kPi, c.lambda2_over_pi * kPi, p);
        ctx.emit_json("schedule_CPHASE.json", twoqubit_schedule_json(s, p));
        return;
    }
    const auto inst = gates::make_gate(gates::parse_gate(c.gate), gates::parse_family(c.family), c.lambda_over_pi * kPi,
                                       c.omega0_mhz * kMHz, path::parse_shape(c.shape));
    nlohmann::json j = path::to_json(inst.schedule);
    j["gate"] = c.gate;
    j["family"] = c.family;
    j["total_area_rad"] = inst.schedule.total_area();
    j["total_duration_s"] = inst.schedule.total_duration();
    ctx.emit_json("schedule_" + c.gate + "_" + c.family + ".json", j);
    std::cout << "total area " << num(inst.schedule.total_area() / kPi) << " pi, duration "
              << num(inst.schedule.total_duration() * 1e9) << " ns\n";
}

void cmd_simulate(Context& ctx) {
    const auto& c = ctx.cfg;
    const auto t0 = std::chrono::steady_clock::now();
    nlohmann::json j;
    if (c.gate == "CPHASE") {
        const auto p = twoqubit_params(c);
        const auto s = twoqubit::synthesize_cphase(c.gamma_over_pi * kPi, c.lambda2_over_pi * kPi, p);
        const auto rep = twoqubit::two_qubit_fidelity(s, p, c.spp);
        j = {{"gate", "CPHASE"},
             {"Lambda_over_pi", c.lambda2_over_pi},
             {"beta", c.beta},
             {"Delta1_over_2pi_MHz", c.delta1_mhz},
             {"fidelity", rep.fidelity},
             {"fidelity_reduced", rep.fidelity_reduced},
             {"tau_ns", rep.tau * 1e9},
             {"lattice", rep.lattice}};
    } else {
        const auto inst = gates::make_gate(gates::parse_gate(c.gate), gates::parse_family(c.family),
                                           c.lambda_over_pi * kPi, c.omega0_mhz * kMHz, path::parse_shape(c.shape));
        const auto rep = transmon::averaged_gate_fidelity(inst.schedule, inst.target, transmon_params(c), c.with_drag, {},
                                                          1001, c.dt_ns * 1e-9);
        j = {{"gate", c.gate},
             {"configuration", c.family == "geometric_B" ? "B" : (c.family == "geometric_A" ? "A" : "dynamical")},
             {"Lambda_over_pi", c.lambda_over_pi},
             {"omega0_over_2pi_MHz", c.omega0_mhz},
             {"with_drag", c.with_drag},
             {"fidelity", rep.fidelity},
             {"leakage_final", rep.leakage_final}};
    }
    j["runtime_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "fidelity " << num(j["fidelity"].get<double>()) << "\n";
    ctx.emit_json("report_" + c.gate + "_" + c.family + ".json", j);
}

void cmd_sweep1q(Context& ctx) {
    const auto& c = ctx.cfg;
    const auto gate = gates::parse_gate(c.gate);
    const auto family = gates::parse_family(c.family);
    const auto lgrid = lambda_grid(c);
    const bool sx = c.error != "sigma_z", sz = c.error != "sigma_x";
    const auto eps = sx ? grid(c.eps_min, c.eps_max, c.eps_step) : std::vector<double>{0.0};
    const auto del = sz ? grid(c.delta_min, c.delta_max, c.delta_step) : std::vector<double>{0.0};

    auto rows = gates::robustness_sweep(gate, family, lgrid, eps, del);
    if (family != gates::Family::Dynamical) {
        const auto base = gates::robustness_sweep(gate, gates::Family::Dynamical, lgrid, eps, del);
        rows.insert(rows.end(), base.begin(), base.end());
    }
    ctx.emit("sweep_" + c.gate + "_" + c.family + ".csv", gates::sweep_csv(rows, "config_hash=" + ctx.hash));

    if (family == gates::Family::Dynamical) return;
    nlohmann::json adv;
    std::vector<gates::Interval> combined;
    bool first = true;
    for (auto [on, type, errs] : {std::tuple{sx, gates::ErrorType::SigmaX, eps}, std::tuple{sz, gates::ErrorType::SigmaZ, del}}) {
        if (!on) continue;
        const auto iv = gates::advantage_range(gate, family, type, lgrid, errs);
        adv[gates::to_string(type)] = intervals_json(iv);
        std::cout << gates::to_string(type) << " advantage (Lambda/pi): " << intervals_text(iv) << "\n";
        if (first) {
            combined = iv;
            first = false;
        } else {
            std::vector<gates::Interval> both;
            for (const auto& a : combined)
                for (const auto& b : iv) {
                    const double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
                    if (lo <= hi) both.push_back({lo, hi});
                }
            combined = both;
        }
    }
    adv["both"] = intervals_json(combined);
    adv["gate"] = c.gate;
    adv["family"] = c.family;
    ctx.emit_json("advantage_" + c.gate + "_" + c.family + ".json", adv);
}

void cmd_sweep2q(Context& ctx) {
    ctx.emit("sweep2q.csv", figure_csv("fig7a", ctx.cfg));
}

void cmd_figure(Context& ctx) {
    const auto& c = ctx.cfg;
    const std::vector<std::string> ids = c.figure == "all" ? figure_ids() : std::vector<std::string>{c.figure};
    for (const auto& id : ids) {
        std::cout << "computing " << id << "\n" << std::flush;
        ctx.emit(id + ".csv", figure_csv(id, c));
    }
}

} // namespace

int run(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        validate(cfg);
        Context ctx{cfg, config_hash(cfg), cfg.output_dir, {}};
        std::error_code ec;
        std::filesystem::create_directories(ctx.dir, ec);
        if (ec) throw ConfigError("field 'output_dir': cannot create '" + cfg.output_dir + "': " + ec.message());

        if (cfg.command == "synth") cmd_synth(ctx);
        else if (cfg.command == "simulate") cmd_simulate(ctx);
        else if (cfg.command == "sweep1q") cmd_sweep1q(ctx);
        else if (cfg.command == "sweep2q") cmd_sweep2q(ctx);
        else cmd_figure(ctx);

        nlohmann::json manifest = {{"config", to_json(cfg)},
                                   {"config_hash", ctx.hash},
                                   {"version", kVersion},
                                   {"simd_variant", std::string(kernels::active_variant())},
                                   {"threads", worker_count()},
                                   {"artifacts", ctx.artifacts},
                                   {"wall_time_s", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
        write_file(ctx.dir / "manifest.json", manifest.dump(2) + "\n");
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n"
                  << "hint: lower --dt-ns or raise --spp to shrink the integration step\n";
        return 3;
    }
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Path-optimized geometric gate synthesis and simulation"};
    std::string command, configPath;
    app.add_option("command", command, "synth | simulate | sweep1q | sweep2q | figure");
    app.add_option("--config", configPath, "TOML-style config file; flags override its values");
    std::map<std::string, std::string> given;
    std::vector<std::pair<std::string, CLI::Option*>> options;
    for (const auto& f : fields()) {
        if (f.key == "command") continue;
        auto* opt = app.add_option("--" + flag_name(f.key), given[f.key], f.help);
        options.emplace_back(f.key, opt);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunConfig cfg;
    try {
        if (!configPath.empty()) load_config_file(configPath, cfg);
        if (!command.empty()) cfg.command = command;
        for (const auto& [key, opt] : options)
            if (opt->count() > 0) set_field(cfg, key, given[key]);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
    return run(cfg);
}

} // namespace geomgate::cli
