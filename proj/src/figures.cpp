#include "geomgate/cli.hpp"

#include "geomgate/errors.hpp"
#include "geomgate/gates.hpp"
#include "geomgate/path.hpp"
#include "geomgate/transmon.hpp"
#include "geomgate/twoqubit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace geomgate::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMHz = 2 * kPi * 1e6;
constexpr double kKHz = 2 * kPi * 1e3;

using gates::ErrorType;
using gates::Family;
using gates::Gate;

// The four optimized single-qubit gate configurations.
struct Series {
    Gate gate;
    Family family;
    double lambda_over_pi;
};

const std::vector<Series> kSeries = {{Gate::S, Family::GeometricA, 0.42},
                                     {Gate::T, Family::GeometricA, 0.33},
                                     {Gate::H, Family::GeometricA, 0.495},
                                     {Gate::H, Family::GeometricB, 0.70}};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class Csv {
public:
    Csv(const RunConfig& cfg, std::initializer_list<const char*> columns) {
        os_ << "# config_hash=" << config_hash(cfg) << "\n";
        bool first = true;
        for (const char* c : columns) {
            os_ << (first ? "" : ",") << c;
            first = false;
        }
        os_ << "\n";
    }
    template <typename... Ts>
    void row(const Ts&... cells) {
        bool first = true;
        ((os_ << (first ? "" : ",") << cell(cells), first = false), ...);
        os_ << "\n";
    }
    std::string str() const { return os_.str(); }

private:
    static std::string cell(double v) { return num(v); }
    static std::string cell(const std::string& s) { return s; }
    static std::string cell(const char* s) { return s; }
    std::ostringstream os_;
};

std::vector<double> lambda_grid(const RunConfig& c) {
    std::vector<double> out;
    for (double v : gates::uniform_grid(c.lambda_min, c.lambda_max, c.lambda_step))
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

double geometric_area_over_pi(Gate g, Family f, double lambda_over_pi, path::Shape shape) {
    return gates::make_gate(g, f, lambda_over_pi * kPi, 2 * kPi * 20e6, shape).schedule.total_area() / kPi;
}

std::string fig2b(const RunConfig& c) {
    Csv csv(c, {"Lambda_over_pi", "area_S", "area_T", "area_H", "dyn_S", "dyn_T", "dyn_H"});
    const auto shape = path::parse_shape(c.shape);
    const double dS = gates::dynamical_gate_spec(Gate::S).total_area() / kPi;
    const double dT = gates::dynamical_gate_spec(Gate::T).total_area() / kPi;
    const double dH = gates::dynamical_gate_spec(Gate::H).total_area() / kPi;
    for (double l : lambda_grid(c))
        csv.row(l, geometric_area_over_pi(Gate::S, Family::GeometricA, l, shape),
                geometric_area_over_pi(Gate::T, Family::GeometricA, l, shape),
                geometric_area_over_pi(Gate::H, Family::GeometricA, l, shape), dS, dT, dH);
    return csv.str();
}

std::string sweep_figure(const RunConfig& c, const std::vector<std::pair<Gate, Family>>& runs) {
    const auto lgrid = lambda_grid(c);
    const auto eps = gates::uniform_grid(c.eps_min, c.eps_max, c.eps_step);
    const auto del = gates::uniform_grid(c.delta_min, c.delta_max, c.delta_step);
    std::vector<gates::SweepRow> rows;
    for (const auto& [g, f] : runs) {
        const auto part = gates::robustness_sweep(g, f, lgrid, eps, del);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return gates::sweep_csv(rows, "config_hash=" + config_hash(c));
}

std::string fig4(const RunConfig& c) {
    Csv csv(c, {"gate", "family", "error_type", "Lambda_over_pi", "worst_difference", "dominant"});
    const auto lgrid = lambda_grid(c);
    const auto eps = gates::uniform_grid(c.eps_min, c.eps_max, c.eps_step);
    const auto del = gates::uniform_grid(c.delta_min, c.delta_max, c.delta_step);
    for (const auto& s : kSeries)
        for (ErrorType e : {ErrorType::SigmaX, ErrorType::SigmaZ}) {
            const auto curve = gates::dominance_curve(s.gate, s.family, e, lgrid, e == ErrorType::SigmaX ? eps : del);
            for (std::size_t i = 0; i < curve.Lambda_over_pi.size(); ++i)
                csv.row(gates::to_string(s.gate), gates::to_string(s.family), gates::to_string(e),
                        curve.Lambda_over_pi[i], curve.worst_difference[i],
                        curve.worst_difference[i] >= -1e-9 ? "1" : "0");
        }
    return csv.str();
}

transmon::PeakScan peak_scan(const RunConfig& c, const Series& s) {
    std::vector<double> grid;
    for (double m : gates::uniform_grid(c.omega0_min_mhz, c.omega0_max_mhz, c.omega0_step_mhz)) grid.push_back(m * kMHz);
    return transmon::optimize_pulse_peak(s.gate, s.family, s.lambda_over_pi * kPi, transmon_params(c), grid, c.with_drag);
}

std::string fig5(const RunConfig& c) {
    Csv csv(c, {"gate", "configuration", "Lambda_over_pi", "omega0_over_2pi_MHz", "fidelity"});
    for (const auto& s : kSeries) {
        const auto scan = peak_scan(c, s);
        const std::string conf = s.family == Family::GeometricA ? "A" : "B";
        for (std::size_t i = 0; i < scan.omega0_grid.size(); ++i)
            csv.row(gates::to_string(s.gate), conf, s.lambda_over_pi, scan.omega0_grid[i] / kMHz, scan.fidelity[i]);
    }
    return csv.str();
}

std::string fig6(const RunConfig& c) {
    Csv csv(c, {"gate", "family", "Lambda_over_pi", "omega0_over_2pi_MHz", "epsilon", "delta", "fidelity"});
    const auto grid = gates::uniform_grid(-0.1, 0.1, c.surface_step);
    const auto params = transmon_params(c);
    for (const auto& s : kSeries) {
        const double omega0 = peak_scan(c, s).omega0_star;
        // The dynamical baseline runs at the same peak; configuration B shares it with A for H.
        std::vector<Family> families{s.family};
        if (s.family == Family::GeometricA) families.push_back(Family::Dynamical);
        for (Family f : families) {
            const auto surf =
                transmon::decoherent_robustness(s.gate, f, s.lambda_over_pi * kPi, omega0, params, grid, grid, c.with_drag);
            for (const auto& p : surf)
                csv.row(gates::to_string(s.gate), gates::to_string(f), s.lambda_over_pi, omega0 / kMHz, p.epsilon, p.delta,
                        p.fidelity);
        }
    }
    return csv.str();
}

std::string fig7a(const RunConfig& c) {
    Csv csv(c, {"beta", "Delta1_over_2pi_MHz", "fidelity"});
    std::vector<double> d1;
    for (double m : gates::uniform_grid(c.delta1_min_mhz, c.delta1_max_mhz, c.delta1_step_mhz)) d1.push_back(m * kMHz);
    const auto surf = twoqubit::parameter_sweep(c.gamma_over_pi * kPi, c.lambda2_over_pi * kPi, twoqubit_params(c),
                                                gates::uniform_grid(c.beta_min, c.beta_max, c.beta_step), d1, c.spp);
    for (const auto& p : surf) csv.row(p.beta, p.Delta1 / kMHz, p.fidelity);
    return csv.str();
}

std::string fig7b(const RunConfig& c) {
    Csv csv(c, {"t_ns", "p01", "p11", "p02", "running_fidelity"});
    const auto p = twoqubit_params(c);
    const auto sched = twoqubit::synthesize_cphase(c.gamma_over_pi * kPi, c.lambda2_over_pi * kPi, p);
    std::vector<cplx> psi(9, 0.0);
    psi[twoqubit::idx(0, 1)] = psi[twoqubit::idx(1, 1)] = 1.0 / std::sqrt(2.0);
    for (const auto& s : twoqubit::population_trace(sched, p, psi, 200, c.spp))
        csv.row(s.t * 1e9, s.p01, s.p11, s.p02, s.running_fidelity);
    return csv.str();
}

std::string fig9(const RunConfig& c) {
    Csv csv(c, {"Lambda_over_pi", "worst_difference_sigma_x", "worst_difference_sigma_z", "area_H_B", "area_dyn_H"});
    const auto lgrid = lambda_grid(c);
    const auto eps = gates::uniform_grid(c.eps_min, c.eps_max, c.eps_step);
    const auto del = gates::uniform_grid(c.delta_min, c.delta_max, c.delta_step);
    const auto x = gates::dominance_curve(Gate::H, Family::GeometricB, ErrorType::SigmaX, lgrid, eps);
    const auto z = gates::dominance_curve(Gate::H, Family::GeometricB, ErrorType::SigmaZ, lgrid, del);
    const double dyn = gates::dynamical_gate_spec(Gate::H).total_area() / kPi;
    const auto shape = path::parse_shape(c.shape);
    for (std::size_t i = 0; i < lgrid.size(); ++i)
        csv.row(lgrid[i], x.worst_difference[i], z.worst_difference[i],
                geometric_area_over_pi(Gate::H, Family::GeometricB, lgrid[i], shape), dyn);
    return csv.str();
}

} // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"fig2b", "fig3", "fig4", "fig5", "fig6", "fig7a", "fig7b", "fig8", "fig9"};
    return ids;
}

std::string figure_csv(const std::string& id, const RunConfig& cfg) {
    if (id == "fig2b") return fig2b(cfg);
    if (id == "fig3")
        return sweep_figure(cfg, {{Gate::S, Family::GeometricA},
                                  {Gate::S, Family::Dynamical},
                                  {Gate::T, Family::GeometricA},
                                  {Gate::T, Family::Dynamical},
                                  {Gate::H, Family::GeometricA},
                                  {Gate::H, Family::Dynamical}});
    if (id == "fig4") return fig4(cfg);
    if (id == "fig5") return fig5(cfg);
    if (id == "fig6") return fig6(cfg);
    if (id == "fig7a") return fig7a(cfg);
    if (id == "fig7b") return fig7b(cfg);
    if (id == "fig8") return sweep_figure(cfg, {{Gate::H, Family::GeometricB}, {Gate::H, Family::Dynamical}});
    if (id == "fig9") return fig9(cfg);
    throw ConfigError("field 'figure': unknown figure id '" + id + "'");
}

} // namespace geomgate::cli
