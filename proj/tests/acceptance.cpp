// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "geomgate/cli.hpp"
#include "geomgate/evolve.hpp"
#include "geomgate/gates.hpp"
#include "geomgate/linalg.hpp"
#include "geomgate/path.hpp"
#include "geomgate/transmon.hpp"
#include "geomgate/twoqubit.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace geomgate;
using gates::ErrorType;
using gates::Family;
using gates::Gate;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMHz = 2 * kPi * 1e6;
constexpr double kPeak = 2 * kPi * 20e6;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string intervals(const std::vector<gates::Interval>& iv) {
    std::string s;
    for (const auto& i : iv) s += fmt::format("{}[{:.2f}, {:.2f}]", s.empty() ? "" : " u ", i.lo, i.hi);
    return s.empty() ? "(none)" : s;
}

Outcome phases() {
    double worstGeo = 0, worstDyn = 0;
    for (Gate g : {Gate::S, Gate::T, Gate::H})
        for (Family f : {Family::GeometricA, Family::GeometricB})
            for (double l : gates::default_lambda_grid()) {
                const auto inst = gates::make_gate(g, f, l * kPi, kPeak);
                const auto& spec = *inst.schedule.path;
                const auto p = path::integrate_path(inst.schedule, spec.chi0, spec.xi0);
                const double target = spec.gamma_g + (f == Family::GeometricB ? -kPi : 0.0);
                worstGeo = std::max(worstGeo, std::abs(std::remainder(path::geometric_phase(p) - target, 2 * kPi)));
                worstDyn = std::max(worstDyn, std::abs(path::dynamical_phase(p, inst.schedule)));
            }
    return {worstGeo <= 1e-4 && worstDyn <= 1e-4,
            fmt::format("max geometric-phase error {:.2e} rad, max |dynamical phase| {:.2e} rad", worstGeo, worstDyn)};
}

Outcome ideal_gates() {
    double worst = 0;
    for (Gate g : {Gate::S, Gate::T, Gate::H})
        for (Family f : {Family::GeometricA, Family::GeometricB})
            for (double l : gates::default_lambda_grid()) {
                const auto inst = gates::make_gate(g, f, l * kPi, kPeak);
                worst = std::max(worst, 1 - gates::gate_fidelity(inst.target, gates::realized_unitary(inst.schedule, {})));
            }
    return {worst <= 1e-7, fmt::format("worst infidelity {:.2e}", worst)};
}

Outcome area_crossovers() {
    struct Case {
        Gate gate;
        double lo, hi;
    };
    bool ok = true;
    std::string detail;
    for (const auto& [gate, lo, hi] : {Case{Gate::S, 0.23, 0.67}, Case{Gate::T, 0.15, 0.59}, Case{Gate::H, 0.34, 0.62}}) {
        const double dyn = gates::dynamical_gate_spec(gate).total_area();
        gates::DominanceCurve below;
        for (double l : gates::default_lambda_grid()) {
            below.Lambda_over_pi.push_back(l);
            const double area = gates::make_gate(gate, Family::GeometricA, l * kPi, kPeak).schedule.total_area();
            below.worst_difference.push_back(dyn - area > 0 ? 1.0 : -1.0);
        }
        // Runs either side of the excluded 0.5 merge into one interval.
        auto iv = gates::dominance_intervals(below, 0.0);
        if (iv.size() == 2 && std::abs(iv[0].hi - 0.49) < 1e-9 && std::abs(iv[1].lo - 0.51) < 1e-9)
            iv = {{iv[0].lo, iv[1].hi}};
        const bool good = iv.size() == 1 && std::abs(iv[0].lo - lo) <= 0.01 + 1e-9 && std::abs(iv[0].hi - hi) <= 0.01 + 1e-9;
        ok = ok && good;
        detail += fmt::format("{}: {} (expected [{:.2f}, {:.2f}]); ", gates::to_string(gate), intervals(iv), lo, hi);
    }
    return {ok, detail};
}

std::vector<gates::Interval> intersect(const std::vector<gates::Interval>& a, const std::vector<gates::Interval>& b) {
    std::vector<gates::Interval> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            const double lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
            if (lo <= hi + 1e-12) out.push_back({lo, hi});
        }
    return out;
}

// Intervals on which the geometric and dynamical gates give the same fidelity at every
// error point are ties, not advantages; they are not counted against the expectation.
std::vector<gates::Interval> drop_ties(const std::vector<gates::Interval>& iv, Gate g, Family f, ErrorType e,
                                       const std::vector<double>& lam, const std::vector<double>& err) {
    std::vector<gates::Interval> out;
    const std::vector<double> zero{0.0};
    for (const auto& i : iv) {
        std::vector<double> inside;
        for (double l : lam)
            if (l >= i.lo - 1e-12 && l <= i.hi + 1e-12) inside.push_back(l);
        const auto& eps = e == ErrorType::SigmaX ? err : zero;
        const auto& del = e == ErrorType::SigmaX ? zero : err;
        const auto geo = gates::robustness_sweep(g, f, inside, eps, del);
        const auto dyn = gates::robustness_sweep(g, Family::Dynamical, inside, eps, del);
        double spread = 0.0;
        for (std::size_t k = 0; k < geo.size(); ++k) spread = std::max(spread, std::abs(geo[k].fidelity - dyn[k].fidelity));
        if (spread > 1e-9) out.push_back(i);
    }
    return out;
}

bool matches(const std::vector<gates::Interval>& got, const std::vector<gates::Interval>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i].lo - want[i].lo) > 0.02 + 1e-9 || std::abs(got[i].hi - want[i].hi) > 0.02 + 1e-9) return false;
    return true;
}

Outcome advantage_ranges() {
    const auto lam = gates::default_lambda_grid();
    const auto err = gates::default_error_grid();
    const auto set = [&](Gate g, Family f, ErrorType e) {
        const auto c = gates::dominance_curve(g, f, e, lam, err);
        return drop_ties(gates::dominance_intervals(c), g, f, e, lam, err);
    };
    struct Check {
        std::string name;
        std::vector<gates::Interval> got, want;
    };
    std::vector<Check> checks;
    for (auto [g, lo] : {std::pair{Gate::S, 0.30}, std::pair{Gate::T, 0.19}})
        checks.push_back({gates::to_string(g) + " both errors",
                          intersect(set(g, Family::GeometricA, ErrorType::SigmaX), set(g, Family::GeometricA, ErrorType::SigmaZ)),
                          {{lo, 1.0}}});
    checks.push_back({"H sigma_x A", set(Gate::H, Family::GeometricA, ErrorType::SigmaX), {{0.30, 1.0}}});
    checks.push_back({"H sigma_x B", set(Gate::H, Family::GeometricB, ErrorType::SigmaX), {{0.41, 0.61}}});
    checks.push_back({"H sigma_z B", set(Gate::H, Family::GeometricB, ErrorType::SigmaZ), {{0.65, 0.75}}});
    bool ok = true;
    std::string detail;
    for (const auto& c : checks) {
        const bool good = matches(c.got, c.want);
        ok = ok && good;
        detail += fmt::format("{}: {} (expected {}{}); ", c.name, intervals(c.got), intervals(c.want), good ? "" : ", MISMATCH");
    }
    return {ok, detail};
}

Outcome transmon_fidelities() {
    struct Case {
        Gate gate;
        Family family;
        double lambda, omega0_mhz, expected;
    };
    const auto params = transmon::TransmonParams::reference();
    bool ok = true;
    std::string detail;
    for (const auto& c : {Case{Gate::S, Family::GeometricA, 0.42, 19, 0.9993}, Case{Gate::T, Family::GeometricA, 0.33, 24, 0.9995},
                          Case{Gate::H, Family::GeometricA, 0.495, 30, 0.9995}, Case{Gate::H, Family::GeometricB, 0.70, 30, 0.9990}}) {
        const double f =
            transmon::averaged_gate_fidelity(c.gate, c.family, c.lambda * kPi, c.omega0_mhz * kMHz, params, true).fidelity;
        const bool good = std::abs(f - c.expected) <= 0.0005;
        ok = ok && good;
        detail += fmt::format("{} {} {:.5f} (expected {:.4f}); ", gates::to_string(c.gate), gates::to_string(c.family), f, c.expected);
    }
    return {ok, detail};
}

Outcome two_qubit() {
    const auto p = twoqubit::TwoQubitParams::reference();
    const double gamma = -kPi / 4, lambda = 0.45 * kPi;
    const auto rep = twoqubit::two_qubit_fidelity(twoqubit::synthesize_cphase(gamma, lambda, p), p);
    std::vector<double> betas, deltas;
    for (int i = -2; i <= 2; ++i) {
        betas.push_back(1.9 + 0.05 * i);
        deltas.push_back((388 + 2.5 * i) * kMHz);
    }
    const auto surf = twoqubit::parameter_sweep(gamma, lambda, p, betas, deltas);
    double worst = 1.0;
    for (const auto& s : surf) worst = std::min(worst, s.fidelity);
    const bool central = std::abs(rep.fidelity - 0.9987) <= 0.001;
    const bool reduced = std::abs(rep.fidelity - rep.fidelity_reduced) <= 3e-4;
    const bool plateau = worst >= 0.9985;
    return {central && reduced && plateau,
            fmt::format("F2 = {:.5f} (expected 0.9987 +- 0.001{}); 301-state F2 = {:.5f} (diff {:.1e}{}); "
                        "5x5 grid minimum {:.5f} (required >= 0.9985{})",
                        rep.fidelity, central ? "" : ", MISS", rep.fidelity_reduced, std::abs(rep.fidelity - rep.fidelity_reduced),
                        reduced ? "" : ", MISS", worst, plateau ? "" : ", MISS")};
}

Outcome open_system() {
    // Trace and positivity along a decoherent transmon gate with exaggerated rates.
    const auto inst = gates::make_gate(Gate::S, Family::GeometricA, 0.42 * kPi, 19 * kMHz);
    transmon::TransmonParams strong = transmon::TransmonParams::reference();
    strong.kappa_minus = strong.kappa_z = 2 * kPi * 2e6;
    const auto drag = transmon::make_drag(inst.schedule, strong, true);
    const auto starts = inst.schedule.start_times();
    const TimeDependentHamiltonian h{3, [&](double t) {
                                         const auto [seg, local] = inst.schedule.locate(t);
                                         return transmon::three_level_hamiltonian(drag, strong, seg, local);
                                     }};
    ComplexMatrix lower(3);
    lower(0, 1) = 1.0;
    lower(1, 2) = std::sqrt(2.0);
    const std::vector<CollapseChannel> ch{{lower, strong.kappa_minus}, {ComplexMatrix::diagonal({0.0, 1.0, 2.0}), strong.kappa_z}};
    const double T = inst.schedule.total_duration();
    const auto rho0 = DensityMatrix::pure({0.6, cplx(0, 0.8), 0.0});
    double traceErr = 0, floor = 0;
    for (int k = 1; k <= 8; ++k) {
        const auto rho = evolve_lindblad(h, ch, rho0, 0.0, T * k / 8, T / 4000);
        traceErr = std::max(traceErr, std::abs(rho.matrix().trace() - 1.0));
        floor = std::min(floor, eigh(rho.matrix()).values.front());
    }
    // Zero rates reduce to unitary conjugation.
    const std::vector<CollapseChannel> off{{lower, 0.0}};
    const auto u = evolve_unitary(h, 0.0, T, T / 4000);
    const double unitaryErr =
        max_abs_diff(evolve_lindblad(h, off, rho0, 0.0, T, T / 4000).matrix(), u * rho0.matrix() * u.adjoint());
    // Analytic relaxation and dephasing of an undriven two-level system.
    const double kappa = 2 * kPi * 4e3, t = 40e-6;
    const TimeDependentHamiltonian idle{2, [](double) { return ComplexMatrix::zero(2); }};
    const auto decay = evolve_lindblad(idle, {{ComplexMatrix::unit(2, 0, 1), kappa}}, DensityMatrix::pure({0.0, 1.0}), 0.0, t, 1e-7);
    const double decayErr = std::abs(decay.matrix()(1, 1).real() / std::exp(-kappa * t) - 1.0);
    const double r = 1 / std::sqrt(2.0);
    const auto deph = evolve_lindblad(idle, {{pauli::Z(), kappa}}, DensityMatrix::pure({r, r}), 0.0, t, 1e-7);
    const double dephErr = std::abs(std::abs(deph.matrix()(0, 1)) / (0.5 * std::exp(-2 * kappa * t)) - 1.0);
    return {traceErr <= 1e-7 && floor >= -1e-7 && unitaryErr <= 1e-8 && decayErr <= 1e-6 && dephErr <= 1e-6,
            fmt::format("trace drift {:.1e}, eigenvalue floor {:.1e}, zero-rate vs unitary {:.1e}, decay rel. err {:.1e}, "
                        "dephasing rel. err {:.1e}",
                        traceErr, floor, unitaryErr, decayErr, dephErr)};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const auto base = fs::temp_directory_path() / "geomgate_acceptance_determinism";
    fs::remove_all(base);
    std::vector<cli::RunConfig> configs(3);
    configs[0].command = "sweep1q";
    configs[0].gate = "T";
    configs[0].error = "sigma_z";
    configs[0].lambda_min = 0.15;
    configs[0].lambda_max = 0.25;
    configs[1].command = "figure";
    configs[1].figure = "fig7b";
    configs[2].command = "simulate";
    configs[2].gate = "S";
    std::size_t compared = 0;
    bool same = true;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        std::vector<std::string> runs;
        // Vary the worker count between runs: results must not depend on scheduling.
        for (const char* threads : {"1", "4", "4"}) {
            setenv("GEOMGATE_THREADS", threads, 1);
            auto cfg = configs[i];
            cfg.output_dir = (base / fmt::format("c{}_{}_{}", i, threads, runs.size())).string();
            // Keep the command's progress lines out of the criterion report.
            std::ostringstream sink;
            auto* saved = std::cout.rdbuf(sink.rdbuf());
            const int status = cli::run(cfg);
            std::cout.rdbuf(saved);
            if (status != 0) return {false, "run failed for config " + std::to_string(i)};
            std::string all;
            for (const auto& e : fs::directory_iterator(cfg.output_dir))
                if (e.path().extension() == ".csv") all += e.path().filename().string() + "\n" + slurp(e.path());
            runs.push_back(all);
        }
        unsetenv("GEOMGATE_THREADS");
        for (const auto& r : runs) {
            same = same && r == runs.front();
            compared += r.empty() ? 0 : 1;
        }
    }
    fs::remove_all(base);
    return {same, fmt::format("{} CSV run sets compared across 1 and 4 worker threads: {}", compared,
                              same ? "byte-identical" : "DIFFERENT")};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"phase correctness", phases},        {"ideal gate equivalence", ideal_gates},
        {"pulse-area crossovers", area_crossovers}, {"advantage ranges", advantage_ranges},
        {"transmon fidelities", transmon_fidelities}, {"two-qubit gate", two_qubit},
        {"open-system sanity", open_system},  {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += o.pass ? 0 : 1;
        std::cout << fmt::format("{} criterion {} ({}): {} [{:.1f} s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                                 o.detail, secs)
                  << std::flush;
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
