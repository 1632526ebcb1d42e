#include "geomgate/transmon.hpp"

#include "geomgate/errors.hpp"
#include "geomgate/evolve.hpp"
#include "geomgate/parallel.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

namespace geomgate::transmon {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

std::vector<CollapseChannel> qutrit_channels(const TransmonParams& p) {
    ComplexMatrix lower(3);
    lower(0, 1) = 1.0;
    lower(1, 2) = kSqrt2;
    return {{lower, p.kappa_minus}, {ComplexMatrix::diagonal({0.0, 1.0, 2.0}), p.kappa_z}};
}

void validate(const TransmonParams& p) {
    if (!(p.alpha > 0.0)) throw ValidationError("transmon anharmonicity must be positive");
    if (p.kappa_minus < 0.0 || p.kappa_z < 0.0) throw ValidationError("decoherence rates must be non-negative");
}

} // namespace

TransmonParams TransmonParams::reference() {
    return {2 * kPi * 5e9, 2 * kPi * 220e6, 2 * kPi * 4e3, 2 * kPi * 4e3};
}

cplx DragSchedule::corrected_omega(std::size_t seg, double t) const {
    const auto& s = base.segments.at(seg);
    const double om = s.omega(t);
    if (!enabled) return om;
    return cplx(om, 0.0) - cplx((s.phi_dot(t) + s.delta) * om, s.omega_dot(t)) / (2.0 * alpha);
}

DragSchedule make_drag(const path::PulseSchedule& base, const TransmonParams& params, bool with_drag) {
    DragSchedule d{base, with_drag, params.alpha};
    if (with_drag) {
        for (const auto& s : base.segments) {
            if (s.shape == path::Shape::Const) {
                std::cerr << "warning: DRAG disabled for a schedule with constant-envelope segments\n";
                d.enabled = false;
                break;
            }
        }
    }
    return d;
}

ComplexMatrix three_level_hamiltonian(const DragSchedule& drag, const TransmonParams& params, std::size_t seg, double t,
                                      const gates::ErrorModel& err) {
    const auto& s = drag.base.segments.at(seg);
    const double det = s.delta + err.delta * drag.base.peak_amplitude();
    const cplx drive = 0.5 * (1.0 + err.epsilon) * drag.corrected_omega(seg, t) * std::polar(1.0, -s.phi(t));
    ComplexMatrix h(3);
    h(0, 0) = -0.5 * det;
    h(1, 1) = 0.5 * det;
    h(2, 2) = 1.5 * det - params.alpha;
    h(0, 1) = drive;
    h(1, 0) = std::conj(drive);
    h(1, 2) = kSqrt2 * drive;
    h(2, 1) = std::conj(h(1, 2));
    return h;
}

AveragedFidelityReport averaged_gate_fidelity(const path::PulseSchedule& schedule, const ComplexMatrix& target,
                                              const TransmonParams& params, bool with_drag,
                                              const gates::ErrorModel& err, std::size_t n_states, double dt) {
    validate(params);
    if (target.dim() != 2) throw ValidationError("target gate must be 2x2");
    if (n_states < 2) throw ValidationError("need at least two initial states");

    // Propagate the four operators |a><b| of the qubit subspace; every initial state's
    // final density matrix is a quadratic combination of them.
    std::vector<ComplexMatrix> ops;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) ops.push_back(ComplexMatrix::unit(3, a, b));

    if (!schedule.segments.empty()) {
        if (dt <= 0.0) dt = path::default_dt(schedule);
        const DragSchedule drag = make_drag(schedule, params, with_drag);
        LindbladStepper stepper(qutrit_channels(params), 3);
        for (std::size_t i = 0; i < schedule.segments.size(); ++i) {
            const auto& seg = schedule.segments[i];
            const std::size_t n = path::segment_steps(seg, dt);
            TimeDependentHamiltonian h{3, [&, i](double t) { return three_level_hamiltonian(drag, params, i, t, err); }};
            stepper.advance(h, 0.0, seg.duration, seg.duration / static_cast<double>(n), ops);
        }
    }

    AveragedFidelityReport rep;
    rep.n_states = n_states;
    std::vector<double> fid(n_states), leak(n_states);
    for (std::size_t k = 0; k < n_states; ++k) {
        const double theta = 2 * kPi * static_cast<double>(k) / static_cast<double>(n_states - 1);
        rep.theta_grid.push_back(theta);
        const double c[2] = {std::cos(theta), std::sin(theta)};
        const cplx f[2] = {target(0, 0) * c[0] + target(0, 1) * c[1], target(1, 0) * c[0] + target(1, 1) * c[1]};
        double overlap = 0.0, pop2 = 0.0;
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                const auto& e = ops[2 * a + b];
                cplx q = 0.0;
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t s = 0; s < 2; ++s) q += std::conj(f[r]) * e(r, s) * f[s];
                overlap += c[a] * c[b] * q.real();
                pop2 += c[a] * c[b] * e(2, 2).real();
            }
        }
        fid[k] = overlap;
        leak[k] = pop2;
    }
    rep.fidelity = tree_sum(fid.data(), n_states) / static_cast<double>(n_states);
    rep.leakage_final = tree_sum(leak.data(), n_states) / static_cast<double>(n_states);
    return rep;
}

AveragedFidelityReport averaged_gate_fidelity(gates::Gate gate, gates::Family family, double Lambda, double omega0,
                                              const TransmonParams& params, bool with_drag,
                                              const gates::ErrorModel& err) {
    const auto inst = gates::make_gate(gate, family, Lambda, omega0);
    return averaged_gate_fidelity(inst.schedule, inst.target, params, with_drag, err);
}

PeakScan optimize_pulse_peak(gates::Gate gate, gates::Family family, double Lambda, const TransmonParams& params,
                             const std::vector<double>& omega0_grid, bool with_drag) {
    if (omega0_grid.empty()) throw ValidationError("omega0 grid must be nonempty");
    PeakScan scan;
    scan.omega0_grid = omega0_grid;
    scan.fidelity.resize(omega0_grid.size());
    parallel_for(omega0_grid.size(), [&](std::size_t i) {
        scan.fidelity[i] = averaged_gate_fidelity(gate, family, Lambda, omega0_grid[i], params, with_drag).fidelity;
    });
    double best = -1.0;
    for (double f : scan.fidelity) best = std::max(best, f);
    for (std::size_t i = 0; i < omega0_grid.size(); ++i) {
        if (scan.fidelity[i] >= best - 1e-9) {
            scan.omega0_star = omega0_grid[i];
            break;
        }
    }
    return scan;
}

std::vector<SurfacePoint> decoherent_robustness(gates::Gate gate, gates::Family family, double Lambda, double omega0,
                                                const TransmonParams& params, const std::vector<double>& epsilon_grid,
                                                const std::vector<double>& delta_grid, bool with_drag) {
    const auto inst = gates::make_gate(gate, family, Lambda, omega0);
    std::vector<SurfacePoint> out(epsilon_grid.size() * delta_grid.size());
    parallel_for(out.size(), [&](std::size_t k) {
        const double e = epsilon_grid[k / delta_grid.size()];
        const double d = delta_grid[k % delta_grid.size()];
        out[k] = {e, d, averaged_gate_fidelity(inst.schedule, inst.target, params, with_drag, {e, d}).fidelity};
    });
    return out;
}

} // namespace geomgate::transmon
