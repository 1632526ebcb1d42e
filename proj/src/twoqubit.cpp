#include "geomgate/twoqubit.hpp"

#include "geomgate/errors.hpp"
#include "geomgate/evolve.hpp"
#include "geomgate/gates.hpp"
#include "geomgate/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geomgate::twoqubit {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
constexpr std::size_t kComp[4] = {idx(0, 0), idx(0, 1), idx(1, 0), idx(1, 1)};
// Keeps the pseudo-qubit picture meaningful: the off-resonant shift must stay well
// below the anharmonic level spacing.
constexpr double kMaxDetuning = 2 * kPi * 200e6;

std::vector<CollapseChannel> two_qutrit_channels(const TwoQubitParams& p) {
    ComplexMatrix lower(3);
    lower(0, 1) = 1.0;
    lower(1, 2) = kSqrt2;
    const ComplexMatrix number = ComplexMatrix::diagonal({0.0, 1.0, 2.0});
    const ComplexMatrix id = ComplexMatrix::identity(3);
    return {{kron(lower, id), p.kappa_minus},
            {kron(id, lower), p.kappa_minus},
            {kron(number, id), p.kappa_z},
            {kron(id, number), p.kappa_z}};
}

double step_size(const TwoQubitSchedule& sched, double spp) {
    if (!(spp > 0.0)) throw ValidationError("samples per modulation period must be positive");
    double fastest = 0.0;
    for (double n : sched.nu) fastest = std::max(fastest, std::abs(n));
    if (fastest <= 0.0) return sched.tau / 4000.0;
    return (2 * kPi / fastest) / spp;
}

// Runs `body(segment, t_from, t_to)` over the pieces of [t0, t1] cut at segment boundaries.
template <class Body>
void for_each_piece(const TwoQubitSchedule& sched, double t0, double t1, Body&& body) {
    for (std::size_t i = 0; i < sched.pseudo.segments.size(); ++i) {
        const double a = std::max(t0, sched.start[i]);
        const double b = std::min(t1, sched.start[i] + sched.pseudo.segments[i].duration);
        if (b > a) body(i, a, b);
    }
}

TimeDependentHamiltonian hamiltonian(const TwoQubitParams& p, const TwoQubitSchedule& sched) {
    return {9, [&p, &sched](double t) { return full_hamiltonian(p, sched, t); }};
}

std::size_t steps_for(double a, double b, double dt) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((b - a) / dt - 1e-9)));
}

// Pseudo-qubit unitary from 0 to t on {|11>, |02>}.
ComplexMatrix pseudo_unitary_until(const TwoQubitSchedule& sched, double t) {
    ComplexMatrix u = ComplexMatrix::identity(2);
    const double dt = path::default_dt(sched.pseudo);
    for_each_piece(sched, 0.0, t, [&](std::size_t i, double a, double b) {
        const auto& seg = sched.pseudo.segments[i];
        const double s0 = sched.start[i];
        TimeDependentHamiltonian h{2, [&seg, s0](double tg) {
                                       const double tl = tg - s0;
                                       const cplx drive = 0.5 * seg.omega(tl) * std::polar(1.0, -seg.phi(tl));
                                       return ComplexMatrix(2, {-0.5 * seg.delta, drive, std::conj(drive), 0.5 * seg.delta});
                                   }};
        const std::size_t n = steps_for(a, b, dt / 4);
        u = evolve_unitary(h, a, b, (b - a) / static_cast<double>(n)) * u;
    });
    return u;
}

} // namespace

double TwoQubitParams::g12_eff() const { return 2 * kSqrt2 * g12 * bessel_j1(beta); }

double TwoQubitParams::delta_prime() const { return nu - Delta1 - alpha2; }

TwoQubitParams TwoQubitParams::reference() {
    TwoQubitParams p;
    p.g12 = 2 * kPi * 8e6;
    p.Delta1 = 2 * kPi * 388e6;
    p.beta = 1.9;
    p.alpha1 = 2 * kPi * 220e6;
    p.alpha2 = 2 * kPi * 220e6;
    p.nu = p.Delta1 + p.alpha2;
    p.kappa_minus = 2 * kPi * 4e3;
    p.kappa_z = 2 * kPi * 4e3;
    return p;
}

std::pair<double, double> effective_params(const TwoQubitParams& p) {
    if (std::abs(p.beta) > 20.0) throw ValidationError("modulation amplitude |beta| must not exceed 20");
    return {p.g12_eff(), p.delta_prime()};
}

std::pair<std::size_t, double> TwoQubitSchedule::locate(double t) const { return pseudo.locate(t); }

double TwoQubitSchedule::frame_phase(double t) const {
    const auto [i, tl] = locate(t);
    return frame_offset[i] + pseudo.segments[i].delta * tl;
}

double TwoQubitSchedule::varphi(double t) const {
    const auto [i, tl] = locate(t);
    return pseudo.segments[i].phi(tl) + kPi / 2 + frame_offset[i] + pseudo.segments[i].delta * tl;
}

TwoQubitSchedule synthesize_cphase(double gamma_gg, double Lambda, const TwoQubitParams& p) {
    TwoQubitSchedule s;
    s.spec = path::make_path_spec(0.0, 0.0, gamma_gg, Lambda, path::Configuration::A);
    const double g = p.g12_eff();
    if (!(g > 0.0)) throw ParameterRangeError("effective coupling must be positive; check g12 and beta");
    s.pseudo = path::synthesize_schedule(s.spec, g, path::Shape::Const);
    s.nu_base = p.Delta1 + p.alpha2;
    double t = 0.0, acc = 0.0;
    for (const auto& seg : s.pseudo.segments) {
        if (std::abs(seg.delta) > kMaxDetuning)
            throw ParameterRangeError("required pseudo-qubit detuning exceeds 2pi x 200 MHz; increase Lambda or g12");
        s.nu.push_back(s.nu_base + seg.delta);
        s.start.push_back(t);
        s.frame_offset.push_back(acc);
        t += seg.duration;
        acc += seg.delta * seg.duration;
    }
    s.tau = t;
    return s;
}

ComplexMatrix full_hamiltonian(const TwoQubitParams& p, const TwoQubitSchedule& sched, double t) {
    const cplx mod = std::polar(1.0, p.beta * std::cos(sched.nu_base * t + sched.varphi(t)));
    ComplexMatrix h(9);
    const auto couple = [&](std::size_t r, std::size_t c, double strength, double freq) {
        const cplx v = strength * std::polar(1.0, freq * t) * mod;
        h(r, c) += v;
        h(c, r) += std::conj(v);
    };
    couple(idx(1, 0), idx(0, 1), p.g12, p.Delta1);
    couple(idx(1, 1), idx(0, 2), kSqrt2 * p.g12, p.Delta1 + p.alpha2);
    couple(idx(2, 0), idx(1, 1), kSqrt2 * p.g12, p.Delta1 - p.alpha1);
    return h;
}

ComplexMatrix cphase_target(double gamma_gg) {
    return ComplexMatrix::diagonal({1.0, 1.0, 1.0, std::polar(1.0, gamma_gg)});
}

ComplexMatrix frame_correction(double frame_phase) {
    ComplexMatrix v = ComplexMatrix::identity(9);
    v(idx(1, 1), idx(1, 1)) = std::polar(1.0, frame_phase / 2);
    v(idx(0, 2), idx(0, 2)) = std::polar(1.0, -frame_phase / 2);
    return v;
}

Lattice theta_lattice(std::size_t n1, std::size_t n2) {
    if (n1 == 0 || n2 == 0) throw ValidationError("lattice dimensions must be positive");
    Lattice l;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            l.thetas.emplace_back(2 * kPi * static_cast<double>(i) / static_cast<double>(n1),
                                  2 * kPi * static_cast<double>(j) / static_cast<double>(n2));
    l.thetas.emplace_back(2 * kPi, 2 * kPi);
    l.description = std::to_string(n1) + "x" + std::to_string(n2) + " lattice on [0,2pi) plus reference state (2pi,2pi)";
    return l;
}

ComplexMatrix coherent_propagator(const TwoQubitSchedule& sched, const TwoQubitParams& p, double spp) {
    const double dt = step_size(sched, spp);
    const auto h = hamiltonian(p, sched);
    ComplexMatrix u = ComplexMatrix::identity(9);
    for_each_piece(sched, 0.0, sched.tau, [&](std::size_t, double a, double b) {
        u = evolve_unitary(h, a, b, (b - a) / static_cast<double>(steps_for(a, b, dt))) * u;
    });
    return frame_correction(sched.frame_phase(sched.tau)) * u;
}

ComplexMatrix effective_unitary(const TwoQubitSchedule& sched) { return pseudo_unitary_until(sched, sched.tau); }

namespace {

double lattice_average(const std::vector<ComplexMatrix>& ops, const ComplexMatrix& target, const Lattice& lattice) {
    std::vector<double> values(lattice.thetas.size());
    for (std::size_t k = 0; k < lattice.thetas.size(); ++k) {
        const auto [t1, t2] = lattice.thetas[k];
        const double c[4] = {std::cos(t1) * std::cos(t2), std::cos(t1) * std::sin(t2), std::sin(t1) * std::cos(t2),
                             std::sin(t1) * std::sin(t2)};
        cplx f[4];
        for (std::size_t r = 0; r < 4; ++r) {
            f[r] = 0.0;
            for (std::size_t s = 0; s < 4; ++s) f[r] += target(r, s) * c[s];
        }
        double acc = 0.0;
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = 0; b < 4; ++b) {
                const auto& e = ops[4 * a + b];
                cplx q = 0.0;
                for (std::size_t r = 0; r < 4; ++r)
                    for (std::size_t s = 0; s < 4; ++s) q += std::conj(f[r]) * e(kComp[r], kComp[s]) * f[s];
                acc += c[a] * c[b] * q.real();
            }
        }
        values[k] = acc;
    }
    return tree_sum(values.data(), values.size()) / static_cast<double>(values.size());
}

} // namespace

TwoQubitReport two_qubit_fidelity(const TwoQubitSchedule& sched, const TwoQubitParams& p, double spp) {
    std::vector<ComplexMatrix> ops;
    for (std::size_t a : kComp)
        for (std::size_t b : kComp) ops.push_back(ComplexMatrix::unit(9, a, b));

    TwoQubitReport rep;
    rep.tau = sched.tau;
    if (sched.tau > 0.0) {
        const double dt = step_size(sched, spp);
        const auto h = hamiltonian(p, sched);
        LindbladStepper stepper(two_qutrit_channels(p), 9);
        for_each_piece(sched, 0.0, sched.tau, [&](std::size_t, double a, double b) {
            stepper.advance(h, a, b, (b - a) / static_cast<double>(steps_for(a, b, dt)), ops);
        });
        const ComplexMatrix v = frame_correction(sched.frame_phase(sched.tau));
        const ComplexMatrix vd = v.adjoint();
        for (auto& e : ops) e = v * e * vd;
    }

    const ComplexMatrix target = cphase_target(sched.spec.gamma_g);
    const Lattice full = theta_lattice(100, 100);
    rep.lattice = full.description;
    rep.fidelity = lattice_average(ops, target, full);
    rep.fidelity_reduced = lattice_average(ops, target, theta_lattice(20, 15));

    const ComplexMatrix u = sched.tau > 0.0 ? coherent_propagator(sched, p, spp) : ComplexMatrix::identity(9);
    rep.computational = ComplexMatrix(4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s) rep.computational(r, s) = u(kComp[r], kComp[s]);
    return rep;
}

std::vector<SurfacePoint> parameter_sweep(double gamma_gg, double Lambda, const TwoQubitParams& base,
                                          const std::vector<double>& beta_grid, const std::vector<double>& Delta1_grid,
                                          double spp) {
    if (beta_grid.empty() || Delta1_grid.empty()) throw ValidationError("parameter_sweep: grids must be nonempty");
    std::vector<SurfacePoint> out(beta_grid.size() * Delta1_grid.size());
    parallel_for(out.size(), [&](std::size_t k) {
        TwoQubitParams p = base;
        p.beta = beta_grid[k / Delta1_grid.size()];
        p.Delta1 = Delta1_grid[k % Delta1_grid.size()];
        p.nu = p.Delta1 + p.alpha2;
        const auto sched = synthesize_cphase(gamma_gg, Lambda, p);
        out[k] = {p.beta, p.Delta1, two_qubit_fidelity(sched, p, spp).fidelity};
    });
    return out;
}

std::vector<PopulationSample> population_trace(const TwoQubitSchedule& sched, const TwoQubitParams& p,
                                               const std::vector<cplx>& psi0, std::size_t n_samples, double spp) {
    if (psi0.size() != 9) throw ValidationError("initial state must have 9 amplitudes");
    if (n_samples < 2) throw ValidationError("need at least two samples");
    std::vector<ComplexMatrix> rho{DensityMatrix::pure(psi0).matrix()};
    std::vector<cplx> unit(psi0);
    {
        double norm = 0.0;
        for (const auto& c : unit) norm += std::norm(c);
        for (auto& c : unit) c /= std::sqrt(norm);
    }

    const double dt = step_size(sched, spp);
    const auto h = hamiltonian(p, sched);
    LindbladStepper stepper(two_qutrit_channels(p), 9);
    std::vector<PopulationSample> out;
    double prev = 0.0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t = sched.tau * static_cast<double>(k) / static_cast<double>(n_samples - 1);
        for_each_piece(sched, prev, t, [&](std::size_t, double a, double b) {
            stepper.advance(h, a, b, (b - a) / static_cast<double>(steps_for(a, b, dt)), rho);
        });
        prev = t;

        // Ideal reference: only the {|11>, |02>} amplitudes move, under the pseudo-qubit evolution.
        const ComplexMatrix ue = pseudo_unitary_until(sched, t);
        std::vector<cplx> ideal(unit);
        ideal[idx(1, 1)] = ue(0, 0) * unit[idx(1, 1)] + ue(0, 1) * unit[idx(0, 2)];
        ideal[idx(0, 2)] = ue(1, 0) * unit[idx(1, 1)] + ue(1, 1) * unit[idx(0, 2)];
        const ComplexMatrix v = frame_correction(sched.frame_phase(t));
        const ComplexMatrix r = v * rho.front() * v.adjoint();
        cplx overlap = 0.0;
        for (std::size_t a = 0; a < 9; ++a)
            for (std::size_t b = 0; b < 9; ++b) overlap += std::conj(ideal[a]) * r(a, b) * ideal[b];
        const auto& m = rho.front();
        out.push_back({t, m(idx(0, 1), idx(0, 1)).real(), m(idx(1, 1), idx(1, 1)).real(), m(idx(0, 2), idx(0, 2)).real(),
                       overlap.real()});
    }
    return out;
}

} // namespace geomgate::twoqubit
