#pragma once

#include "geomgate/matrix.hpp"
#include "geomgate/path.hpp"

#include <string>
#include <utility>
#include <vector>

namespace geomgate::twoqubit {

// Two-qutrit basis index of |q1 q2>.
constexpr std::size_t idx(std::size_t q1, std::size_t q2) { return 3 * q1 + q2; }

struct TwoQubitParams {
    double g12 = 0.0;     // static coupling, rad/s
    double Delta1 = 0.0;  // omega1 - omega2, rad/s
    double beta = 0.0;    // modulation amplitude
    double nu = 0.0;      // modulation frequency, rad/s
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double kappa_minus = 0.0;  // per qubit
    double kappa_z = 0.0;      // per qubit

    double g12_eff() const;      // 2 sqrt(2) g12 J1(beta)
    double delta_prime() const;  // nu - Delta1 - alpha2

    // g12 = 2pi x 8 MHz, Delta1 = 2pi x 388 MHz, beta = 1.9, alpha = 2pi x 220 MHz, kappa = 2pi x 4 kHz,
    // nu on resonance.
    static TwoQubitParams reference();
};

std::pair<double, double> effective_params(const TwoQubitParams& p);

// Control-phase gate realized as a geometric loop in the {|11>, |02>} pseudo-qubit.
// The pseudo-qubit drive runs at constant amplitude g12_eff; each segment's
// modulation frequency is nu = Delta1 + alpha2 + Delta', with Delta' the segment's
// pseudo-qubit detuning.
struct TwoQubitSchedule {
    path::PathSpec spec;
    path::PulseSchedule pseudo;
    std::vector<double> nu;            // per segment, rad/s
    std::vector<double> start;         // segment start times, s
    std::vector<double> frame_offset;  // accumulated integral of Delta' at segment start
    double nu_base = 0.0;              // resonant modulation frequency Delta1 + alpha2
    double tau = 0.0;

    // Modulation phase varphi(t) in cos(nu_base t + varphi(t)): the pseudo-qubit phase
    // track plus pi/2 plus the phase gathered by running off resonance.
    double varphi(double t) const;
    // Integral of Delta' from 0 to t.
    double frame_phase(double t) const;
    std::pair<std::size_t, double> locate(double t) const;
};

TwoQubitSchedule synthesize_cphase(double gamma_gg, double Lambda, const TwoQubitParams& p);

// Interaction-picture Hamiltonian of two modulated-coupling transmons on the two-qutrit space (9x9).
ComplexMatrix full_hamiltonian(const TwoQubitParams& p, const TwoQubitSchedule& sched, double t);

// Ideal 4x4 target diag(1, 1, 1, e^{i gamma}) on {|00>, |01>, |10>, |11>}.
ComplexMatrix cphase_target(double gamma_gg);

// Rotating-frame correction diag(..., e^{i Phi/2} on |11>, e^{-i Phi/2} on |02>, ...).
ComplexMatrix frame_correction(double frame_phase);

struct Lattice {
    std::vector<std::pair<double, double>> thetas;
    std::string description;
};

// n1 x n2 interior lattice on [0, 2pi) plus one reference state at (2pi, 2pi).
Lattice theta_lattice(std::size_t n1, std::size_t n2);

struct TwoQubitReport {
    double fidelity = 0.0;          // 10001-state average
    double fidelity_reduced = 0.0;  // 301-state average
    ComplexMatrix computational;    // frame-corrected 4x4 block of the coherent propagator
    double tau = 0.0;
    std::string lattice;
};

// Averaged fidelity with per-qubit relaxation and dephasing. spp sets the step as a
// fraction of the fastest modulation period.
TwoQubitReport two_qubit_fidelity(const TwoQubitSchedule& sched, const TwoQubitParams& p, double spp = 40.0);

// Frame-corrected 9x9 propagator without decoherence.
ComplexMatrix coherent_propagator(const TwoQubitSchedule& sched, const TwoQubitParams& p, double spp = 40.0);

// Ideal pseudo-qubit 2x2 unitary on {|11>, |02>}, from the effective two-level model.
ComplexMatrix effective_unitary(const TwoQubitSchedule& sched);

struct SurfacePoint {
    double beta;
    double Delta1;
    double fidelity;
};

std::vector<SurfacePoint> parameter_sweep(double gamma_gg, double Lambda, const TwoQubitParams& base,
                                          const std::vector<double>& beta_grid, const std::vector<double>& Delta1_grid,
                                          double spp = 40.0);

struct PopulationSample {
    double t;
    double p01;
    double p11;
    double p02;
    double running_fidelity;
};

// Populations along the gate for a pure initial state (9 amplitudes). The running
// fidelity compares against the ideal pseudo-qubit evolution up to time t.
std::vector<PopulationSample> population_trace(const TwoQubitSchedule& sched, const TwoQubitParams& p,
                                               const std::vector<cplx>& psi0, std::size_t n_samples = 200,
                                               double spp = 40.0);

} // namespace geomgate::twoqubit
