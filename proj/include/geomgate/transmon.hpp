#pragma once

#include "geomgate/gates.hpp"
#include "geomgate/matrix.hpp"
#include "geomgate/path.hpp"

#include <complex>
#include <vector>

namespace geomgate::transmon {

struct TransmonParams {
    double omega_q = 0.0;      // qubit frequency; only fixes the rotating frame
    double alpha = 0.0;        // anharmonicity, rad/s
    double kappa_minus = 0.0;  // relaxation, rad/s
    double kappa_z = 0.0;      // dephasing, rad/s

    // alpha = 2pi x 220 MHz, kappa = 2pi x 4 kHz
    static TransmonParams reference();
};

// Envelope with the first-order derivative correction that suppresses |1> <-> |2>.
struct DragSchedule {
    path::PulseSchedule base;
    bool enabled = true;
    double alpha = 0.0;

    // Omega_D = Omega - (i dOmega/dt + (dphi/dt + Delta) Omega) / (2 alpha) on segment `seg`
    // at local time t; plain Omega when disabled.
    cplx corrected_omega(std::size_t seg, double t) const;
};

// DRAG is switched off (with a warning on stderr) when a segment has a constant envelope,
// since its derivative is undefined at the edges.
DragSchedule make_drag(const path::PulseSchedule& base, const TransmonParams& params, bool with_drag);

// Rotating-frame qutrit Hamiltonian at local time t of segment `seg`. The error model
// scales the whole drive by (1 + epsilon) and adds delta * peak to the detuning.
ComplexMatrix three_level_hamiltonian(const DragSchedule& drag, const TransmonParams& params, std::size_t seg, double t,
                                      const gates::ErrorModel& err = {});

struct AveragedFidelityReport {
    double fidelity = 0.0;
    double leakage_final = 0.0;  // mean |2> population over the sampled initial states
    std::size_t n_states = 0;
    std::vector<double> theta_grid;
};

// Mean of <phi_f|rho(tau)|phi_f> over cos(theta)|0> + sin(theta)|1>, theta uniform on [0, 2pi]
// inclusive. `target` is the ideal 2x2 gate.
AveragedFidelityReport averaged_gate_fidelity(const path::PulseSchedule& schedule, const ComplexMatrix& target,
                                              const TransmonParams& params, bool with_drag,
                                              const gates::ErrorModel& err = {}, std::size_t n_states = 1001,
                                              double dt = 0.0);

AveragedFidelityReport averaged_gate_fidelity(gates::Gate gate, gates::Family family, double Lambda, double omega0,
                                              const TransmonParams& params, bool with_drag,
                                              const gates::ErrorModel& err = {});

struct PeakScan {
    double omega0_star = 0.0;
    std::vector<double> omega0_grid;
    std::vector<double> fidelity;
};

// Best pulse peak on the grid. Values within 1e-9 of the maximum count as tied and
// the smallest such peak wins.
PeakScan optimize_pulse_peak(gates::Gate gate, gates::Family family, double Lambda, const TransmonParams& params,
                             const std::vector<double>& omega0_grid, bool with_drag = true);

struct SurfacePoint {
    double epsilon;
    double delta;
    double fidelity;
};

std::vector<SurfacePoint> decoherent_robustness(gates::Gate gate, gates::Family family, double Lambda, double omega0,
                                                const TransmonParams& params, const std::vector<double>& epsilon_grid,
                                                const std::vector<double>& delta_grid, bool with_drag = true);

} // namespace geomgate::transmon
