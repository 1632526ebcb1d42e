#pragma once

#include "geomgate/matrix.hpp"
#include "geomgate/path.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace geomgate::gates {

enum class Gate { S, T, H };
enum class Family { GeometricA, GeometricB, Dynamical };
enum class ErrorType { SigmaX, SigmaZ };

std::string to_string(Gate g);
std::string to_string(Family f);
std::string to_string(ErrorType e);
Gate parse_gate(const std::string& s);
Family parse_family(const std::string& s);
ErrorType parse_error_type(const std::string& s);

struct GateTarget {
    std::array<double, 3> axis{};
    double gamma = 0.0;
    ComplexMatrix unitary;
};

struct ErrorModel {
    double epsilon = 0.0;  // fractional drive-amplitude error
    double delta = 0.0;    // detuning offset in units of the pulse peak
};

struct DynamicalGateSpec {
    // Applied left to right: sequence[0] acts first.
    std::vector<std::pair<double, double>> sequence;  // (theta, phi)
    double total_area() const;
};

// exp(i gamma n.sigma), negated in configuration B.
GateTarget target_unitary(const path::PathSpec& spec);

// (chi0, xi0, gamma_g) of the S, T and H gates.
path::PathSpec gate_path_spec(Gate gate, double Lambda, path::Configuration configuration);

DynamicalGateSpec dynamical_gate_spec(Gate gate);
ComplexMatrix dynamical_gate(const DynamicalGateSpec& spec);
// One resonant pulse per rotation at a shared peak; negative angles use phase + pi.
path::PulseSchedule dynamical_schedule(const DynamicalGateSpec& spec, double omega0, path::Shape shape);

// Two-level evolution of the schedule under the coherent error model. dt <= 0 picks
// the default nominal step.
ComplexMatrix realized_unitary(const path::PulseSchedule& schedule, const ErrorModel& err, double dt = 0.0);

// |Tr(U^+ V)| / dim
double gate_fidelity(const ComplexMatrix& ideal, const ComplexMatrix& real);

// A concrete gate realization: schedule plus the unitary it should implement.
struct GateInstance {
    path::PulseSchedule schedule;
    ComplexMatrix target;
};

GateInstance make_gate(Gate gate, Family family, double Lambda, double omega0, path::Shape shape = path::Shape::Sin2);

struct SweepRow {
    Gate gate;
    Family family;
    double Lambda_over_pi;
    double epsilon;
    double delta;
    double fidelity;
};

// Decoherence-free fidelities against the error-free realization. For each Lambda the
// sigma_x sweep holds delta = 0 and the sigma_z sweep holds epsilon = 0. Rows come back
// in lexicographic column order.
std::vector<SweepRow> robustness_sweep(Gate gate, Family family, const std::vector<double>& Lambda_over_pi,
                                       const std::vector<double>& epsilon_grid, const std::vector<double>& delta_grid);

struct Interval {
    double lo;
    double hi;
};

struct DominanceCurve {
    std::vector<double> Lambda_over_pi;
    std::vector<double> worst_difference;  // min over the error grid of F_geo - F_dyn
};

DominanceCurve dominance_curve(Gate gate, Family family, ErrorType error, const std::vector<double>& Lambda_over_pi,
                               const std::vector<double>& error_grid);

// Maximal runs of grid points whose worst-case difference is >= -tolerance.
std::vector<Interval> dominance_intervals(const DominanceCurve& curve, double tolerance = 1e-9);

std::vector<Interval> advantage_range(Gate gate, Family family, ErrorType error, const std::vector<double>& Lambda_over_pi,
                                      const std::vector<double>& error_grid);

// {0.10, 0.11, ..., 1.00} without 0.50.
std::vector<double> default_lambda_grid();
// [-0.1, 0.1] in steps of 0.005.
std::vector<double> default_error_grid();
std::vector<double> uniform_grid(double lo, double hi, double step);

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::string& header_comment = "");

} // namespace geomgate::gates
