#include "geomgate/gates.hpp"

#include "geomgate/errors.hpp"
#include "geomgate/evolve.hpp"
#include "geomgate/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

namespace geomgate::gates {
namespace {

constexpr double kPi = std::numbers::pi;
// Peak used for decoherence-free sweeps; the fidelities there do not depend on it
// because every error is expressed relative to the peak.
constexpr double kSweepPeak = 2 * kPi * 20e6;

ComplexMatrix axis_rotation(double theta, double phi) {
    // exp(-i theta/2 (cos phi sx + sin phi sy))
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const cplx mi(0, -1);
    return ComplexMatrix(2, {c, mi * s * std::polar(1.0, -phi), mi * s * std::polar(1.0, phi), c});
}

} // namespace

std::string to_string(Gate g) {
    switch (g) {
    case Gate::S: return "S";
    case Gate::T: return "T";
    case Gate::H: return "H";
    }
    return "?";
}

std::string to_string(Family f) {
    switch (f) {
    case Family::GeometricA: return "geometric_A";
    case Family::GeometricB: return "geometric_B";
    case Family::Dynamical: return "dynamical";
    }
    return "?";
}

std::string to_string(ErrorType e) { return e == ErrorType::SigmaX ? "sigma_x" : "sigma_z"; }

Gate parse_gate(const std::string& s) {
    if (s == "S") return Gate::S;
    if (s == "T") return Gate::T;
    if (s == "H") return Gate::H;
    throw ValidationError("unknown gate '" + s + "' (expected S, T or H)");
}

Family parse_family(const std::string& s) {
    if (s == "geometric_A") return Family::GeometricA;
    if (s == "geometric_B") return Family::GeometricB;
    if (s == "dynamical") return Family::Dynamical;
    throw ValidationError("unknown family '" + s + "' (expected geometric_A, geometric_B or dynamical)");
}

ErrorType parse_error_type(const std::string& s) {
    if (s == "sigma_x") return ErrorType::SigmaX;
    if (s == "sigma_z") return ErrorType::SigmaZ;
    throw ValidationError("unknown error type '" + s + "' (expected sigma_x or sigma_z)");
}

double DynamicalGateSpec::total_area() const {
    double a = 0.0;
    for (const auto& [theta, phi] : sequence) a += std::abs(theta);
    return a;
}

GateTarget target_unitary(const path::PathSpec& spec) {
    GateTarget g;
    g.axis = {std::sin(spec.chi0) * std::cos(spec.xi0), std::sin(spec.chi0) * std::sin(spec.xi0), std::cos(spec.chi0)};
    g.gamma = spec.gamma_g;
    const double c = std::cos(g.gamma), s = std::sin(g.gamma);
    const cplx i(0, 1);
    const auto& n = g.axis;
    g.unitary = ComplexMatrix(2, {c + i * s * n[2], i * s * cplx(n[0], -n[1]), i * s * cplx(n[0], n[1]), c - i * s * n[2]});
    if (spec.configuration == path::Configuration::B) g.unitary *= -1.0;
    return g;
}

path::PathSpec gate_path_spec(Gate gate, double Lambda, path::Configuration configuration) {
    switch (gate) {
    case Gate::S: return path::make_path_spec(0.0, 0.0, -kPi / 4, Lambda, configuration);
    case Gate::T: return path::make_path_spec(0.0, 0.0, -kPi / 8, Lambda, configuration);
    case Gate::H: return path::make_path_spec(kPi / 4, 0.0, -kPi / 2, Lambda, configuration);
    }
    throw ValidationError("unknown gate");
}

DynamicalGateSpec dynamical_gate_spec(Gate gate) {
    // Z rotations are Rx(-pi/2) Ry(-theta) Rx(pi/2); listed in application order.
    switch (gate) {
    case Gate::S: return {{{kPi / 2, 0.0}, {-kPi / 2, kPi / 2}, {-kPi / 2, 0.0}}};
    case Gate::T: return {{{kPi / 2, 0.0}, {-kPi / 4, kPi / 2}, {-kPi / 2, 0.0}}};
    case Gate::H: return {{{kPi / 2, kPi / 2}, {kPi, 0.0}}};
    }
    throw ValidationError("unknown gate");
}

ComplexMatrix dynamical_gate(const DynamicalGateSpec& spec) {
    ComplexMatrix u = ComplexMatrix::identity(2);
    for (const auto& [theta, phi] : spec.sequence) u = axis_rotation(theta, phi) * u;
    return u;
}

path::PulseSchedule dynamical_schedule(const DynamicalGateSpec& spec, double omega0, path::Shape shape) {
    if (!(omega0 > 0.0)) throw ValidationError("omega0 must be positive");
    path::PulseSchedule sched;
    for (const auto& [theta, phi] : spec.sequence) {
        const double area = std::abs(theta);
        if (area < 1e-14) continue;
        const double T = (shape == path::Shape::Sin2 ? 2.0 : 1.0) * area / omega0;
        sched.segments.push_back({T, shape, omega0, area, theta < 0 ? phi + kPi : phi, 0.0, 0.0});
    }
    return sched;
}

ComplexMatrix realized_unitary(const path::PulseSchedule& schedule, const ErrorModel& err, double dt) {
    if (schedule.segments.empty()) return ComplexMatrix::identity(2);
    if (dt <= 0.0) dt = path::default_dt(schedule);
    const double offset = err.delta * schedule.peak_amplitude();
    const double gain = 1.0 + err.epsilon;

    ComplexMatrix u = ComplexMatrix::identity(2);
    for (const auto& seg : schedule.segments) {
        const std::size_t n = path::segment_steps(seg, dt);
        TimeDependentHamiltonian h{2, [&seg, offset, gain](double t) {
                                       const double dz = -0.5 * (seg.delta + offset);
                                       const cplx drive = 0.5 * gain * seg.omega(t) * std::polar(1.0, -seg.phi(t));
                                       return ComplexMatrix(2, {dz, drive, std::conj(drive), -dz});
                                   }};
        u = evolve_unitary(h, 0.0, seg.duration, seg.duration / static_cast<double>(n)) * u;
    }
    return u;
}

double gate_fidelity(const ComplexMatrix& ideal, const ComplexMatrix& real) {
    if (ideal.dim() != real.dim()) throw ValidationError("gate_fidelity: dimension mismatch");
    cplx tr = 0.0;
    for (std::size_t i = 0; i < ideal.dim(); ++i)
        for (std::size_t k = 0; k < ideal.dim(); ++k) tr += std::conj(ideal(k, i)) * real(k, i);
    return std::min(1.0, std::abs(tr) / static_cast<double>(ideal.dim()));
}

GateInstance make_gate(Gate gate, Family family, double Lambda, double omega0, path::Shape shape) {
    if (family == Family::Dynamical) {
        const auto spec = dynamical_gate_spec(gate);
        return {dynamical_schedule(spec, omega0, shape), dynamical_gate(spec)};
    }
    const auto conf = family == Family::GeometricA ? path::Configuration::A : path::Configuration::B;
    const auto spec = gate_path_spec(gate, Lambda, conf);
    return {path::synthesize_schedule(spec, omega0, shape), target_unitary(spec).unitary};
}

namespace {

// Fidelities over the sigma_x line (delta = 0) and the sigma_z line (epsilon = 0).
struct LineFidelities {
    std::vector<double> sx, sz;
};

LineFidelities line_fidelities(const path::PulseSchedule& sched, const std::vector<double>& eps,
                               const std::vector<double>& del) {
    const ComplexMatrix ref = realized_unitary(sched, {});
    LineFidelities out;
    for (double e : eps) out.sx.push_back(gate_fidelity(ref, realized_unitary(sched, {e, 0.0})));
    for (double d : del) out.sz.push_back(gate_fidelity(ref, realized_unitary(sched, {0.0, d})));
    return out;
}

} // namespace

std::vector<SweepRow> robustness_sweep(Gate gate, Family family, const std::vector<double>& Lambda_over_pi,
                                       const std::vector<double>& epsilon_grid, const std::vector<double>& delta_grid) {
    if (Lambda_over_pi.empty() || epsilon_grid.empty() || delta_grid.empty())
        throw ValidationError("robustness_sweep: grids must be nonempty");

    std::vector<LineFidelities> lines(Lambda_over_pi.size());
    if (family == Family::Dynamical) {
        const auto inst = make_gate(gate, family, 0.0, kSweepPeak);
        const auto one = line_fidelities(inst.schedule, epsilon_grid, delta_grid);
        std::fill(lines.begin(), lines.end(), one);
    } else {
        parallel_for(Lambda_over_pi.size(), [&](std::size_t i) {
            const auto inst = make_gate(gate, family, Lambda_over_pi[i] * kPi, kSweepPeak);
            lines[i] = line_fidelities(inst.schedule, epsilon_grid, delta_grid);
        });
    }

    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < Lambda_over_pi.size(); ++i) {
        for (std::size_t j = 0; j < epsilon_grid.size(); ++j)
            rows.push_back({gate, family, Lambda_over_pi[i], epsilon_grid[j], 0.0, lines[i].sx[j]});
        for (std::size_t j = 0; j < delta_grid.size(); ++j) {
            if (delta_grid[j] == 0.0 && std::find(epsilon_grid.begin(), epsilon_grid.end(), 0.0) != epsilon_grid.end())
                continue;  // the error-free point is already present from the sigma_x line
            rows.push_back({gate, family, Lambda_over_pi[i], 0.0, delta_grid[j], lines[i].sz[j]});
        }
    }
    const auto key = [](const SweepRow& r) {
        return std::make_tuple(to_string(r.gate), to_string(r.family), r.Lambda_over_pi, r.epsilon, r.delta);
    };
    std::sort(rows.begin(), rows.end(), [&](const SweepRow& a, const SweepRow& b) { return key(a) < key(b); });
    return rows;
}

DominanceCurve dominance_curve(Gate gate, Family family, ErrorType error, const std::vector<double>& Lambda_over_pi,
                               const std::vector<double>& error_grid) {
    if (family == Family::Dynamical) throw ValidationError("dominance compares a geometric family against the dynamical gate");
    const auto fidelities = [&](const path::PulseSchedule& sched) {
        const ComplexMatrix ref = realized_unitary(sched, {});
        std::vector<double> f;
        for (double x : error_grid) {
            const ErrorModel em = error == ErrorType::SigmaX ? ErrorModel{x, 0.0} : ErrorModel{0.0, x};
            f.push_back(gate_fidelity(ref, realized_unitary(sched, em)));
        }
        return f;
    };
    const auto dyn = fidelities(make_gate(gate, Family::Dynamical, 0.0, kSweepPeak).schedule);

    DominanceCurve curve;
    curve.Lambda_over_pi = Lambda_over_pi;
    curve.worst_difference.resize(Lambda_over_pi.size());
    parallel_for(Lambda_over_pi.size(), [&](std::size_t i) {
        const auto geo = fidelities(make_gate(gate, family, Lambda_over_pi[i] * kPi, kSweepPeak).schedule);
        double worst = 1.0;
        for (std::size_t j = 0; j < geo.size(); ++j) worst = std::min(worst, geo[j] - dyn[j]);
        curve.worst_difference[i] = worst;
    });
    return curve;
}

std::vector<Interval> dominance_intervals(const DominanceCurve& curve, double tolerance) {
    std::vector<Interval> out;
    bool open = false;
    for (std::size_t i = 0; i < curve.Lambda_over_pi.size(); ++i) {
        const bool good = curve.worst_difference[i] >= -tolerance;
        if (good && !open) {
            out.push_back({curve.Lambda_over_pi[i], curve.Lambda_over_pi[i]});
            open = true;
        } else if (good) {
            out.back().hi = curve.Lambda_over_pi[i];
        } else {
            open = false;
        }
    }
    return out;
}

std::vector<Interval> advantage_range(Gate gate, Family family, ErrorType error, const std::vector<double>& Lambda_over_pi,
                                      const std::vector<double>& error_grid) {
    for (std::size_t i = 1; i < Lambda_over_pi.size(); ++i)
        if (Lambda_over_pi[i] - Lambda_over_pi[i - 1] > 0.02 + 1e-9)
            throw ValidationError("advantage_range: Lambda grid step must not exceed 0.01 pi (0.02 across the excluded pi/2)");
    return dominance_intervals(dominance_curve(gate, family, error, Lambda_over_pi, error_grid));
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || hi < lo) throw ValidationError("uniform_grid: need step > 0 and hi >= lo");
    const auto n = static_cast<std::size_t>(std::llround((hi - lo) / step));
    std::vector<double> g;
    for (std::size_t i = 0; i <= n; ++i) {
        // Round to 1e-12 so printed grid values are clean and comparisons exact.
        const double v = lo + step * static_cast<double>(i);
        g.push_back(std::round(v * 1e12) / 1e12);
    }
    return g;
}

std::vector<double> default_lambda_grid() {
    std::vector<double> g;
    for (int i = 10; i <= 100; ++i)
        if (i != 50) g.push_back(i / 100.0);
    return g;
}

std::vector<double> default_error_grid() { return uniform_grid(-0.1, 0.1, 0.005); }

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::string& header_comment) {
    std::ostringstream os;
    os.precision(12);
    if (!header_comment.empty()) os << "# " << header_comment << '\n';
    os << "gate,family,Lambda_over_pi,epsilon,delta,fidelity\n";
    for (const auto& r : rows)
        os << to_string(r.gate) << ',' << to_string(r.family) << ',' << r.Lambda_over_pi << ',' << r.epsilon << ','
           << r.delta << ',' << r.fidelity << '\n';
    return os.str();
}

} // namespace geomgate::gates
