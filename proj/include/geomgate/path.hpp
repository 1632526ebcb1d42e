#pragma once

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace geomgate::path {

enum class Configuration { A, B };
enum class Shape { Sin2, Const };

std::string to_string(Configuration c);
std::string to_string(Shape s);
Configuration parse_configuration(const std::string& s);
Shape parse_shape(const std::string& s);

struct PathSpec {
    double chi0 = 0.0;
    double xi0 = 0.0;
    double gamma_g = 0.0;
    double Lambda = 0.0;
    Configuration configuration = Configuration::A;
    double lambda = 0.0;  // azimuth span that yields gamma_g
    double k = 0.0;       // configuration-B multiplier
    double xi1 = 0.0;

    // Azimuth actually swept on the latitude: lambda in A, lambda - k*pi in B.
    double span() const;
    // Phase the closed loop encloses; differs from gamma_g by -pi in configuration B.
    double enclosed_phase() const;
};

PathSpec make_path_spec(double chi0, double xi0, double gamma_g, double Lambda, Configuration configuration);

// One drive segment on local time t in [0, duration].
//   sin2:  Omega(t) = omega0 sin^2(pi t / T)
//   const: Omega(t) = omega0
// The phase obeys phi'(t) = -delta + (phi_slope + delta) * Omega(t) / <Omega>, so that
// xi' + delta stays proportional to the envelope (what keeps a latitude at constant
// polar angle) while phi_slope remains the mean sweep rate.
struct PulseSegment {
    double duration = 0.0;  // s
    Shape shape = Shape::Sin2;
    double omega0 = 0.0;    // peak amplitude, rad/s
    double area = 0.0;      // rad
    double phi0 = 0.0;      // rad
    double phi_slope = 0.0; // mean dphi/dt, rad/s
    double delta = 0.0;     // rad/s

    double omega(double t) const;
    double omega_dot(double t) const;
    double phi(double t) const;
    double phi_dot(double t) const;
    // Upper bound on the total phase variation across the segment.
    double phase_variation() const;
};

struct PulseSchedule {
    std::vector<PulseSegment> segments;
    std::optional<PathSpec> path;

    double total_duration() const;
    double total_area() const;
    double peak_amplitude() const;
    // Segment index and local time for a global time; the end time maps to the last segment.
    std::pair<std::size_t, double> locate(double t) const;
    std::vector<double> start_times() const;
};

PulseSchedule synthesize_schedule(const PathSpec& spec, double omega0, Shape shape);

// Steps used for a segment given a nominal dt: at least 64, at least one per dt,
// and fine enough that the drive phase moves by no more than 0.01 rad per step.
std::size_t segment_steps(const PulseSegment& seg, double dt);
// Default nominal step: total duration / 4000.
double default_dt(const PulseSchedule& schedule);

double pulse_area(const PulseSchedule& schedule);
// Numerical quadrature of the envelope, used to cross-check the stored areas.
double quadrature_area(const PulseSegment& seg, std::size_t n = 2000);

struct PathSample {
    double t = 0.0;
    double chi = 0.0;
    double xi = 0.0;
};

struct BlochPath {
    std::vector<PathSample> samples;
    // Accumulated total phase k+(t) at each sample (geometric + dynamical parts).
    std::vector<double> k_plus;

    bool closed(double tol = 1e-6) const;
    double closure_error() const;
};

BlochPath integrate_path(const PulseSchedule& schedule, double chi0, double xi0, double dt = 0.0);
double geometric_phase(const BlochPath& path);
double dynamical_phase(const BlochPath& path, const PulseSchedule& schedule);

nlohmann::json to_json(const PulseSchedule& schedule);
PulseSchedule schedule_from_json(const nlohmann::json& j);

} // namespace geomgate::path
