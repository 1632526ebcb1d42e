#include "geomgate/path.hpp"

#include "geomgate/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace geomgate::path {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroArea = 1e-14;
constexpr double kPoleTol = 1e-9;

std::array<double, 3> bloch(double chi, double xi) {
    return {std::sin(chi) * std::cos(xi), std::sin(chi) * std::sin(xi), std::cos(chi)};
}

// Integral of the envelope from 0 to t.
double partial_area(const PulseSegment& s, double t) {
    if (s.shape == Shape::Const) return s.omega0 * t;
    const double T = s.duration;
    return s.omega0 * (0.5 * t - T / (4.0 * kPi) * std::sin(2.0 * kPi * t / T));
}

} // namespace

std::string to_string(Configuration c) { return c == Configuration::A ? "A" : "B"; }
std::string to_string(Shape s) { return s == Shape::Sin2 ? "sin2" : "const"; }

Configuration parse_configuration(const std::string& s) {
    if (s == "A") return Configuration::A;
    if (s == "B") return Configuration::B;
    throw ValidationError("unknown configuration '" + s + "' (expected A or B)");
}

Shape parse_shape(const std::string& s) {
    if (s == "sin2") return Shape::Sin2;
    if (s == "const") return Shape::Const;
    throw ValidationError("unknown pulse shape '" + s + "' (expected sin2 or const)");
}

double PathSpec::span() const { return configuration == Configuration::A ? lambda : lambda - k * kPi; }

double PathSpec::enclosed_phase() const { return 0.5 * span() * (1.0 - std::cos(Lambda)); }

PathSpec make_path_spec(double chi0, double xi0, double gamma_g, double Lambda, Configuration configuration) {
    if (!(chi0 >= 0.0 && chi0 < kPi)) throw ParameterRangeError("chi0 must lie in [0, pi)");
    if (!(Lambda > 0.0 && Lambda <= kPi + 1e-12)) throw ParameterRangeError("Lambda must lie in (0, pi]");
    if (std::abs(Lambda - 0.5 * kPi) < 1e-12)
        throw SingularityError("Lambda = pi/2 makes the latitude detuning singular (tan Lambda)");
    if (!(gamma_g < 0.0))
        throw UnsupportedConventionError("gamma_g must be negative; flip the rotation axis for positive angles");

    PathSpec p;
    p.chi0 = chi0;
    p.xi0 = xi0;
    p.gamma_g = gamma_g;
    p.Lambda = std::min(Lambda, kPi);
    p.configuration = configuration;
    const double oneMinusCos = 1.0 - std::cos(p.Lambda);
    p.lambda = 2.0 * gamma_g / oneMinusCos;
    p.k = 2.0 / oneMinusCos;
    p.xi1 = xi0 + p.span();
    return p;
}

double PulseSegment::omega(double t) const {
    if (shape == Shape::Const) return omega0;
    const double s = std::sin(kPi * t / duration);
    return omega0 * s * s;
}

double PulseSegment::omega_dot(double t) const {
    if (shape == Shape::Const) return 0.0;
    return omega0 * kPi / duration * std::sin(2.0 * kPi * t / duration);
}

double PulseSegment::phi(double t) const {
    if (shape == Shape::Const) return phi0 + phi_slope * t;
    const double T = duration;
    return phi0 - delta * t + (phi_slope + delta) * (t - T / (2.0 * kPi) * std::sin(2.0 * kPi * t / T));
}

double PulseSegment::phi_dot(double t) const {
    if (shape == Shape::Const) return phi_slope;
    return -delta + (phi_slope + delta) * (1.0 - std::cos(2.0 * kPi * t / duration));
}

double PulseSegment::phase_variation() const {
    return (std::abs(delta) + std::abs(phi_slope + delta)) * duration;
}

double PulseSchedule::total_duration() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.duration;
    return t;
}

double PulseSchedule::total_area() const {
    double a = 0.0;
    for (const auto& s : segments) a += s.area;
    return a;
}

double PulseSchedule::peak_amplitude() const {
    double p = 0.0;
    for (const auto& s : segments) p = std::max(p, s.omega0);
    return p;
}

std::vector<double> PulseSchedule::start_times() const {
    std::vector<double> out;
    double t = 0.0;
    for (const auto& s : segments) {
        out.push_back(t);
        t += s.duration;
    }
    return out;
}

std::pair<std::size_t, double> PulseSchedule::locate(double t) const {
    if (segments.empty()) throw ValidationError("empty schedule has no segments to locate");
    double start = 0.0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const double end = start + segments[i].duration;
        if (t < end || i + 1 == segments.size()) return {i, std::clamp(t - start, 0.0, segments[i].duration)};
        start = end;
    }
    return {segments.size() - 1, segments.back().duration};
}

PulseSchedule synthesize_schedule(const PathSpec& spec, double omega0, Shape shape) {
    if (!(omega0 > 0.0)) throw ValidationError("omega0 must be positive");
    const double L = spec.Lambda;
    const double span = spec.span();
    // Duration that delivers a given area at the shared peak amplitude.
    const auto duration = [&](double area) { return (shape == Shape::Sin2 ? 2.0 : 1.0) * area / omega0; };

    PulseSchedule sched;
    sched.path = spec;
    const auto add = [&](double area, double phi0, double slope, double delta) {
        if (area < kZeroArea) return;
        sched.segments.push_back({duration(area), shape, omega0, area, phi0, slope, delta});
    };

    // Longitude from the start point up to the north pole.
    add(spec.chi0, spec.xi0 - kPi / 2, 0.0, 0.0);
    // Longitude from the pole down to polar angle Lambda at azimuth xi1.
    add(L, spec.xi1 + kPi / 2, 0.0, 0.0);
    // Latitude at Lambda, sweeping the azimuth back by -span; the detuning keeps the
    // motion parallel-transported.
    const double latArea = std::abs(span * std::sin(L) * std::cos(L));
    if (latArea >= kZeroArea) {
        const double T3 = duration(latArea);
        const double phi0 = L < kPi / 2 ? spec.xi1 + kPi : spec.xi1;
        add(latArea, phi0, -span / T3, span * std::sin(L) * std::sin(L) / T3);
    }
    // Longitude from Lambda back to the start polar angle.
    add(std::abs(L - spec.chi0), L > spec.chi0 ? spec.xi0 - kPi / 2 : spec.xi0 + kPi / 2, 0.0, 0.0);

    if (sched.segments.empty()) throw DegenerateGateError("schedule has zero total pulse area");
    return sched;
}

std::size_t segment_steps(const PulseSegment& seg, double dt) {
    if (!(dt > 0.0)) throw ValidationError("time step must be positive");
    const double byTime = std::ceil(seg.duration / dt - 1e-9);
    const double byPhase = std::ceil(seg.phase_variation() / 0.01);
    return static_cast<std::size_t>(std::max({byTime, byPhase, 64.0}));
}

double default_dt(const PulseSchedule& schedule) { return schedule.total_duration() / 4000.0; }

double pulse_area(const PulseSchedule& schedule) { return schedule.total_area(); }

double quadrature_area(const PulseSegment& seg, std::size_t n) {
    // Composite Simpson; exact up to rounding for the sin^2 envelope with n even.
    if (n % 2) ++n;
    const double h = seg.duration / static_cast<double>(n);
    double acc = seg.omega(0.0) + seg.omega(seg.duration);
    for (std::size_t i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * seg.omega(h * static_cast<double>(i));
    return acc * h / 3.0;
}

double BlochPath::closure_error() const {
    if (samples.empty()) return 0.0;
    const auto a = bloch(samples.front().chi, samples.front().xi);
    const auto b = bloch(samples.back().chi, samples.back().xi);
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

bool BlochPath::closed(double tol) const { return closure_error() <= tol; }

namespace {

struct Increment {
    double geometric = 0.0;
    double dynamical = 0.0;
    bool singular = false;
};

Increment phase_increment(const PathSample& a, const PathSample& b, double delta) {
    const double chiMid = 0.5 * (a.chi + b.chi);
    const double dxi = b.xi - a.xi;
    Increment inc;
    inc.geometric = -0.5 * dxi * (1.0 - std::cos(chiMid));
    const double num = dxi * std::sin(chiMid) * std::sin(chiMid) + delta * (b.t - a.t);
    const double den = std::cos(chiMid);
    if (std::abs(den) < 1e-6) {
        // Equator crossings on designed longitude segments are 0/0 and contribute nothing.
        if (std::abs(num) > 1e-12) inc.singular = true;
        return inc;
    }
    inc.dynamical = 0.5 * num / den;
    return inc;
}

} // namespace

BlochPath integrate_path(const PulseSchedule& schedule, double chi0, double xi0, double dt) {
    if (dt <= 0.0) dt = default_dt(schedule);
    BlochPath path;
    double chi = chi0, xi = xi0, t = 0.0;
    path.samples.push_back({t, chi, xi});

    for (const auto& seg : schedule.segments) {
        const std::size_t n = segment_steps(seg, dt);
        const double h = seg.duration / static_cast<double>(n);
        const double phiStart = seg.phi(0.0);

        // At a pole the azimuth is arbitrary; pick the one the drive moves away along.
        if (chi < kPoleTol) {
            chi = 0.0;
            xi = phiStart - kPi / 2;
            path.samples.push_back({t, chi, xi});
        } else if (chi > kPi - kPoleTol) {
            chi = kPi;
            xi = phiStart + kPi / 2;
            path.samples.push_back({t, chi, xi});
        }

        const bool longitude = seg.delta == 0.0 && seg.phi_slope == 0.0 && std::abs(std::cos(phiStart - xi)) < 1e-6;
        if (longitude) {
            const double dir = std::sin(phiStart - xi) > 0 ? 1.0 : -1.0;
            // Snap away the residue left by the latitude integration so the arc is exact.
            const double snapped = phiStart - dir * kPi / 2;
            const double turns = std::round((xi - snapped) / (2 * kPi));
            xi = snapped + 2 * kPi * turns;
            const double chiStart = chi;
            for (std::size_t j = 1; j <= n; ++j) {
                const double tl = h * static_cast<double>(j);
                chi = std::clamp(chiStart + dir * partial_area(seg, tl), 0.0, kPi);
                path.samples.push_back({t + tl, chi, xi});
            }
        } else {
            const auto rhs = [&](double tl, double c, double x) {
                const double om = seg.omega(tl);
                const double rel = seg.phi(tl) - x;
                const double s = std::sin(c);
                if (std::abs(s) < 1e-7 && om * std::abs(std::cos(rel)) > 0.0)
                    throw PathDivergenceError("path passes a pole outside a longitude segment (cot chi overflow)");
                return std::array<double, 2>{om * std::sin(rel), -seg.delta - om * std::cos(c) / s * std::cos(rel)};
            };
            for (std::size_t j = 0; j < n; ++j) {
                const double tl = h * static_cast<double>(j);
                const auto k1 = rhs(tl, chi, xi);
                const auto k2 = rhs(tl + h / 2, chi + h / 2 * k1[0], xi + h / 2 * k1[1]);
                const auto k3 = rhs(tl + h / 2, chi + h / 2 * k2[0], xi + h / 2 * k2[1]);
                const auto k4 = rhs(tl + h, chi + h * k3[0], xi + h * k3[1]);
                chi += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
                xi += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
                if (!std::isfinite(chi) || !std::isfinite(xi)) throw PathDivergenceError("path integration diverged");
                path.samples.push_back({t + h * static_cast<double>(j + 1), chi, xi});
            }
        }
        t += seg.duration;
    }

    path.k_plus.assign(path.samples.size(), 0.0);
    for (std::size_t i = 1; i < path.samples.size(); ++i) {
        const auto& a = path.samples[i - 1];
        const auto& b = path.samples[i];
        const double delta = b.t > a.t ? schedule.segments[schedule.locate(0.5 * (a.t + b.t)).first].delta : 0.0;
        const auto inc = phase_increment(a, b, delta);
        path.k_plus[i] = path.k_plus[i - 1] + inc.geometric + inc.dynamical;
    }
    return path;
}

double geometric_phase(const BlochPath& path) {
    if (!path.closed()) throw ValidationError("geometric phase requires a closed path");
    double acc = 0.0;
    for (std::size_t i = 1; i < path.samples.size(); ++i)
        acc += phase_increment(path.samples[i - 1], path.samples[i], 0.0).geometric;
    return acc;
}

double dynamical_phase(const BlochPath& path, const PulseSchedule& schedule) {
    if (!path.closed()) throw ValidationError("dynamical phase requires a closed path");
    double acc = 0.0;
    for (std::size_t i = 1; i < path.samples.size(); ++i) {
        const auto& a = path.samples[i - 1];
        const auto& b = path.samples[i];
        const double delta = b.t > a.t ? schedule.segments[schedule.locate(0.5 * (a.t + b.t)).first].delta : 0.0;
        const auto inc = phase_increment(a, b, delta);
        if (inc.singular) throw ValidationError("unpaired chi = pi/2 singularity in the dynamical phase integrand");
        acc += inc.dynamical;
    }
    return acc;
}

nlohmann::json to_json(const PulseSchedule& schedule) {
    nlohmann::json j;
    j["segments"] = nlohmann::json::array();
    for (const auto& s : schedule.segments) {
        j["segments"].push_back({{"duration_s", s.duration},
                                 {"shape", to_string(s.shape)},
                                 {"omega0_rad_s", s.omega0},
                                 {"area_rad", s.area},
                                 {"phi0_rad", s.phi0},
                                 {"phi_slope_rad_s", s.phi_slope},
                                 {"delta_rad_s", s.delta}});
    }
    if (schedule.path) {
        const auto& p = *schedule.path;
        j["configuration"] = to_string(p.configuration);
        j["path"] = {{"chi0", p.chi0}, {"xi0", p.xi0}, {"Lambda", p.Lambda}, {"lambda", p.lambda}, {"gamma_g", p.gamma_g}};
    } else {
        j["configuration"] = nullptr;
        j["path"] = nullptr;
    }
    return j;
}

PulseSchedule schedule_from_json(const nlohmann::json& j) {
    PulseSchedule s;
    try {
        for (const auto& e : j.at("segments")) {
            s.segments.push_back({e.at("duration_s").get<double>(), parse_shape(e.at("shape").get<std::string>()),
                                  e.at("omega0_rad_s").get<double>(), e.at("area_rad").get<double>(),
                                  e.at("phi0_rad").get<double>(), e.at("phi_slope_rad_s").get<double>(),
                                  e.at("delta_rad_s").get<double>()});
        }
        if (j.contains("path") && !j.at("path").is_null()) {
            const auto& p = j.at("path");
            s.path = make_path_spec(p.at("chi0").get<double>(), p.at("xi0").get<double>(), p.at("gamma_g").get<double>(),
                                    p.at("Lambda").get<double>(),
                                    parse_configuration(j.at("configuration").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed schedule JSON: ") + e.what());
    }
    return s;
}

} // namespace geomgate::path
