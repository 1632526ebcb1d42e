#include "geomgate/errors.hpp"
#include "geomgate/gates.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace geomgate;
using gates::Family;
using gates::Gate;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPeak = 2 * kPi * 20e6;

// Textbook gate matrices, up to a global phase.
ComplexMatrix textbook(Gate g) {
    const double r = 1 / std::sqrt(2.0);
    switch (g) {
    case Gate::S: return ComplexMatrix(2, {1.0, 0.0, 0.0, cplx(0, 1)});
    case Gate::T: return ComplexMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, kPi / 4)});
    case Gate::H: return ComplexMatrix(2, {r, r, r, -r});
    }
    return {};
}

} // namespace

TEST_CASE("targets are the textbook gates up to a global phase") {
    for (Gate g : {Gate::S, Gate::T, Gate::H})
        for (auto c : {path::Configuration::A, path::Configuration::B}) {
            const auto t = gates::target_unitary(gates::gate_path_spec(g, 0.3 * kPi, c));
            CHECK(is_unitary(t.unitary));
            CHECK(gates::gate_fidelity(textbook(g), t.unitary) == doctest::Approx(1.0).epsilon(1e-14));
            const double n = std::hypot(t.axis[0], t.axis[1], t.axis[2]);
            CHECK(n == doctest::Approx(1.0));
        }
}

TEST_CASE("dynamical composite sequences realize the gates") {
    for (Gate g : {Gate::S, Gate::T, Gate::H}) {
        const auto spec = gates::dynamical_gate_spec(g);
        CHECK(gates::gate_fidelity(textbook(g), gates::dynamical_gate(spec)) > 1 - 1e-14);
        const auto sched = gates::dynamical_schedule(spec, kPeak, path::Shape::Sin2);
        CHECK(sched.total_area() == doctest::Approx(spec.total_area()));
        CHECK(gates::gate_fidelity(textbook(g), gates::realized_unitary(sched, {})) > 1 - 1e-9);
    }
    CHECK(gates::dynamical_gate_spec(Gate::S).total_area() == doctest::Approx(1.5 * kPi));
    CHECK(gates::dynamical_gate_spec(Gate::T).total_area() == doctest::Approx(1.25 * kPi));
    CHECK(gates::dynamical_gate_spec(Gate::H).total_area() == doctest::Approx(1.5 * kPi));
}

TEST_CASE("error-free geometric realizations match their targets on the whole grid") {
    for (Gate g : {Gate::S, Gate::T, Gate::H})
        for (Family f : {Family::GeometricA, Family::GeometricB})
            for (double l : gates::default_lambda_grid()) {
                const auto inst = gates::make_gate(g, f, l * kPi, kPeak);
                CHECK(gates::gate_fidelity(textbook(g), gates::realized_unitary(inst.schedule, {})) >= 1 - 1e-7);
            }
}

TEST_CASE("realized unitaries converge with the step size") {
    const auto inst = gates::make_gate(Gate::H, Family::GeometricA, 0.3 * kPi, kPeak);
    const gates::ErrorModel err{0.05, -0.03};
    const auto coarse = gates::realized_unitary(inst.schedule, err);
    const auto fine = gates::realized_unitary(inst.schedule, err, path::default_dt(inst.schedule) / 4);
    CHECK(max_abs_diff(coarse, fine) < 1e-6);
    CHECK(is_unitary(fine));
}

TEST_CASE("fidelity is symmetric, bounded and phase-blind") {
    const auto u = textbook(Gate::H);
    CHECK(gates::gate_fidelity(u, std::polar(1.0, 0.7) * u) == doctest::Approx(1.0));
    CHECK(gates::gate_fidelity(u, textbook(Gate::S)) == doctest::Approx(gates::gate_fidelity(textbook(Gate::S), u)));
    CHECK(gates::gate_fidelity(pauli::X(), pauli::Z()) == doctest::Approx(0.0));
}

TEST_CASE("robustness sweep rows are ordered and anchored at unit fidelity") {
    const std::vector<double> lam{0.3, 0.7};
    const std::vector<double> grid{-0.1, 0.0, 0.1};
    const auto rows = gates::robustness_sweep(Gate::S, Family::GeometricA, lam, grid, grid);
    // Per Lambda: 3 sigma_x points plus 3 sigma_z points sharing one (0, 0) point.
    CHECK(rows.size() == 10);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto key = [](const gates::SweepRow& r) { return std::tuple(r.Lambda_over_pi, r.epsilon, r.delta); };
        CHECK(key(rows[i - 1]) < key(rows[i]));
    }
    for (const auto& r : rows) {
        CHECK(r.fidelity <= 1.0);
        CHECK((r.epsilon == 0.0 || r.delta == 0.0));
        if (r.epsilon == 0.0 && r.delta == 0.0) CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-12));
        else CHECK(r.fidelity < 1.0);
    }
}

TEST_CASE("dominance intervals group runs of non-negative differences") {
    gates::DominanceCurve c{{0.1, 0.2, 0.3, 0.4, 0.6, 0.7}, {-1e-3, 1e-4, 0.0, -2e-10, -5e-3, 2e-3}};
    const auto iv = gates::dominance_intervals(c);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].lo == 0.2);
    CHECK(iv[0].hi == 0.4);
    CHECK(iv[1].lo == 0.7);
    CHECK(iv[1].hi == 0.7);
    CHECK(gates::dominance_intervals(c, 0.0).front().hi == 0.3);
}

TEST_CASE("grids include their endpoints and skip the singular Lambda") {
    const auto g = gates::uniform_grid(-0.1, 0.1, 0.005);
    CHECK(g.size() == 41);
    CHECK(g.front() == -0.1);
    CHECK(g.back() == doctest::Approx(0.1));
    CHECK(g[20] == 0.0);
    const auto l = gates::default_lambda_grid();
    CHECK(l.size() == 90);
    for (double x : l) CHECK(std::abs(x - 0.5) > 1e-9);
    CHECK(gates::default_error_grid().size() == 41);
    CHECK_THROWS(gates::advantage_range(Gate::S, Family::GeometricA, gates::ErrorType::SigmaX, {0.3, 0.8}, g));
}

TEST_CASE("geometric S gate dominates under amplitude errors at large Lambda only") {
    // The error-free point is on the grid, so the worst-case difference is at most zero;
    // dominance means it stays at zero.
    const auto c = gates::dominance_curve(Gate::S, Family::GeometricA, gates::ErrorType::SigmaX, {0.1, 0.9},
                                          gates::default_error_grid());
    CHECK(c.worst_difference[0] < -1e-4);
    CHECK(c.worst_difference[1] >= -1e-9);
    CHECK(c.worst_difference[1] <= 1e-12);
}

TEST_CASE("sweep CSV carries the header comment and schema") {
    const auto rows = gates::robustness_sweep(Gate::T, Family::Dynamical, {0.4}, {0.0, 0.1}, {0.0});
    const auto csv = gates::sweep_csv(rows, "hello");
    CHECK(csv.rfind("# hello\n", 0) == 0);
    CHECK(csv.find("gate,family,Lambda_over_pi,epsilon,delta,fidelity\n") != std::string::npos);
    CHECK(csv.find("T,dynamical,0.4,0.1,0,") != std::string::npos);
}

TEST_CASE("names round-trip and unknown names are rejected") {
    for (Family f : {Family::GeometricA, Family::GeometricB, Family::Dynamical})
        CHECK(gates::parse_family(gates::to_string(f)) == f);
    CHECK(gates::parse_error_type("sigma_z") == gates::ErrorType::SigmaZ);
    CHECK_THROWS_AS(gates::parse_gate("X"), ValidationError);
}
