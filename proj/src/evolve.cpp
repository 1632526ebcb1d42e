#include "geomgate/evolve.hpp"

#include "geomgate/errors.hpp"
#include "geomgate/kernels.hpp"
#include "geomgate/linalg.hpp"

#include <cmath>
#include <string>

namespace geomgate {
namespace {

std::size_t step_count(double t0, double t1, double dt) {
    if (!(dt > 0.0)) throw ValidationError("time step must be positive");
    if (!(t1 > t0)) throw ValidationError("evolution interval must have t1 > t0");
    const double ratio = (t1 - t0) / dt;
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ratio - 1e-9)));
}

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
    if (!is_hermitian(rho_, 1e-10)) throw ValidationError("density matrix is not hermitian");
    if (std::abs(rho_.trace() - 1.0) > 1e-8) throw ValidationError("density matrix trace differs from 1");
    const auto eig = eigh(rho_);
    if (eig.values.front() < -1e-8) throw ValidationError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& psi) {
    double norm = 0.0;
    for (const auto& c : psi) norm += std::norm(c);
    if (norm <= 0.0) throw ValidationError("zero state vector");
    std::vector<cplx> unit(psi);
    for (auto& c : unit) c /= std::sqrt(norm);
    return DensityMatrix(ComplexMatrix::outer(unit, unit));
}

ComplexMatrix evolve_unitary(const TimeDependentHamiltonian& h, double t0, double t1, double dt) {
    const std::size_t steps = step_count(t0, t1, dt);
    const double step = (t1 - t0) / static_cast<double>(steps);
    ComplexMatrix u = ComplexMatrix::identity(h.dim);
    for (std::size_t k = 0; k < steps; ++k) {
        const double mid = t0 + (static_cast<double>(k) + 0.5) * step;
        u = matrix_exp_hermitian(h.at(mid), step) * u;
    }
    return u;
}

DenseMatrix dissipator_superoperator(const std::vector<CollapseChannel>& channels, std::size_t dim) {
    const std::size_t n2 = dim * dim;
    DenseMatrix d(n2);
    for (const auto& ch : channels) {
        if (ch.rate < 0.0) throw ValidationError("collapse rate must be non-negative");
        if (ch.op.dim() != dim) throw ValidationError("collapse operator dimension mismatch");
        if (ch.rate == 0.0) continue;
        const ComplexMatrix& a = ch.op;
        const ComplexMatrix ada = a.adjoint() * a;
        const double half = 0.5 * ch.rate;
        // Row-major vec: (X rho Y)_{ij} = sum_kl X_ik Y_lj rho_kl.
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k)
                    for (std::size_t l = 0; l < dim; ++l) {
                        cplx v = 2.0 * a(i, k) * std::conj(a(j, l));
                        if (l == j) v -= ada(i, k);
                        if (k == i) v -= ada(l, j);
                        d(i * dim + j, k * dim + l) += half * v;
                    }
    }
    return d;
}

LindbladStepper::LindbladStepper(std::vector<CollapseChannel> channels, std::size_t dim)
    : channels_(std::move(channels)), dim_(dim) {
    for (const auto& ch : channels_) {
        if (ch.rate < 0.0) throw ValidationError("collapse rate must be non-negative");
        if (ch.rate > 0.0) dissipative_ = true;
    }
    if (dissipative_) generator_ = dissipator_superoperator(channels_, dim_);
}

void LindbladStepper::apply_half_dissipator(ComplexMatrix& m, double step) {
    if (step != cachedStep_) {
        DenseMatrix g = generator_;
        g *= 0.5 * step;
        halfStep_ = expm(g);
        cachedStep_ = step;
    }
    ComplexMatrix out(dim_);
    kernels::cgemv(dim_ * dim_, halfStep_.data(), m.data(), out.data());
    m = out;
}

void LindbladStepper::advance(const TimeDependentHamiltonian& h, double t0, double t1, double dt,
                              std::vector<ComplexMatrix>& ops) {
    if (h.dim != dim_) throw ValidationError("hamiltonian dimension does not match the stepper");
    const std::size_t steps = step_count(t0, t1, dt);
    const double step = (t1 - t0) / static_cast<double>(steps);
    std::vector<cplx> traces;
    traces.reserve(ops.size());
    for (const auto& m : ops) traces.push_back(m.trace());

    for (std::size_t k = 0; k < steps; ++k) {
        const double mid = t0 + (static_cast<double>(k) + 0.5) * step;
        const ComplexMatrix u = matrix_exp_hermitian(h.at(mid), step);
        const ComplexMatrix ud = u.adjoint();
        for (auto& m : ops) {
            if (dissipative_) apply_half_dissipator(m, step);
            m = u * m * ud;
            if (dissipative_) apply_half_dissipator(m, step);
        }
    }
    for (std::size_t i = 0; i < ops.size(); ++i) check_trace(ops[i], traces[i], "lindblad evolution");
}

void check_trace(const ComplexMatrix& rho, cplx expected, const char* where) {
    const double drift = std::abs(rho.trace() - expected);
    if (drift > 1e-6)
        throw NumericalError(std::string(where) + ": trace drifted by " + std::to_string(drift) +
                             "; reduce the time step");
}

DensityMatrix evolve_lindblad(const TimeDependentHamiltonian& h, const std::vector<CollapseChannel>& channels,
                              const DensityMatrix& rho0, double t0, double t1, double dt) {
    if (rho0.dim() != h.dim) throw ValidationError("initial state dimension does not match the hamiltonian");
    LindbladStepper stepper(channels, h.dim);
    std::vector<ComplexMatrix> ops{rho0.matrix()};
    stepper.advance(h, t0, t1, dt, ops);
    try {
        return DensityMatrix(ops.front());
    } catch (const ValidationError& e) {
        throw NumericalError(std::string("lindblad evolution lost a density-matrix property (") + e.what() +
                             "); reduce the time step");
    }
}

double bessel_j1(double beta) {
    if (std::abs(beta) > 20.0) throw ValidationError("bessel_j1: |beta| must not exceed 20");
    const double v = std::cyl_bessel_j(1.0, std::abs(beta));
    return beta < 0 ? -v : v;
}

} // namespace geomgate
