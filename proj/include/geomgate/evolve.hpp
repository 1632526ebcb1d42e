#pragma once

#include "geomgate/matrix.hpp"

#include <functional>
#include <vector>

namespace geomgate {

struct TimeDependentHamiltonian {
    std::size_t dim = 0;
    std::function<ComplexMatrix(double)> at;  // rad/s
};

class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix rho);  // validates
    static DensityMatrix pure(const std::vector<cplx>& psi);

    const ComplexMatrix& matrix() const { return rho_; }
    std::size_t dim() const { return rho_.dim(); }

private:
    ComplexMatrix rho_;
};

struct CollapseChannel {
    ComplexMatrix op;
    double rate = 0.0;  // rad/s
};

// Time-ordered product of midpoint propagators over [t0, t1]. The interval is
// split into ceil((t1-t0)/dt) equal steps.
ComplexMatrix evolve_unitary(const TimeDependentHamiltonian& h, double t0, double t1, double dt);

// Lindblad dissipator D(rho) = 1/2 sum_k rate_k (2 A rho A^+ - A^+A rho - rho A^+A)
// as a superoperator on row-major vec(rho).
DenseMatrix dissipator_superoperator(const std::vector<CollapseChannel>& channels, std::size_t dim);

// Reusable open-system propagator: exp(D dt/2) is precomputed once, then any
// number of operators can be pushed through the same step sequence.
class LindbladStepper {
public:
    LindbladStepper(std::vector<CollapseChannel> channels, std::size_t dim);

    // Advances every operator in `ops` over [t0, t1] using ceil((t1-t0)/dt)
    // Strang steps. Operators need not be density matrices.
    void advance(const TimeDependentHamiltonian& h, double t0, double t1, double dt,
                 std::vector<ComplexMatrix>& ops);

    bool dissipative() const { return dissipative_; }

private:
    void apply_half_dissipator(ComplexMatrix& m, double step);

    std::vector<CollapseChannel> channels_;
    std::size_t dim_;
    bool dissipative_ = false;
    DenseMatrix generator_;
    double cachedStep_ = -1.0;
    DenseMatrix halfStep_;
};

DensityMatrix evolve_lindblad(const TimeDependentHamiltonian& h,
                              const std::vector<CollapseChannel>& channels,
                              const DensityMatrix& rho0, double t0, double t1, double dt);

// Throws NumericalError if the trace of rho has drifted from `expected` by more than 1e-6.
void check_trace(const ComplexMatrix& rho, cplx expected, const char* where);

double bessel_j1(double beta);

} // namespace geomgate
