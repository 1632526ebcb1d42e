#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace geomgate {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxDim = 9;

// Small dense complex matrix with inline storage. Every operator in the toolkit
// lives on at most a two-qutrit space, so heap traffic is avoided entirely.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::initializer_list<cplx> rowMajor);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
    static ComplexMatrix diagonal(const std::vector<cplx>& d);
    static ComplexMatrix outer(const std::vector<cplx>& ket, const std::vector<cplx>& bra);
    // |row><col|
    static ComplexMatrix unit(std::size_t dim, std::size_t row, std::size_t col);

    std::size_t dim() const { return n_; }
    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    cplx trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    std::vector<cplx> apply(const std::vector<cplx>& v) const;

private:
    std::size_t n_ = 0;
    std::array<cplx, kMaxDim * kMaxDim> a_{};
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-9);
// Spectral norm via the largest eigenvalue of M^dagger M.
double operator_norm(const ComplexMatrix& m);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
} // namespace pauli

// Heap matrix for Liouville-space operators (dimension up to 81).
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n) {}
    static DenseMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix& operator+=(const DenseMatrix& o);
    DenseMatrix& operator*=(double s);
    double one_norm() const;

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

// General matrix exponential by scaling and squaring of a Taylor series.
DenseMatrix expm(const DenseMatrix& a);

} // namespace geomgate
