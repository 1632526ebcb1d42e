#include "geomgate/matrix.hpp"

#include "geomgate/errors.hpp"
#include "geomgate/kernels.hpp"
#include "geomgate/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace geomgate {

ComplexMatrix::ComplexMatrix(std::size_t dim) : n_(dim) {
    if (dim == 0 || dim > kMaxDim) throw ValidationError("matrix dimension must be in [1, 9]");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<cplx> rowMajor) : ComplexMatrix(dim) {
    if (rowMajor.size() != dim * dim) throw ValidationError("initializer size does not match dimension");
    std::copy(rowMajor.begin(), rowMajor.end(), a_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<cplx>& ket, const std::vector<cplx>& bra) {
    if (ket.size() != bra.size()) throw ValidationError("outer product of vectors with different lengths");
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
        for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
    return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
    ComplexMatrix m(dim);
    m(row, col) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(j, i);
    return m;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix m = *this;
    for (std::size_t k = 0; k < n_ * n_; ++k) m.a_[k] = std::conj(m.a_[k]);
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (o.n_ != n_) throw ValidationError("dimension mismatch in addition");
    for (std::size_t k = 0; k < n_ * n_; ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (o.n_ != n_) throw ValidationError("dimension mismatch in subtraction");
    for (std::size_t k = 0; k < n_ * n_; ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (std::size_t k = 0; k < n_ * n_; ++k) a_[k] *= s;
    return *this;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& v) const {
    if (v.size() != n_) throw ValidationError("dimension mismatch in matrix-vector product");
    std::vector<cplx> out(n_);
    kernels::cgemv(n_, a_.data(), v.data(), out.data());
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw ValidationError("dimension mismatch in product");
    ComplexMatrix c(a.dim());
    kernels::cgemm(a.dim(), a.data(), b.data(), c.data());
    return c;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix m(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return m;
}

double max_abs(const ComplexMatrix& m) {
    double r = 0.0;
    for (std::size_t k = 0; k < m.dim() * m.dim(); ++k) r = std::max(r, std::abs(m.data()[k]));
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw ValidationError("dimension mismatch in comparison");
    double r = 0.0;
    for (std::size_t k = 0; k < a.dim() * a.dim(); ++k) r = std::max(r, std::abs(a.data()[k] - b.data()[k]));
    return r;
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return max_abs_diff(m, m.adjoint()) <= tol; }

bool is_unitary(const ComplexMatrix& m, double tol) {
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.dim())) <= tol;
}

double operator_norm(const ComplexMatrix& m) {
    const auto eig = eigh(m.adjoint() * m);
    return std::sqrt(std::max(0.0, eig.values.back()));
}

namespace pauli {
ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix Y() { return ComplexMatrix(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0}); }
ComplexMatrix Z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
} // namespace pauli

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (o.n_ != n_) throw ValidationError("dimension mismatch in superoperator product");
    DenseMatrix c(n_);
    kernels::cgemm(n_, a_.data(), o.a_.data(), c.a_.data());
    return c;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
    for (auto& x : a_) x *= s;
    return *this;
}

double DenseMatrix::one_norm() const {
    double best = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n_; ++i) col += std::abs((*this)(i, j));
        best = std::max(best, col);
    }
    return best;
}

DenseMatrix expm(const DenseMatrix& a) {
    // Scale so the norm is below 1/2, then an 18-term Taylor series is accurate
    // well past double precision before squaring back up.
    const double norm = a.one_norm();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    DenseMatrix x = a;
    x *= std::ldexp(1.0, -squarings);

    DenseMatrix result = DenseMatrix::identity(a.size());
    DenseMatrix term = DenseMatrix::identity(a.size());
    for (int k = 1; k <= 18; ++k) {
        term = term * x;
        term *= 1.0 / k;
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

} // namespace geomgate
