#include "geomgate/linalg.hpp"

#include "geomgate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geomgate {
namespace {

double hermitian_tolerance(const ComplexMatrix& h) { return 1e-12 * std::max(1.0, max_abs(h)); }

// Applies the unitary G that acts only on indices (p, q):
//   G = [[gpp, gpq], [gqp, gqq]]  ->  A <- G^+ A G,  V <- V G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q,
            cplx gpp, cplx gpq, cplx gqp, cplx gqq) {
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * gpp + akq * gqp;
        a(k, q) = akp * gpq + akq * gqq;
        const cplx vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * gpp + vkq * gqp;
        v(k, q) = vkp * gpq + vkq * gqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k), aqk = a(q, k);
        a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
        a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
    }
}

} // namespace

EigenDecomposition eigh(const ComplexMatrix& h) {
    const std::size_t n = h.dim();
    if (!is_hermitian(h, hermitian_tolerance(h))) throw ValidationError("eigh: matrix is not hermitian");

    ComplexMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(max_abs(a), 1e-300);

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= 1e-17 * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag <= 1e-18 * scale) continue;
                // Phase-rotate the pair to a real symmetric 2x2, then a classical Jacobi rotation.
                const cplx phase = a(p, q) / mag;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx pc = std::conj(phase);
                rotate(a, v, p, q, c, s, -s * pc, c * pc);
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x).real() < a(y, y).real(); });
    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

ComplexMatrix matrix_exp_hermitian(const ComplexMatrix& h, double t) {
    if (!is_hermitian(h, hermitian_tolerance(h)))
        throw ValidationError("matrix_exp_hermitian: matrix is not hermitian");
    const std::size_t n = h.dim();

    if (n == 2) {
        // h = a0 I + a . sigma  ->  exp(-i h t) = e^{-i a0 t} (cos|a|t - i sin|a|t (a.sigma)/|a|)
        const double a0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
        const double az = 0.5 * (h(0, 0).real() - h(1, 1).real());
        const double ax = 0.5 * (h(0, 1).real() + h(1, 0).real());
        const double ay = 0.5 * (h(1, 0).imag() - h(0, 1).imag());
        const double r = std::sqrt(ax * ax + ay * ay + az * az);
        const double c = std::cos(r * t);
        const double sr = r > 0 ? std::sin(r * t) / r : t;
        const cplx g = std::polar(1.0, -a0 * t);
        const cplx mi(0.0, -1.0);
        return ComplexMatrix(2, {g * (c + mi * sr * az), g * (mi * sr * cplx(ax, -ay)),
                                 g * (mi * sr * cplx(ax, ay)), g * (c - mi * sr * az)});
    }

    const auto eig = eigh(h);
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += eig.vectors(i, k) * std::polar(1.0, -eig.values[k] * t) * std::conj(eig.vectors(j, k));
            out(i, j) = acc;
        }
    }
    return out;
}

} // namespace geomgate
