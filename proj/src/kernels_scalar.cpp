#include "geomgate/kernels.hpp"

namespace geomgate::kernels {

// Reference kernels. Real and imaginary parts are accumulated separately so the
// compiler does not route every product through the NaN-checking complex multiply.
void cgemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double re = 0.0, im = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const cplx x = a[i * n + k], y = b[k * n + j];
                re += x.real() * y.real() - x.imag() * y.imag();
                im += x.real() * y.imag() + x.imag() * y.real();
            }
            c[i * n + j] = {re, im};
        }
    }
}

void cgemv_scalar(std::size_t n, const cplx* a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) {
        double re = 0.0, im = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx p = a[i * n + k], q = x[k];
            re += p.real() * q.real() - p.imag() * q.imag();
            im += p.real() * q.imag() + p.imag() * q.real();
        }
        y[i] = {re, im};
    }
}

} // namespace geomgate::kernels
