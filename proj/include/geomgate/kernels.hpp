#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace geomgate::kernels {

using cplx = std::complex<double>;

// C = A * B for square row-major n x n matrices. C must not alias A or B.
using CgemmFn = void (*)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
// y = A * x for a row-major n x n matrix. y must not alias x.
using CgemvFn = void (*)(std::size_t n, const cplx* a, const cplx* x, cplx* y);

void cgemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void cgemv_scalar(std::size_t n, const cplx* a, const cplx* x, cplx* y);

// Only callable when avx2_available() is true.
void cgemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void cgemv_avx2(std::size_t n, const cplx* a, const cplx* x, cplx* y);

bool avx2_available();

// Dispatching entry points. The variant is picked once per process from the CPU
// features, unless GEOMGATE_SIMD=scalar or GEOMGATE_SIMD=avx2 says otherwise.
void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void cgemv(std::size_t n, const cplx* a, const cplx* x, cplx* y);

std::string_view active_variant();

} // namespace geomgate::kernels
