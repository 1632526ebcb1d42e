#include "geomgate/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define GEOMGATE_HAVE_X86 1
#endif

namespace geomgate::kernels {

#ifdef GEOMGATE_HAVE_X86

// One __m256d holds two complex doubles (re0, im0, re1, im1). A complex product
// a*b is addsub(re(a)*b, im(a)*swap(b)); because addsub is linear we keep the two
// partial sums apart through the k loop and combine them once at the end.

__attribute__((target("avx2,fma")))
void cgemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    const double* bd = reinterpret_cast<const double*>(b);
    double* cd = reinterpret_cast<double*>(c);
    const std::size_t pairs = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* arow = a + i * n;
        for (std::size_t jp = 0; jp < pairs; ++jp) {
            __m256d accRe = _mm256_setzero_pd();
            __m256d accIm = _mm256_setzero_pd();
            for (std::size_t k = 0; k < n; ++k) {
                const __m256d bv = _mm256_loadu_pd(bd + 2 * (k * n + 2 * jp));
                const __m256d bs = _mm256_permute_pd(bv, 0x5);
                accRe = _mm256_fmadd_pd(_mm256_set1_pd(arow[k].real()), bv, accRe);
                accIm = _mm256_fmadd_pd(_mm256_set1_pd(arow[k].imag()), bs, accIm);
            }
            _mm256_storeu_pd(cd + 2 * (i * n + 2 * jp), _mm256_addsub_pd(accRe, accIm));
        }
        if (n % 2) {
            const std::size_t j = n - 1;
            double re = 0.0, im = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const cplx x = arow[k], y = b[k * n + j];
                re += x.real() * y.real() - x.imag() * y.imag();
                im += x.real() * y.imag() + x.imag() * y.real();
            }
            c[i * n + j] = {re, im};
        }
    }
}

__attribute__((target("avx2,fma")))
void cgemv_avx2(std::size_t n, const cplx* a, const cplx* x, cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    const std::size_t pairs = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const double* ad = reinterpret_cast<const double*>(a + i * n);
        __m256d accRe = _mm256_setzero_pd();
        __m256d accIm = _mm256_setzero_pd();
        for (std::size_t kp = 0; kp < pairs; ++kp) {
            const __m256d av = _mm256_loadu_pd(ad + 4 * kp);
            const __m256d xv = _mm256_loadu_pd(xd + 4 * kp);
            const __m256d xs = _mm256_permute_pd(xv, 0x5);
            accRe = _mm256_fmadd_pd(_mm256_movedup_pd(av), xv, accRe);
            accIm = _mm256_fmadd_pd(_mm256_permute_pd(av, 0xF), xs, accIm);
        }
        const __m256d sum = _mm256_addsub_pd(accRe, accIm);
        const __m128d folded = _mm_add_pd(_mm256_castpd256_pd128(sum), _mm256_extractf128_pd(sum, 1));
        double re = _mm_cvtsd_f64(folded);
        double im = _mm_cvtsd_f64(_mm_unpackhi_pd(folded, folded));
        if (n % 2) {
            const cplx p = a[i * n + n - 1], q = x[n - 1];
            re += p.real() * q.real() - p.imag() * q.imag();
            im += p.real() * q.imag() + p.imag() * q.real();
        }
        y[i] = {re, im};
    }
}

bool avx2_available() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#else

void cgemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) { cgemm_scalar(n, a, b, c); }
void cgemv_avx2(std::size_t n, const cplx* a, const cplx* x, cplx* y) { cgemv_scalar(n, a, x, y); }
bool avx2_available() { return false; }

#endif

} // namespace geomgate::kernels
