#include "geomgate/kernels.hpp"

#include <cstdlib>
#include <string>

namespace geomgate::kernels {
namespace {

struct Table {
    CgemmFn gemm;
    CgemvFn gemv;
    std::string_view name;
};

Table select() {
    const char* env = std::getenv("GEOMGATE_SIMD");
    const std::string want = env ? env : "";
    const bool avx2 = avx2_available();
    if (want == "scalar" || !avx2) return {cgemm_scalar, cgemv_scalar, "scalar"};
    return {cgemm_avx2, cgemv_avx2, "avx2"};
}

const Table& table() {
    static const Table t = select();
    return t;
}

} // namespace

void cgemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) { table().gemm(n, a, b, c); }
void cgemv(std::size_t n, const cplx* a, const cplx* x, cplx* y) { table().gemv(n, a, x, y); }
std::string_view active_variant() { return table().name; }

} // namespace geomgate::kernels
