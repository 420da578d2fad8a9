#pragma once

#include <complex>
#include <cstddef>

// Dense complex kernels behind the whole linear-algebra stack. A scalar
// reference implementation always exists; an AVX2 variant is selected at
// runtime when the CPU supports it. Selection can be forced with
// QBP_KERNELS=scalar|avx2|auto (default auto). The two variants are
// equivalence-tested against each other in tests/test_kernels.cpp.

namespace qbp::kernels {

using cplx = std::complex<double>;

struct Ops {
    // y[i] += a * x[i]
    void (*caxpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
    // x[i] *= a
    void (*cscale)(std::size_t n, cplx a, cplx* x);
    // sum_i x[i] * y[i]
    cplx (*cdotu)(std::size_t n, const cplx* x, const cplx* y);
    // sum_i conj(x[i]) * y[i]
    cplx (*cdotc)(std::size_t n, const cplx* x, const cplx* y);
    // y = A * x with A row-major m-by-n (y must not alias A or x)
    void (*cgemv)(std::size_t m, std::size_t n, const cplx* a, const cplx* x, cplx* y);
    // C += A * B, row-major, A m-by-k, B k-by-n (C must not alias A or B)
    void (*cgemm)(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
                  cplx* c);
    const char* name;
};

const Ops& scalar_ops();
// Null when the binary was built without AVX2 support or the CPU lacks it.
const Ops* avx2_ops();
// The active implementation (resolved once, thread-safe).
const Ops& ops();

bool avx2_available();

inline void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) { ops().caxpy(n, a, x, y); }
inline void cscale(std::size_t n, cplx a, cplx* x) { ops().cscale(n, a, x); }
inline cplx cdotu(std::size_t n, const cplx* x, const cplx* y) { return ops().cdotu(n, x, y); }
inline cplx cdotc(std::size_t n, const cplx* x, const cplx* y) { return ops().cdotc(n, x, y); }
inline void cgemv(std::size_t m, std::size_t n, const cplx* a, const cplx* x, cplx* y) {
    ops().cgemv(m, n, a, x, y);
}
inline void cgemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
                  cplx* c) {
    ops().cgemm(m, k, n, a, b, c);
}

} // namespace qbp::kernels
