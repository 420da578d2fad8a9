#include "qbp/kernels.hpp"

namespace qbp::kernels {

namespace {

void caxpy_scalar(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void cscale_scalar(std::size_t n, cplx a, cplx* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

cplx cdotu_scalar(std::size_t n, const cplx* x, const cplx* y) {
    cplx acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

cplx cdotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
    cplx acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

void cgemv_scalar(std::size_t m, std::size_t n, const cplx* a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < m; ++i) y[i] = cdotu_scalar(n, a + i * n, x);
}

void cgemm_scalar(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
                  cplx* c) {
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) caxpy_scalar(n, a[i * k + l], b + l * n, c + i * n);
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{caxpy_scalar, cscale_scalar, cdotu_scalar,
                         cdotc_scalar, cgemv_scalar,  cgemm_scalar,
                         "scalar"};
    return ops;
}

} // namespace qbp::kernels
