// AVX2 variants of the complex kernels. Two interleaved complex doubles per
// 256-bit lane; compiled only on x86-64 (this TU gets -mavx2 -mfma).

#include "qbp/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define QBP_HAVE_AVX2_TU 1
#include <immintrin.h>
#else
#define QBP_HAVE_AVX2_TU 0
#endif

namespace qbp::kernels {

#if QBP_HAVE_AVX2_TU

namespace {

// [re0,im0,re1,im1] * (ar,ai) for both complex slots.
inline __m256d cmul_vec_scalar(__m256d x, __m256d ar, __m256d ai) {
    __m256d xswap = _mm256_permute_pd(x, 0x5); // [im0,re0,im1,re1]
    return _mm256_addsub_pd(_mm256_mul_pd(ar, x), _mm256_mul_pd(ai, xswap));
}

void caxpy_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double* xr = reinterpret_cast<const double*>(x);
    double* yr = reinterpret_cast<double*>(y);
    __m256d ar = _mm256_set1_pd(a.real());
    __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xr + 2 * i);
        __m256d yv = _mm256_loadu_pd(yr + 2 * i);
        yv = _mm256_add_pd(yv, cmul_vec_scalar(xv, ar, ai));
        _mm256_storeu_pd(yr + 2 * i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void cscale_avx2(std::size_t n, cplx a, cplx* x) {
    double* xr = reinterpret_cast<double*>(x);
    __m256d ar = _mm256_set1_pd(a.real());
    __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xr + 2 * i);
        _mm256_storeu_pd(xr + 2 * i, cmul_vec_scalar(xv, ar, ai));
    }
    for (; i < n; ++i) x[i] *= a;
}

inline cplx reduce_pairs(__m256d acc) {
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    return {buf[0] + buf[2], buf[1] + buf[3]};
}

cplx cdotu_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xr = reinterpret_cast<const double*>(x);
    const double* yr = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xr + 2 * i);
        __m256d yv = _mm256_loadu_pd(yr + 2 * i);
        __m256d xre = _mm256_movedup_pd(xv);       // [re0,re0,re1,re1]
        __m256d xim = _mm256_permute_pd(xv, 0xF);  // [im0,im0,im1,im1]
        __m256d yswap = _mm256_permute_pd(yv, 0x5);
        __m256d p = _mm256_addsub_pd(_mm256_mul_pd(xre, yv), _mm256_mul_pd(xim, yswap));
        acc = _mm256_add_pd(acc, p);
    }
    cplx out = reduce_pairs(acc);
    for (; i < n; ++i) out += x[i] * y[i];
    return out;
}

cplx cdotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xr = reinterpret_cast<const double*>(x);
    const double* yr = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xr + 2 * i);
        __m256d yv = _mm256_loadu_pd(yr + 2 * i);
        __m256d xre = _mm256_movedup_pd(xv);
        __m256d xim = _mm256_permute_pd(xv, 0xF);
        __m256d yswap = _mm256_permute_pd(yv, 0x5);
        // conj(x)*y: [xr*yr + xi*yi, xr*yi - xi*yr]
        __m256d t2 = _mm256_sub_pd(zero, _mm256_mul_pd(xim, yswap));
        __m256d p = _mm256_addsub_pd(_mm256_mul_pd(xre, yv), t2);
        acc = _mm256_add_pd(acc, p);
    }
    cplx out = reduce_pairs(acc);
    for (; i < n; ++i) out += std::conj(x[i]) * y[i];
    return out;
}

void cgemv_avx2(std::size_t m, std::size_t n, const cplx* a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < m; ++i) y[i] = cdotu_avx2(n, a + i * n, x);
}

void cgemm_avx2(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
                cplx* c) {
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) caxpy_avx2(n, a[i * k + l], b + l * n, c + i * n);
}

const Ops avx2_ops_table{caxpy_avx2, cscale_avx2, cdotu_avx2,
                         cdotc_avx2, cgemv_avx2,  cgemm_avx2,
                         "avx2"};

} // namespace

const Ops* avx2_ops_impl() { return &avx2_ops_table; }

#else

const Ops* avx2_ops_impl() { return nullptr; }

#endif

} // namespace qbp::kernels
