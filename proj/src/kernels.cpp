#include "qbp/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qbp::kernels {

const Ops* avx2_ops_impl(); // defined in kernels_avx2.cpp

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* avx2_ops() { return avx2_available() ? avx2_ops_impl() : nullptr; }

namespace {

const Ops& select() {
    const char* env = std::getenv("QBP_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return scalar_ops();
    const Ops* simd = avx2_ops();
    if (env && std::strcmp(env, "avx2") == 0 && simd) return *simd;
    if (env && std::strcmp(env, "avx2") == 0) return scalar_ops(); // requested but unsupported
    return simd ? *simd : scalar_ops();
}

} // namespace

const Ops& ops() {
    static const Ops& chosen = select();
    return chosen;
}

} // namespace qbp::kernels
