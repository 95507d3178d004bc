#include "sfc3d/kernels.hpp"

namespace sfc3d::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

MortonFillFn morton_fill() {
#ifdef SFC3D_HAVE_AVX2_KERNELS
    static const MortonFillFn fn = avx2_available() ? &morton_fill_avx2 : &morton_fill_scalar;
#else
    static const MortonFillFn fn = &morton_fill_scalar;
#endif
    return fn;
}

}  // namespace sfc3d::kernels
