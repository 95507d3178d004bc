/*
 * AVX2 kernel: eight row-major offsets per iteration. The per-lane work is
 * the same shift-and-mask dilation chain as the scalar reference; only the
 * outer loop shape differs. This translation unit is compiled with -mavx2
 * and must only be entered after an AVX2 cpuid check.
 */

#include "sfc3d/kernels.hpp"

#include <immintrin.h>

namespace sfc3d::kernels {

namespace {

inline __m256i dilate10_v(__m256i x) {
    const __m256i m0 = _mm256_set1_epi32(0x3FF);
    const __m256i m1 = _mm256_set1_epi32(0x030000FF);
    const __m256i m2 = _mm256_set1_epi32(0x0300F00F);
    const __m256i m3 = _mm256_set1_epi32(0x030C30C3);
    const __m256i m4 = _mm256_set1_epi32(0x09249249);
    x = _mm256_and_si256(x, m0);
    x = _mm256_and_si256(_mm256_or_si256(x, _mm256_slli_epi32(x, 16)), m1);
    x = _mm256_and_si256(_mm256_or_si256(x, _mm256_slli_epi32(x, 8)), m2);
    x = _mm256_and_si256(_mm256_or_si256(x, _mm256_slli_epi32(x, 4)), m3);
    x = _mm256_and_si256(_mm256_or_si256(x, _mm256_slli_epi32(x, 2)), m4);
    return x;
}

}  // namespace

void morton_fill_avx2(std::uint32_t* out, unsigned m, unsigned r) {
    const std::uint32_t M = 1u << m;
    const std::uint64_t volume = std::uint64_t{M} * M * M;
    if (r == 0) {
        __m256i rmo = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
        const __m256i eight = _mm256_set1_epi32(8);
        for (std::uint64_t base = 0; base < volume; base += 8) {
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + base), rmo);
            rmo = _mm256_add_epi32(rmo, eight);
        }
        return;
    }
    const unsigned n = m - r;
    const __m256i axis_mask = _mm256_set1_epi32(static_cast<int>(M - 1));
    const __m256i low_mask = _mm256_set1_epi32(static_cast<int>((1u << n) - 1));
    __m256i rmo = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i eight = _mm256_set1_epi32(8);
    for (std::uint64_t base = 0; base < volume; base += 8) {
        const __m256i k = _mm256_srli_epi32(rmo, 2 * m);
        const __m256i i = _mm256_and_si256(_mm256_srli_epi32(rmo, m), axis_mask);
        const __m256i j = _mm256_and_si256(rmo, axis_mask);
        __m256i upper = _mm256_or_si256(
            _mm256_slli_epi32(dilate10_v(_mm256_srli_epi32(k, n)), 2),
            _mm256_or_si256(_mm256_slli_epi32(dilate10_v(_mm256_srli_epi32(i, n)), 1),
                            dilate10_v(_mm256_srli_epi32(j, n))));
        __m256i path = _mm256_slli_epi32(upper, 3 * n);
        path = _mm256_or_si256(
            path, _mm256_slli_epi32(_mm256_and_si256(k, low_mask), 2 * n));
        path = _mm256_or_si256(path, _mm256_slli_epi32(_mm256_and_si256(i, low_mask), n));
        path = _mm256_or_si256(path, _mm256_and_si256(j, low_mask));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + base), path);
        rmo = _mm256_add_epi32(rmo, eight);
    }
}

}  // namespace sfc3d::kernels
