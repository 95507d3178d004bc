/*
 * Scalar reference kernels. The 32-bit dilation chain mirrors the mask
 * sequence used by the AVX2 variant so the two stay step-for-step
 * comparable.
 */

#include "sfc3d/kernels.hpp"

namespace sfc3d::kernels {

namespace {

// Spreads up to 10 bits so bit b lands at bit 3b (fits 30 bits).
inline std::uint32_t dilate10(std::uint32_t x) {
    x &= 0x3FF;
    x = (x | (x << 16)) & 0x030000FF;
    x = (x | (x << 8)) & 0x0300F00F;
    x = (x | (x << 4)) & 0x030C30C3;
    x = (x | (x << 2)) & 0x09249249;
    return x;
}

}  // namespace

void morton_fill_scalar(std::uint32_t* out, unsigned m, unsigned r) {
    const std::uint32_t M = 1u << m;
    if (r == 0) {  // level 0 is the row-major identity
        const std::uint64_t volume = std::uint64_t{M} * M * M;
        for (std::uint64_t rmo = 0; rmo < volume; ++rmo)
            out[rmo] = static_cast<std::uint32_t>(rmo);
        return;
    }
    const unsigned n = m - r;
    const std::uint32_t low_mask = (1u << n) - 1;
    std::uint32_t rmo = 0;
    for (std::uint32_t k = 0; k < M; ++k) {
        const std::uint32_t k_field =
            (dilate10(k >> n) << (3 * n + 2)) | ((k & low_mask) << (2 * n));
        for (std::uint32_t i = 0; i < M; ++i) {
            const std::uint32_t ki_field =
                k_field | (dilate10(i >> n) << (3 * n + 1)) | ((i & low_mask) << n);
            for (std::uint32_t j = 0; j < M; ++j, ++rmo)
                out[rmo] = ki_field | (dilate10(j >> n) << (3 * n)) | (j & low_mask);
        }
    }
}

}  // namespace sfc3d::kernels
