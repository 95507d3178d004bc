/*
 * Bulk index kernels used when materializing layout maps.
 *
 * Filling a map touches every row-major offset once and is pure bit
 * arithmetic for the Morton family, so it comes in a scalar reference
 * version and an AVX2 version processing eight offsets per step. The
 * dispatcher picks the best variant supported by the running CPU; both
 * produce bit-identical output.
 */

#ifndef SFC3D_KERNELS_HPP
#define SFC3D_KERNELS_HPP

#include <cstdint>

namespace sfc3d::kernels {

/// out[rmo] = level-r Morton index of the item at row-major offset rmo,
/// for all rmo in [0, 8^m). Requires 3*m <= 30 so indices fit 32 bits.
using MortonFillFn = void (*)(std::uint32_t* out, unsigned m, unsigned r);

void morton_fill_scalar(std::uint32_t* out, unsigned m, unsigned r);

bool avx2_available();
/// Only callable when avx2_available().
void morton_fill_avx2(std::uint32_t* out, unsigned m, unsigned r);

/// Runtime-selected variant.
MortonFillFn morton_fill();

}  // namespace sfc3d::kernels

#endif  // SFC3D_KERNELS_HPP
