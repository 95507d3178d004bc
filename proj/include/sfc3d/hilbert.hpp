/*
 * 3D Hilbert-type indexing of a 2^m cube (m >= 2).
 *
 * The curve is a recursive space-filling path with three guarantees:
 *   - it is a bijection between locations and [0, M^3),
 *   - consecutive indices are always at Manhattan distance 1,
 *   - index 0 sits at (0,0,0) and index M^3-1 at (M-1,M-1,M-1).
 */

#ifndef SFC3D_HILBERT_HPP
#define SFC3D_HILBERT_HPP

#include "sfc3d/types.hpp"

namespace sfc3d {

std::uint64_t hilbert_encode(Coord3 c, Dims dims);
Coord3 hilbert_decode(std::uint64_t l, Dims dims);

}  // namespace sfc3d

#endif  // SFC3D_HILBERT_HPP
