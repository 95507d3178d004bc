/*
 * Morton (Z-order) indexing of a 2^m cube at a chosen recursion level r.
 *
 * Level r reorders the cube as 8^r sub-arrays of side 2^(m-r), each stored
 * row-major. The index layout is, from most significant bit down:
 *
 *   [ upper r bits of k,i,j interleaved (k high, then i, then j) |
 *     lower m-r bits of k | lower m-r bits of i | lower m-r bits of j ]
 *
 * r = 0 is the plain row-major array; r = m-1 gives 2x2x2 blocks, which is
 * the same ordering as interleaving all bits. Bit interleaving is done with
 * dilated integers (bit b of the input moves to bit 3b).
 */

#ifndef SFC3D_MORTON_HPP
#define SFC3D_MORTON_HPP

#include "sfc3d/types.hpp"

namespace sfc3d {

/// dilate3/compact3 support at most this many input bits (3*21 = 63).
inline constexpr unsigned kMaxDilateWidth = 21;

namespace detail {

inline std::uint64_t dilate3_u64(std::uint64_t x) {
    x &= 0x1FFFFF;
    x = (x | (x << 32)) & 0x001F00000000FFFF;
    x = (x | (x << 16)) & 0x001F0000FF0000FF;
    x = (x | (x << 8)) & 0x100F00F00F00F00F;
    x = (x | (x << 4)) & 0x10C30C30C30C30C3;
    x = (x | (x << 2)) & 0x1249249249249249;
    return x;
}

inline std::uint64_t compact3_u64(std::uint64_t x) {
    x &= 0x1249249249249249;
    x = (x | (x >> 2)) & 0x10C30C30C30C30C3;
    x = (x | (x >> 4)) & 0x100F00F00F00F00F;
    x = (x | (x >> 8)) & 0x001F0000FF0000FF;
    x = (x | (x >> 16)) & 0x001F00000000FFFF;
    x = (x | (x >> 32)) & 0x1FFFFF;
    return x;
}

inline void require_width(unsigned width, const char* who) {
    if (width > kMaxDilateWidth)
        throw std::invalid_argument(std::string(who) + ": width " + std::to_string(width) +
                                    " exceeds " + std::to_string(kMaxDilateWidth) + " bits");
}

}  // namespace detail

/// Spreads the low `width` bits of x so bit b lands at bit 3b.
inline std::uint64_t dilate3(std::uint64_t x, unsigned width) {
    detail::require_width(width, "dilate3");
    if (width < 64 && (x >> width) != 0)
        throw std::invalid_argument("dilate3: value does not fit the given width");
    return detail::dilate3_u64(x);
}

/// Inverse of dilate3: collects bits 0, 3, 6, ... into a contiguous value.
inline std::uint64_t compact3(std::uint64_t x, unsigned width) {
    detail::require_width(width, "compact3");
    return detail::compact3_u64(x) & ((std::uint64_t{1} << width) - 1);
}

/// Interleaves the low `width` bits of three values; within each output bit
/// triple the k bit is most significant, then i, then j.
inline std::uint64_t interleave3(std::uint32_t k, std::uint32_t i, std::uint32_t j,
                                 unsigned width) {
    detail::require_width(width, "interleave3");
    return (detail::dilate3_u64(k) << 2) | (detail::dilate3_u64(i) << 1) |
           detail::dilate3_u64(j);
}

inline void deinterleave3(std::uint64_t v, unsigned width, std::uint32_t& k,
                          std::uint32_t& i, std::uint32_t& j) {
    detail::require_width(width, "deinterleave3");
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    k = static_cast<std::uint32_t>(detail::compact3_u64(v >> 2) & mask);
    i = static_cast<std::uint32_t>(detail::compact3_u64(v >> 1) & mask);
    j = static_cast<std::uint32_t>(detail::compact3_u64(v) & mask);
}

namespace detail {

inline void require_level(unsigned r, Dims d, const char* who) {
    if (r >= d.m && !(r == 0 && d.m == 0))
        throw std::invalid_argument(std::string(who) + ": level " + std::to_string(r) +
                                    " out of range for m = " + std::to_string(d.m));
}

/// Cyclically rotates the inclusive bit range [lo, hi] of x right by one.
inline std::uint64_t rotate_right_one(std::uint64_t x, unsigned lo, unsigned hi) {
    const unsigned width = hi - lo + 1;
    const std::uint64_t mask = (width >= 64) ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << width) - 1);
    const std::uint64_t field = (x >> lo) & mask;
    const std::uint64_t rotated = ((field >> 1) | (field << (width - 1))) & mask;
    return (x & ~(mask << lo)) | (rotated << lo);
}

}  // namespace detail

/// Level-r Morton index of c.
inline std::uint64_t morton_encode(Coord3 c, Dims dims, unsigned r) {
    detail::require_level(r, dims, "morton_encode");
    require_coord(c, dims, "morton_encode");
    const unsigned n = dims.m - r;
    const std::uint64_t low_mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t upper = (detail::dilate3_u64(c.k >> n) << 2) |
                                (detail::dilate3_u64(c.i >> n) << 1) |
                                detail::dilate3_u64(c.j >> n);
    return (upper << (3 * n)) | ((std::uint64_t{c.k} & low_mask) << (2 * n)) |
           ((std::uint64_t{c.i} & low_mask) << n) | (std::uint64_t{c.j} & low_mask);
}

inline Coord3 morton_decode(std::uint64_t l, Dims dims, unsigned r) {
    detail::require_level(r, dims, "morton_decode");
    require_index(l, dims, "morton_decode");
    const unsigned n = dims.m - r;
    const std::uint64_t low_mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t upper = l >> (3 * n);
    const std::uint64_t hi_mask = (std::uint64_t{1} << r) - 1;
    Coord3 c;
    c.k = static_cast<std::uint32_t>(((detail::compact3_u64(upper >> 2) & hi_mask) << n) |
                                     ((l >> (2 * n)) & low_mask));
    c.i = static_cast<std::uint32_t>(((detail::compact3_u64(upper >> 1) & hi_mask) << n) |
                                     ((l >> n) & low_mask));
    c.j = static_cast<std::uint32_t>(((detail::compact3_u64(upper) & hi_mask) << n) |
                                     (l & low_mask));
    return c;
}

/// Refines a level-(r-1) Morton index to level r with two cyclic bit
/// rotations, without going through coordinates. With n = m - r, the top
/// bit of each of the three per-axis low fields has to join the interleaved
/// section: rotating [2n+1, 3n+1] right by one moves the i bit into place,
/// then rotating [n, 3n] right by one moves the j bit and realigns the k
/// and i low fields.
inline std::uint64_t morton_refine(std::uint64_t l_prev, Dims dims, unsigned r) {
    if (r < 1 || r >= dims.m)
        throw std::invalid_argument("morton_refine: level " + std::to_string(r) +
                                    " out of range for m = " + std::to_string(dims.m));
    require_index(l_prev, dims, "morton_refine");
    const unsigned n = dims.m - r;
    std::uint64_t l = detail::rotate_right_one(l_prev, 2 * n + 1, 3 * n + 1);
    return detail::rotate_right_one(l, n, 3 * n);
}

}  // namespace sfc3d

#endif  // SFC3D_MORTON_HPP
