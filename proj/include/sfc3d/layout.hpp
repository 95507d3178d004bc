/*
 * Precomputed bidirectional layout maps.
 *
 * A LayoutMap holds both directions of the bijection between path index and
 * row-major offset as flat arrays, matching the strategy of doing one
 * initial traversal up front so later accesses pay no transform cost. Maps
 * are immutable after construction and safe to share across threads.
 */

#ifndef SFC3D_LAYOUT_HPP
#define SFC3D_LAYOUT_HPP

#include <vector>

#include "sfc3d/ordering.hpp"
#include "sfc3d/types.hpp"

namespace sfc3d {

struct LayoutMap {
    Dims dims;
    std::vector<std::uint32_t> path_to_rmo;  // q: path index -> row-major offset
    std::vector<std::uint32_t> rmo_to_path;  // p: row-major offset -> path index
};

/// Largest exponent for which full maps are materialized (indices are kept
/// as 32-bit integers, and 2^30 entries per direction is already 8 GiB).
inline constexpr unsigned kMaxLayoutExponent = 10;

LayoutMap build_layout(const OrderingSpec& spec);

}  // namespace sfc3d

#endif  // SFC3D_LAYOUT_HPP
