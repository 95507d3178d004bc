/*
 * Memory-offset histograms for cubic stencil sweeps.
 *
 * For every interior stencil center and every location of the (2g+1)^3
 * stencil cube, the signed distance in path-index units between the
 * neighbour's and the center's memory position is accumulated. Row-major
 * layouts produce exactly (2g+1)^3 distinct offsets; space-filling layouts
 * scatter across a wide range, so counts are kept sparse.
 */

#ifndef SFC3D_HISTOGRAM_HPP
#define SFC3D_HISTOGRAM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sfc3d/layout.hpp"
#include "sfc3d/stencil.hpp"

namespace sfc3d {

/// Which center/neighbour pairs contribute.
///   interior_centers: all stencil locations of every interior center (the
///                     accumulation run over the full sweep).
///   interior_pairs:   additionally requires the neighbour itself to be an
///                     interior location; this sub-histogram is exactly
///                     symmetric, h(x) == h(-x).
enum class OffsetFilter { interior_centers, interior_pairs };

struct OffsetHistogram {
    /// (offset, count) sorted by offset; counts are all positive.
    std::vector<std::pair<std::int64_t, std::uint64_t>> bins;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [offset, count] : bins) t += count;
        return t;
    }
};

OffsetHistogram offset_histogram(const LayoutMap& layout, StencilSpec stencil,
                                 OffsetFilter filter = OffsetFilter::interior_centers);

}  // namespace sfc3d

#endif  // SFC3D_HISTOGRAM_HPP
