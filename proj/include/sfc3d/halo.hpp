/*
 * Halo surface packing.
 *
 * One traversal of the data path records, for each of the six depth-g
 * surfaces, the list of path indices of its cells in traversal order
 * (6 g M^2 integers in total). Packing then copies the g M^2 listed cells
 * into a contiguous buffer with a single forward sweep; unpacking is the
 * exact inverse. Cells on edges and corners belong to several surfaces and
 * appear in each of their lists.
 */

#ifndef SFC3D_HALO_HPP
#define SFC3D_HALO_HPP

#include <array>

#include "sfc3d/grid.hpp"
#include "sfc3d/stencil.hpp"
#include "sfc3d/surface.hpp"

namespace sfc3d {

struct SurfaceIndexLists {
    Dims dims;
    unsigned g = 1;
    std::array<std::vector<std::uint32_t>, 6> lists;  // strictly increasing path indices

    const std::vector<std::uint32_t>& operator[](SurfaceId s) const {
        return lists[static_cast<std::size_t>(s)];
    }
};

using HaloBuffer = std::vector<std::uint8_t>;

SurfaceIndexLists build_surface_lists(const LayoutMap& layout, unsigned g);

/// buffer[t] = cells[p_t] over the surface's list; buffer is resized to g*M^2.
void pack_surface(const Grid& grid, const SurfaceIndexLists& lists, SurfaceId s,
                  HaloBuffer& buffer);
HaloBuffer pack_surface(const Grid& grid, const SurfaceIndexLists& lists, SurfaceId s);

/// cells[p_t] = buffer[t]; exact inverse of pack_surface on the covered cells.
void unpack_surface(const HaloBuffer& buffer, const SurfaceIndexLists& lists, SurfaceId s,
                    Grid& grid);

struct PackTiming {
    SurfaceId surface;
    double mean_s = 0;    // mean wall time of one pack of the full surface
    double stddev_s = 0;  // sample standard deviation over the repeats
};

/// Times pack_surface per surface (list construction excluded).
std::array<PackTiming, 6> bench_pack(const Grid& grid, const SurfaceIndexLists& lists,
                                     unsigned repeats = 10);

}  // namespace sfc3d

#endif  // SFC3D_HALO_HPP
