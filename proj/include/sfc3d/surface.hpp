/*
 * The six depth-g surfaces of the data cube.
 *
 * Naming follows the axis pair that spans the surface: rc surfaces (fixed
 * slab range) are spanned by rows and columns, cs by columns and slabs, and
 * sr by slabs and rows. Front fixes the low range [0, g), back the high
 * range [M-g, M).
 */

#ifndef SFC3D_SURFACE_HPP
#define SFC3D_SURFACE_HPP

#include <array>
#include <optional>
#include <string_view>

#include "sfc3d/types.hpp"

namespace sfc3d {

enum class SurfaceId { rc_front, rc_back, cs_front, cs_back, sr_front, sr_back };

inline constexpr std::array<SurfaceId, 6> kAllSurfaces = {
    SurfaceId::rc_front, SurfaceId::rc_back, SurfaceId::cs_front,
    SurfaceId::cs_back,  SurfaceId::sr_front, SurfaceId::sr_back};

constexpr const char* to_string(SurfaceId s) {
    switch (s) {
        case SurfaceId::rc_front: return "rc-front";
        case SurfaceId::rc_back: return "rc-back";
        case SurfaceId::cs_front: return "cs-front";
        case SurfaceId::cs_back: return "cs-back";
        case SurfaceId::sr_front: return "sr-front";
        case SurfaceId::sr_back: return "sr-back";
    }
    return "?";
}

std::optional<SurfaceId> surface_from_string(std::string_view name);

constexpr bool surface_contains(SurfaceId s, Coord3 c, Dims d, unsigned g) {
    switch (s) {
        case SurfaceId::rc_front: return c.k < g;
        case SurfaceId::rc_back: return c.k >= d.M - g;
        case SurfaceId::cs_front: return c.i < g;
        case SurfaceId::cs_back: return c.i >= d.M - g;
        case SurfaceId::sr_front: return c.j < g;
        case SurfaceId::sr_back: return c.j >= d.M - g;
    }
    return false;
}

/// True when c lies within g of any face (the region excluded as stencil
/// centers, and the union of the six surfaces).
constexpr bool in_border_zone(Coord3 c, Dims d, unsigned g) {
    const std::uint32_t hi = d.M - g;
    return c.k < g || c.k >= hi || c.i < g || c.i >= hi || c.j < g || c.j >= hi;
}

}  // namespace sfc3d

#endif  // SFC3D_SURFACE_HPP
