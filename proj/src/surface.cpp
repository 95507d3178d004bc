#include "sfc3d/surface.hpp"

namespace sfc3d {

std::optional<SurfaceId> surface_from_string(std::string_view name) {
    for (SurfaceId s : kAllSurfaces)
        if (name == to_string(s)) return s;
    return std::nullopt;
}

}  // namespace sfc3d
