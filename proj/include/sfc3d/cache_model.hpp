/*
 * Single-level fully associative LRU cache model.
 *
 * Memory is split into lines of b consecutive items in path-index order and
 * the cache holds up to c lines. Stencil centers are visited in path order;
 * for every stencil location the accessed item's line is probed, a miss
 * fills the line (evicting the least recently used one when full), and
 * every probe, hit or miss, refreshes the line's recency.
 *
 * The interior model processes only centers outside the border zone. The
 * surface variant negates that condition, optionally restricting centers to
 * one named surface, and can either run the full stencil per center or
 * touch just the center item (the access pattern of buffer packing).
 */

#ifndef SFC3D_CACHE_MODEL_HPP
#define SFC3D_CACHE_MODEL_HPP

#include <optional>

#include "sfc3d/histogram.hpp"
#include "sfc3d/layout.hpp"
#include "sfc3d/surface.hpp"

namespace sfc3d {

struct CacheConfig {
    std::uint32_t b = 1;  // items per cache line
    std::uint32_t c = 1;  // number of lines held
};

inline void require_cache(CacheConfig cfg, Dims d, const char* who) {
    if (cfg.b < 1 || cfg.c < 1)
        throw std::invalid_argument(std::string(who) + ": cache needs b >= 1 and c >= 1");
    if (d.volume() % cfg.b != 0)
        throw std::invalid_argument(std::string(who) + ": line size b = " +
                                    std::to_string(cfg.b) + " must divide M^3 = " +
                                    std::to_string(d.volume()));
}

struct CacheStats {
    std::uint64_t nmisses = 0;
    std::uint64_t naccesses = 0;
};

enum class SurfaceAccess {
    full_stencil,  // probe every stencil location of each center
    center_only,   // probe only the center item, as when packing a buffer
};

CacheStats cache_model(const LayoutMap& layout, StencilSpec stencil, CacheConfig cache);

/// Centers restricted to the border zone, or to one surface when given.
/// Stencil locations falling outside the cube wrap modulo M^3 in flat
/// row-major offset arithmetic.
CacheStats surface_cache_model(const LayoutMap& layout, StencilSpec stencil,
                               CacheConfig cache,
                               std::optional<SurfaceId> surface = std::nullopt,
                               SurfaceAccess access = SurfaceAccess::full_stencil);

}  // namespace sfc3d

#endif  // SFC3D_CACHE_MODEL_HPP
