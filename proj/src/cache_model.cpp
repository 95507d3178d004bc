#include "sfc3d/cache_model.hpp"

#include <list>
#include <unordered_map>

namespace sfc3d {
namespace {

// Fully associative LRU set of line numbers. touch() returns true on hit;
// on a miss the line is inserted, evicting the least recently used entry
// when the set is full. Hits refresh recency.
class LruSet {
  public:
    explicit LruSet(std::uint32_t capacity) : capacity_(capacity) {
        index_.reserve(2 * capacity);
    }

    bool touch(std::uint64_t line) {
        auto it = index_.find(line);
        if (it != index_.end()) {
            order_.splice(order_.begin(), order_, it->second);
            return true;
        }
        if (order_.size() == capacity_) {
            index_.erase(order_.back());
            order_.pop_back();
        }
        order_.push_front(line);
        index_[line] = order_.begin();
        return false;
    }

  private:
    std::uint32_t capacity_;
    std::list<std::uint64_t> order_;  // front = most recently used
    std::unordered_map<std::uint64_t, std::list<std::uint64_t>::iterator> index_;
};

std::vector<std::int64_t> stencil_deltas(Dims d, unsigned g) {
    std::vector<std::int64_t> deltas;
    const std::int64_t sg = g;
    for (std::int64_t dk = -sg; dk <= sg; ++dk)
        for (std::int64_t di = -sg; di <= sg; ++di)
            for (std::int64_t dj = -sg; dj <= sg; ++dj)
                deltas.push_back((dk << (2 * d.m)) + (di << d.m) + dj);
    return deltas;
}

}  // namespace

CacheStats cache_model(const LayoutMap& layout, StencilSpec stencil, CacheConfig cache) {
    const Dims d = layout.dims;
    require_stencil(stencil, d, "cache_model");
    require_cache(cache, d, "cache_model");
    const auto deltas = stencil_deltas(d, stencil.g);
    const std::uint32_t* p2r = layout.path_to_rmo.data();
    const std::uint32_t* r2p = layout.rmo_to_path.data();
    const std::uint64_t volume = d.volume();
    LruSet lru(cache.c);
    CacheStats stats;
    for (std::uint64_t ipath = 0; ipath < volume; ++ipath) {
        const std::uint64_t irmo = p2r[ipath];
        if (in_border_zone(coord_of_rmo(irmo, d), d, stencil.g)) continue;
        for (const std::int64_t delta : deltas) {
            const std::uint64_t jrmo =
                static_cast<std::uint64_t>(static_cast<std::int64_t>(irmo) + delta);
            const std::uint64_t jpath = r2p[jrmo];
            ++stats.naccesses;
            if (!lru.touch(jpath / cache.b)) ++stats.nmisses;
        }
    }
    return stats;
}

CacheStats surface_cache_model(const LayoutMap& layout, StencilSpec stencil,
                               CacheConfig cache, std::optional<SurfaceId> surface,
                               SurfaceAccess access) {
    const Dims d = layout.dims;
    require_stencil(stencil, d, "surface_cache_model");
    require_cache(cache, d, "surface_cache_model");
    const auto deltas = stencil_deltas(d, stencil.g);
    const std::uint32_t* p2r = layout.path_to_rmo.data();
    const std::uint32_t* r2p = layout.rmo_to_path.data();
    const std::uint64_t volume = d.volume();
    const std::uint64_t wrap_mask = volume - 1;  // M^3 is a power of two
    LruSet lru(cache.c);
    CacheStats stats;
    for (std::uint64_t ipath = 0; ipath < volume; ++ipath) {
        const std::uint64_t irmo = p2r[ipath];
        const Coord3 c = coord_of_rmo(irmo, d);
        const bool selected = surface ? surface_contains(*surface, c, d, stencil.g)
                                      : in_border_zone(c, d, stencil.g);
        if (!selected) continue;
        if (access == SurfaceAccess::center_only) {
            ++stats.naccesses;
            if (!lru.touch(ipath / cache.b)) ++stats.nmisses;
            continue;
        }
        for (const std::int64_t delta : deltas) {
            const std::uint64_t jrmo =
                static_cast<std::uint64_t>(static_cast<std::int64_t>(irmo) + delta) & wrap_mask;
            const std::uint64_t jpath = r2p[jrmo];
            ++stats.naccesses;
            if (!lru.touch(jpath / cache.b)) ++stats.nmisses;
        }
    }
    return stats;
}

}  // namespace sfc3d
