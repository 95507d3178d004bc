#include "sfc3d/halo.hpp"

#include <chrono>
#include <cmath>

namespace sfc3d {
namespace {

void require_lists(const SurfaceIndexLists& lists, const Grid& grid, const char* who) {
    if (!(lists.dims == grid.dims))
        throw std::invalid_argument(std::string(who) + ": list and grid dims mismatch");
}

}  // namespace

SurfaceIndexLists build_surface_lists(const LayoutMap& layout, unsigned g) {
    const Dims d = layout.dims;
    require_stencil(StencilSpec{g}, d, "build_surface_lists");
    SurfaceIndexLists out;
    out.dims = d;
    out.g = g;
    const std::uint64_t per_surface = std::uint64_t{g} * d.M * d.M;
    for (auto& list : out.lists) list.reserve(per_surface);
    const std::uint32_t* p2r = layout.path_to_rmo.data();
    const std::uint64_t volume = d.volume();
    for (std::uint64_t ipath = 0; ipath < volume; ++ipath) {
        const Coord3 c = coord_of_rmo(p2r[ipath], d);
        for (SurfaceId s : kAllSurfaces)
            if (surface_contains(s, c, d, g))
                out.lists[static_cast<std::size_t>(s)].push_back(
                    static_cast<std::uint32_t>(ipath));
    }
    return out;
}

void pack_surface(const Grid& grid, const SurfaceIndexLists& lists, SurfaceId s,
                  HaloBuffer& buffer) {
    require_lists(lists, grid, "pack_surface");
    const auto& list = lists[s];
    buffer.resize(list.size());
    const std::uint8_t* cells = grid.cells.data();
    std::uint8_t* out = buffer.data();
    for (std::size_t t = 0; t < list.size(); ++t) out[t] = cells[list[t]];
}

HaloBuffer pack_surface(const Grid& grid, const SurfaceIndexLists& lists, SurfaceId s) {
    HaloBuffer buffer;
    pack_surface(grid, lists, s, buffer);
    return buffer;
}

void unpack_surface(const HaloBuffer& buffer, const SurfaceIndexLists& lists, SurfaceId s,
                    Grid& grid) {
    require_lists(lists, grid, "unpack_surface");
    const auto& list = lists[s];
    if (buffer.size() != list.size())
        throw std::invalid_argument("unpack_surface: buffer length " +
                                    std::to_string(buffer.size()) + " does not match list length " +
                                    std::to_string(list.size()));
    std::uint8_t* cells = grid.cells.data();
    for (std::size_t t = 0; t < list.size(); ++t) cells[list[t]] = buffer[t];
}

std::array<PackTiming, 6> bench_pack(const Grid& grid, const SurfaceIndexLists& lists,
                                     unsigned repeats) {
    if (repeats < 1) throw std::invalid_argument("bench_pack: repeats must be >= 1");
    require_lists(lists, grid, "bench_pack");
    std::array<PackTiming, 6> out;
    HaloBuffer buffer;
    std::vector<double> samples(repeats);
    for (std::size_t si = 0; si < kAllSurfaces.size(); ++si) {
        const SurfaceId s = kAllSurfaces[si];
        buffer.resize(lists[s].size());  // allocation outside the timed region
        for (unsigned rep = 0; rep < repeats; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            pack_surface(grid, lists, s, buffer);
            const auto t1 = std::chrono::steady_clock::now();
            samples[rep] = std::chrono::duration<double>(t1 - t0).count();
        }
        double mean = 0;
        for (double v : samples) mean += v;
        mean /= repeats;
        double var = 0;
        for (double v : samples) var += (v - mean) * (v - mean);
        out[si] = PackTiming{s, mean,
                             repeats > 1 ? std::sqrt(var / (repeats - 1)) : 0.0};
    }
    return out;
}

}  // namespace sfc3d
