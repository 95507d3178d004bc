#include "sfc3d/histogram.hpp"

#include <algorithm>
#include <unordered_map>

namespace sfc3d {
namespace {

// Offsets lie in (-M^3, M^3); a dense counter array is used while it stays
// below ~512 MiB, otherwise a hash map.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 26;

std::vector<std::int64_t> stencil_deltas(Dims d, unsigned g) {
    std::vector<std::int64_t> deltas;
    const unsigned side = 2 * g + 1;
    deltas.reserve(std::uint64_t{side} * side * side);
    const std::int64_t sg = g;
    for (std::int64_t dk = -sg; dk <= sg; ++dk)
        for (std::int64_t di = -sg; di <= sg; ++di)
            for (std::int64_t dj = -sg; dj <= sg; ++dj)
                deltas.push_back((dk << (2 * d.m)) + (di << d.m) + dj);
    return deltas;
}

}  // namespace

OffsetHistogram offset_histogram(const LayoutMap& layout, StencilSpec stencil,
                                 OffsetFilter filter) {
    const Dims d = layout.dims;
    require_stencil(stencil, d, "offset_histogram");
    const unsigned g = stencil.g;
    const std::uint32_t lo = g, hi = d.M - g;
    const auto deltas = stencil_deltas(d, g);
    const std::uint32_t* r2p = layout.rmo_to_path.data();

    const bool dense = d.volume() <= kDenseLimit;
    std::vector<std::uint64_t> dense_counts;
    std::unordered_map<std::int64_t, std::uint64_t> sparse_counts;
    const std::int64_t bias = static_cast<std::int64_t>(d.volume()) - 1;
    if (dense)
        dense_counts.assign(2 * d.volume() - 1, 0);
    else
        sparse_counts.reserve(1u << 16);

    for (std::uint32_t k = lo; k < hi; ++k)
        for (std::uint32_t i = lo; i < hi; ++i)
            for (std::uint32_t j = lo; j < hi; ++j) {
                const std::uint64_t center_rmo = rmo_of(Coord3{k, i, j}, d);
                const std::int64_t center_path = r2p[center_rmo];
                if (filter == OffsetFilter::interior_pairs) {
                    // keep only neighbours that are themselves interior
                    const std::int64_t sg = g;
                    for (std::int64_t dk = -sg; dk <= sg; ++dk) {
                        if (k + dk < lo || k + dk >= hi) continue;
                        for (std::int64_t di = -sg; di <= sg; ++di) {
                            if (i + di < lo || i + di >= hi) continue;
                            for (std::int64_t dj = -sg; dj <= sg; ++dj) {
                                if (j + dj < lo || j + dj >= hi) continue;
                                const std::uint64_t nrmo =
                                    rmo_of(Coord3{static_cast<std::uint32_t>(k + dk),
                                                  static_cast<std::uint32_t>(i + di),
                                                  static_cast<std::uint32_t>(j + dj)},
                                           d);
                                const std::int64_t x =
                                    static_cast<std::int64_t>(r2p[nrmo]) - center_path;
                                if (dense)
                                    ++dense_counts[static_cast<std::uint64_t>(x + bias)];
                                else
                                    ++sparse_counts[x];
                            }
                        }
                    }
                } else {
                    for (const std::int64_t delta : deltas) {
                        const std::int64_t x =
                            static_cast<std::int64_t>(
                                r2p[static_cast<std::uint64_t>(
                                    static_cast<std::int64_t>(center_rmo) + delta)]) -
                            center_path;
                        if (dense)
                            ++dense_counts[static_cast<std::uint64_t>(x + bias)];
                        else
                            ++sparse_counts[x];
                    }
                }
            }

    OffsetHistogram h;
    if (dense) {
        for (std::uint64_t slot = 0; slot < dense_counts.size(); ++slot)
            if (dense_counts[slot] != 0)
                h.bins.emplace_back(static_cast<std::int64_t>(slot) - bias,
                                    dense_counts[slot]);
    } else {
        h.bins.assign(sparse_counts.begin(), sparse_counts.end());
        std::sort(h.bins.begin(), h.bins.end());
    }
    return h;
}

}  // namespace sfc3d
