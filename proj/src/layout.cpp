#include "sfc3d/layout.hpp"

#include <new>

#include "sfc3d/hilbert.hpp"
#include "sfc3d/kernels.hpp"

namespace sfc3d {
namespace {

// Fills fwd[rmo] = path index for every row-major offset of a cube with
// side 2^e under a block ordering (side small enough that indices fit
// 32 bits; callers have validated e).
void fill_block_order(std::vector<std::uint32_t>& fwd, BlockOrder o, unsigned e) {
    const Dims d = Dims::from_exponent(e);
    switch (o) {
        case BlockOrder::row_major:
            for (std::uint64_t rmo = 0; rmo < d.volume(); ++rmo)
                fwd[rmo] = static_cast<std::uint32_t>(rmo);
            return;
        case BlockOrder::morton:
            if (e == 0)
                fwd[0] = 0;
            else
                kernels::morton_fill()(fwd.data(), e, e - 1);
            return;
        case BlockOrder::hilbert: {
            std::uint64_t rmo = 0;
            for (std::uint32_t k = 0; k < d.M; ++k)
                for (std::uint32_t i = 0; i < d.M; ++i)
                    for (std::uint32_t j = 0; j < d.M; ++j, ++rmo)
                        fwd[rmo] = static_cast<std::uint32_t>(
                            hilbert_encode(Coord3{k, i, j}, d));
            return;
        }
    }
}

void fill_forward(std::vector<std::uint32_t>& fwd, const OrderingSpec& spec) {
    const Dims d = spec.dims;
    switch (spec.kind) {
        case OrderKind::row_major:
            for (std::uint64_t rmo = 0; rmo < d.volume(); ++rmo)
                fwd[rmo] = static_cast<std::uint32_t>(rmo);
            return;
        case OrderKind::morton:
            if (d.m == 0)
                fwd[0] = 0;
            else
                kernels::morton_fill()(fwd.data(), d.m, spec.level);
            return;
        case OrderKind::hilbert:
            fill_block_order(fwd, BlockOrder::hilbert, d.m);
            return;
        case OrderKind::hybrid: {
            // Compose per-block tables: path = outer(block) * T^3 + inner(local).
            const unsigned t = spec.block_exp;
            const unsigned e_out = d.m - t;
            std::vector<std::uint32_t> inner_tbl(std::uint64_t{1} << (3 * t));
            std::vector<std::uint32_t> outer_tbl(std::uint64_t{1} << (3 * e_out));
            fill_block_order(inner_tbl, spec.inner, t);
            fill_block_order(outer_tbl, spec.outer, e_out);
            const std::uint32_t local_mask = (1u << t) - 1;
            std::uint64_t rmo = 0;
            for (std::uint32_t k = 0; k < d.M; ++k) {
                const std::uint32_t kb = (k >> t) << (2 * e_out);
                const std::uint32_t kl = (k & local_mask) << (2 * t);
                for (std::uint32_t i = 0; i < d.M; ++i) {
                    const std::uint32_t kib = kb | ((i >> t) << e_out);
                    const std::uint32_t kil = kl | ((i & local_mask) << t);
                    for (std::uint32_t j = 0; j < d.M; ++j, ++rmo)
                        fwd[rmo] = (outer_tbl[kib | (j >> t)] << (3 * t)) |
                                   inner_tbl[kil | (j & local_mask)];
                }
            }
            return;
        }
    }
}

}  // namespace

LayoutMap build_layout(const OrderingSpec& spec) {
    if (spec.dims.m > kMaxLayoutExponent)
        throw std::invalid_argument("build_layout: m = " + std::to_string(spec.dims.m) +
                                    " exceeds the map limit of m = " +
                                    std::to_string(kMaxLayoutExponent));
    LayoutMap map;
    map.dims = spec.dims;
    const std::uint64_t volume = spec.dims.volume();
    try {
        map.rmo_to_path.resize(volume);
        map.path_to_rmo.resize(volume);
    } catch (const std::bad_alloc&) {
        throw std::runtime_error("build_layout: cannot allocate 2 x " + std::to_string(volume) +
                                 " map entries");
    }
    fill_forward(map.rmo_to_path, spec);
    for (std::uint64_t rmo = 0; rmo < volume; ++rmo)
        map.path_to_rmo[map.rmo_to_path[rmo]] = static_cast<std::uint32_t>(rmo);
    return map;
}

}  // namespace sfc3d
