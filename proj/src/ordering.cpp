#include "sfc3d/ordering.hpp"

#include "sfc3d/hilbert.hpp"
#include "sfc3d/morton.hpp"

namespace sfc3d {
namespace {

// Index of c within a block of side 2^e under the given block ordering.
std::uint64_t block_encode(BlockOrder o, Coord3 c, unsigned e) {
    switch (o) {
        case BlockOrder::row_major:
            return rmo_of(c, Dims::from_exponent(e));
        case BlockOrder::morton:
            return interleave3(c.k, c.i, c.j, e);
        case BlockOrder::hilbert:
            return hilbert_encode(c, Dims::from_exponent(e));
    }
    throw std::invalid_argument("block_encode: unknown block ordering");
}

Coord3 block_decode(BlockOrder o, std::uint64_t l, unsigned e) {
    switch (o) {
        case BlockOrder::row_major:
            return coord_of_rmo(l, Dims::from_exponent(e));
        case BlockOrder::morton: {
            Coord3 c;
            deinterleave3(l, e, c.k, c.i, c.j);
            return c;
        }
        case BlockOrder::hilbert:
            return hilbert_decode(l, Dims::from_exponent(e));
    }
    throw std::invalid_argument("block_decode: unknown block ordering");
}

void require_block_order(BlockOrder o, unsigned e, const char* role) {
    if (o == BlockOrder::hilbert && e < 2)
        throw unsupported_ordering(std::string("OrderingSpec: Hilbert ") + role +
                                   " ordering needs a block exponent of at least 2, got " +
                                   std::to_string(e));
}

}  // namespace

const char* to_string(BlockOrder o) {
    switch (o) {
        case BlockOrder::row_major: return "rowmajor";
        case BlockOrder::morton: return "morton";
        case BlockOrder::hilbert: return "hilbert";
    }
    return "?";
}

OrderingSpec OrderingSpec::row_major(Dims dims) {
    return OrderingSpec{OrderKind::row_major, dims};
}

OrderingSpec OrderingSpec::morton(Dims dims, unsigned level) {
    if (level >= dims.m && !(level == 0 && dims.m == 0))
        throw std::invalid_argument("OrderingSpec: Morton level " + std::to_string(level) +
                                    " out of range, need 0 <= r < m = " + std::to_string(dims.m));
    OrderingSpec s{OrderKind::morton, dims};
    s.level = level;
    return s;
}

OrderingSpec OrderingSpec::hilbert(Dims dims) {
    if (dims.m < 2)
        throw unsupported_ordering("OrderingSpec: Hilbert ordering needs m >= 2, got m = " +
                                   std::to_string(dims.m));
    return OrderingSpec{OrderKind::hilbert, dims};
}

OrderingSpec OrderingSpec::hybrid(Dims dims, BlockOrder inner, BlockOrder outer,
                                  unsigned block_exp) {
    if (block_exp == 0 || block_exp >= dims.m)
        throw std::invalid_argument("OrderingSpec: hybrid block exponent " +
                                    std::to_string(block_exp) + " out of range, need 0 < t < m = " +
                                    std::to_string(dims.m));
    require_block_order(inner, block_exp, "inner");
    require_block_order(outer, dims.m - block_exp, "outer");
    OrderingSpec s{OrderKind::hybrid, dims};
    s.block_exp = block_exp;
    s.inner = inner;
    s.outer = outer;
    return s;
}

std::string OrderingSpec::label() const {
    switch (kind) {
        case OrderKind::row_major: return "rowmajor";
        case OrderKind::morton: return "morton-r" + std::to_string(level);
        case OrderKind::hilbert: return "hilbert";
        case OrderKind::hybrid:
            return std::string("hybrid-") + to_string(inner) + "-" + to_string(outer) + "-t" +
                   std::to_string(block_exp);
    }
    return "?";
}

std::uint64_t encode(const OrderingSpec& spec, Coord3 c) {
    require_coord(c, spec.dims, "encode");
    switch (spec.kind) {
        case OrderKind::row_major:
            return rmo_of(c, spec.dims);
        case OrderKind::morton:
            return morton_encode(c, spec.dims, spec.level);
        case OrderKind::hilbert:
            return hilbert_encode(c, spec.dims);
        case OrderKind::hybrid: {
            const unsigned t = spec.block_exp;
            const std::uint32_t local_mask = (1u << t) - 1;
            const Coord3 block{c.k >> t, c.i >> t, c.j >> t};
            const Coord3 local{c.k & local_mask, c.i & local_mask, c.j & local_mask};
            return (block_encode(spec.outer, block, spec.dims.m - t) << (3 * t)) |
                   block_encode(spec.inner, local, t);
        }
    }
    throw std::invalid_argument("encode: unknown ordering kind");
}

Coord3 decode(const OrderingSpec& spec, std::uint64_t l) {
    require_index(l, spec.dims, "decode");
    switch (spec.kind) {
        case OrderKind::row_major:
            return coord_of_rmo(l, spec.dims);
        case OrderKind::morton:
            return morton_decode(l, spec.dims, spec.level);
        case OrderKind::hilbert:
            return hilbert_decode(l, spec.dims);
        case OrderKind::hybrid: {
            const unsigned t = spec.block_exp;
            const Coord3 block = block_decode(spec.outer, l >> (3 * t), spec.dims.m - t);
            const Coord3 local =
                block_decode(spec.inner, l & ((std::uint64_t{1} << (3 * t)) - 1), t);
            return Coord3{(block.k << t) | local.k, (block.i << t) | local.i,
                          (block.j << t) | local.j};
        }
    }
    throw std::invalid_argument("decode: unknown ordering kind");
}

}  // namespace sfc3d
