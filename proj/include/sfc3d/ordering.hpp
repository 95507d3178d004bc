/*
 * Ordering specifications: which traversal path a cube's items follow in
 * memory. Supported kinds are row-major, level-r Morton, Hilbert, and
 * hybrids that split the cube into 2^t-sided blocks with one ordering
 * inside blocks and another across them.
 */

#ifndef SFC3D_ORDERING_HPP
#define SFC3D_ORDERING_HPP

#include <string>

#include "sfc3d/types.hpp"

namespace sfc3d {

enum class OrderKind { row_major, morton, hilbert, hybrid };

/// Ordering used inside or across the blocks of a hybrid spec.
/// `morton` here means fully interleaved bits (the deepest Morton level).
enum class BlockOrder { row_major, morton, hilbert };

struct OrderingSpec {
    OrderKind kind = OrderKind::row_major;
    Dims dims;
    unsigned level = 0;      // Morton recursion depth r, 0 <= r < m
    unsigned block_exp = 0;  // hybrid block side exponent t, 0 < t < m
    BlockOrder inner = BlockOrder::row_major;
    BlockOrder outer = BlockOrder::row_major;

    static OrderingSpec row_major(Dims dims);
    static OrderingSpec morton(Dims dims, unsigned level);
    static OrderingSpec hilbert(Dims dims);
    static OrderingSpec hybrid(Dims dims, BlockOrder inner, BlockOrder outer,
                               unsigned block_exp);

    /// Canonical short name used in CSV output, e.g. "morton-r2" or
    /// "hybrid-rowmajor-morton-t2".
    std::string label() const;
};

const char* to_string(BlockOrder o);

std::uint64_t encode(const OrderingSpec& spec, Coord3 c);
Coord3 decode(const OrderingSpec& spec, std::uint64_t l);

}  // namespace sfc3d

#endif  // SFC3D_ORDERING_HPP
