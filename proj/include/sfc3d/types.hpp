/*
 * Core domain types for cubic M x M x M data volumes, M = 2^m.
 *
 * Locations are (k, i, j) with k the slab index, i the row index and j the
 * column index; the row-major offset of a location is k*M^2 + i*M + j.
 * A "path index" is a location's position along a chosen traversal order
 * (row-major, Morton, Hilbert or a hybrid of those).
 */

#ifndef SFC3D_TYPES_HPP
#define SFC3D_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sfc3d {

/// Largest supported side exponent: path indices occupy 3m bits and must
/// fit a 64-bit integer with headroom.
inline constexpr unsigned kMaxExponent = 20;

struct Dims {
    unsigned m = 0;     // side exponent
    std::uint32_t M = 1;  // side length in items, M == 2^m

    static Dims from_exponent(unsigned m) {
        if (m > kMaxExponent)
            throw std::invalid_argument("Dims: side exponent m = " + std::to_string(m) +
                                        " exceeds maximum " + std::to_string(kMaxExponent));
        return Dims{m, std::uint32_t{1} << m};
    }

    std::uint64_t volume() const { return std::uint64_t{M} * M * M; }

    friend bool operator==(const Dims&, const Dims&) = default;
};

struct Coord3 {
    std::uint32_t k = 0;  // slab
    std::uint32_t i = 0;  // row
    std::uint32_t j = 0;  // column

    friend bool operator==(const Coord3&, const Coord3&) = default;
};

/// Thrown when an ordering cannot be formed at all for the given dims
/// (e.g. Hilbert needs M = 2^m with m >= 2).
struct unsupported_ordering : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline bool contains(Dims d, Coord3 c) {
    return c.k < d.M && c.i < d.M && c.j < d.M;
}

inline std::uint64_t rmo_of(Coord3 c, Dims d) {
    return (std::uint64_t{c.k} << (2 * d.m)) | (std::uint64_t{c.i} << d.m) | c.j;
}

inline Coord3 coord_of_rmo(std::uint64_t rmo, Dims d) {
    const std::uint32_t mask = d.M - 1;
    return Coord3{static_cast<std::uint32_t>(rmo >> (2 * d.m)),
                  static_cast<std::uint32_t>(rmo >> d.m) & mask,
                  static_cast<std::uint32_t>(rmo) & mask};
}

inline void require_coord(Coord3 c, Dims d, const char* who) {
    if (!contains(d, c))
        throw std::invalid_argument(std::string(who) + ": coordinate out of range for M = " +
                                    std::to_string(d.M));
}

inline void require_index(std::uint64_t l, Dims d, const char* who) {
    if (l >= d.volume())
        throw std::invalid_argument(std::string(who) + ": index " + std::to_string(l) +
                                    " out of range for M^3 = " + std::to_string(d.volume()));
}

}  // namespace sfc3d

#endif  // SFC3D_TYPES_HPP
