/*
 * State-machine implementation of the 3D Hilbert-type curve.
 *
 * The curve is generated from two octant-level patterns. Each pattern lists
 * the order in which the eight octants of a cube are visited (a Hamiltonian
 * path on the octant graph) and, per visited octant, the axis permutation
 * and reflection applied to the sub-curve inside it:
 *
 *   - the "diagonal" pattern enters a cube at corner (0,0,0) and leaves at
 *     the opposite corner (1,1,1); it is used at the top level so the whole
 *     curve runs corner to opposite corner;
 *   - the "edge" pattern is a conventional Hilbert block whose entry and
 *     exit corners differ along a single axis; all but one sub-block of the
 *     diagonal pattern are edge blocks, and edge blocks expand into edge
 *     blocks only.
 *
 * Adjacent sub-curves meet across octant faces at unit distance, which makes
 * the whole path continuous at every refinement level. The reachable set of
 * (pattern, orientation) pairs is closed and small, so the per-level
 * transition tables are composed once at startup and encode/decode walk them
 * with three table lookups per level.
 *
 * Octant numbering: bit 2 = k, bit 1 = i, bit 0 = j.
 */

#include "sfc3d/hilbert.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace sfc3d {
namespace {

// Axis permutation plus per-axis reflection, acting on octant corners.
// perm[a] names the source axis feeding output axis a (0 = k, 1 = i, 2 = j);
// flip has the k reflection at bit 2, i at bit 1, j at bit 0.
struct Orient {
    std::array<std::uint8_t, 3> perm;
    std::uint8_t flip;

    std::uint8_t corner(std::uint8_t c) const {
        std::uint8_t out = flip;
        for (int a = 0; a < 3; ++a)
            out ^= static_cast<std::uint8_t>(((c >> (2 - perm[a])) & 1) << (2 - a));
        return out;
    }

    Orient then(const Orient& child) const {
        Orient r{};
        for (int a = 0; a < 3; ++a) {
            r.perm[a] = child.perm[perm[a]];
            r.flip |= static_cast<std::uint8_t>(
                ((((flip >> (2 - a)) & 1) ^ ((child.flip >> (2 - perm[a])) & 1)) << (2 - a)));
        }
        return r;
    }

    friend auto operator<=>(const Orient&, const Orient&) = default;
};

enum Pattern : std::uint8_t { kDiagonal = 0, kEdge = 1 };

struct Rule {
    std::array<std::uint8_t, 8> path;     // octant visited at each slot
    std::array<Pattern, 8> child;         // pattern used inside that octant
    std::array<Orient, 8> orient;         // orientation of the sub-curve
};

constexpr Rule kRules[2] = {
    // diagonal: visits octants 0,4,6,2,3,1,5,7; the last octant recurses
    // diagonally again, all others are edge blocks
    {{0, 4, 6, 2, 3, 1, 5, 7},
     {kEdge, kEdge, kEdge, kEdge, kEdge, kEdge, kEdge, kDiagonal},
     {Orient{{2, 0, 1}, 0}, Orient{{1, 2, 0}, 0}, Orient{{0, 1, 2}, 0},
      Orient{{1, 2, 0}, 5}, Orient{{1, 2, 0}, 6}, Orient{{0, 1, 2}, 6},
      Orient{{0, 1, 2}, 3}, Orient{{0, 1, 2}, 0}}},
    // edge: visits octants 0,4,6,2,3,7,5,1, entering at corner 0 and
    // exiting at corner 1
    {{0, 4, 6, 2, 3, 7, 5, 1},
     {kEdge, kEdge, kEdge, kEdge, kEdge, kEdge, kEdge, kEdge},
     {Orient{{2, 0, 1}, 0}, Orient{{1, 2, 0}, 0}, Orient{{0, 1, 2}, 0},
      Orient{{1, 2, 0}, 5}, Orient{{0, 1, 2}, 6}, Orient{{1, 2, 0}, 3},
      Orient{{1, 2, 0}, 3}, Orient{{2, 0, 1}, 5}}},
};

// Flattened transition tables over the closed set of (pattern, orientation)
// states reached from the top-level diagonal state.
struct Tables {
    struct State {
        std::array<std::uint8_t, 8> octant_of_slot;
        std::array<std::uint8_t, 8> slot_of_octant;
        std::array<std::uint16_t, 8> child_of_slot;
    };
    std::vector<State> states;

    Tables() {
        std::map<std::pair<Pattern, Orient>, std::uint16_t> ids;
        std::vector<std::pair<Pattern, Orient>> todo;
        auto intern = [&](Pattern p, const Orient& o) {
            auto [it, fresh] = ids.try_emplace({p, o},
                                               static_cast<std::uint16_t>(ids.size()));
            if (fresh) todo.push_back({p, o});
            return it->second;
        };
        intern(kDiagonal, Orient{{0, 1, 2}, 0});
        for (std::size_t s = 0; s < todo.size(); ++s) {
            const auto [pattern, orient] = todo[s];
            const Rule& rule = kRules[pattern];
            State st{};
            for (int t = 0; t < 8; ++t) {
                const std::uint8_t o = orient.corner(rule.path[t]);
                st.octant_of_slot[t] = o;
                st.slot_of_octant[o] = static_cast<std::uint8_t>(t);
                st.child_of_slot[t] = intern(rule.child[t], orient.then(rule.orient[t]));
            }
            states.push_back(st);
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

inline void require_hilbert_dims(Dims dims, const char* who) {
    if (dims.m < 2)
        throw unsupported_ordering(std::string(who) + ": Hilbert ordering needs M = 2^m with m >= 2, got m = " +
                                   std::to_string(dims.m));
}

}  // namespace

std::uint64_t hilbert_encode(Coord3 c, Dims dims) {
    require_hilbert_dims(dims, "hilbert_encode");
    require_coord(c, dims, "hilbert_encode");
    const auto& states = tables().states;
    std::uint16_t state = 0;
    std::uint64_t index = 0;
    for (int lev = static_cast<int>(dims.m) - 1; lev >= 0; --lev) {
        const std::uint8_t octant =
            static_cast<std::uint8_t>((((c.k >> lev) & 1) << 2) | (((c.i >> lev) & 1) << 1) |
                                      ((c.j >> lev) & 1));
        const auto& st = states[state];
        const std::uint8_t slot = st.slot_of_octant[octant];
        index = (index << 3) | slot;
        state = st.child_of_slot[slot];
    }
    return index;
}

Coord3 hilbert_decode(std::uint64_t l, Dims dims) {
    require_hilbert_dims(dims, "hilbert_decode");
    require_index(l, dims, "hilbert_decode");
    const auto& states = tables().states;
    std::uint16_t state = 0;
    Coord3 c{};
    for (int lev = static_cast<int>(dims.m) - 1; lev >= 0; --lev) {
        const auto& st = states[state];
        const std::uint8_t slot = (l >> (3 * lev)) & 7;
        const std::uint8_t octant = st.octant_of_slot[slot];
        c.k |= ((octant >> 2) & 1u) << lev;
        c.i |= ((octant >> 1) & 1u) << lev;
        c.j |= (octant & 1u) << lev;
        state = st.child_of_slot[slot];
    }
    return c;
}

}  // namespace sfc3d
