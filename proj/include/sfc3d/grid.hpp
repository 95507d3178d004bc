/*
 * Generalized 3D Game-of-Life engine (gol3d).
 *
 * Cell states are binary and stored contiguously in the path-index order of
 * the active layout, so the update sweep walks memory linearly while the
 * stencil reads go through the layout maps. Updates are synchronous
 * (double-buffered): the result after any number of steps depends only on
 * the initial state and the rule, never on the traversal order. Cells in
 * the border zone of width g are frozen.
 *
 * The rule generalizes the classic survive/born counts to inclusive
 * intervals over the (2g+1)^3 - 1 non-center neighbour count.
 */

#ifndef SFC3D_GRID_HPP
#define SFC3D_GRID_HPP

#include <vector>

#include "sfc3d/layout.hpp"
#include "sfc3d/stencil.hpp"

namespace sfc3d {

struct RuleSpec {
    unsigned g = 1;
    std::uint32_t survive_lo = 2, survive_hi = 3;
    std::uint32_t born_lo = 3, born_hi = 3;

    /// Classic 2,3/3 rule at g = 1; interval fractions of the neighbour
    /// count at larger g (survive in [0.08 V, 0.12 V], born at 0.11 V for
    /// V = (2g+1)^3 - 1).
    static RuleSpec defaults(unsigned g);

    std::uint64_t neighbourhood() const {
        const std::uint64_t side = 2 * std::uint64_t{g} + 1;
        return side * side * side - 1;
    }
};

void require_rule(const RuleSpec& rule, Dims d);

struct Grid {
    Dims dims;
    std::vector<std::uint8_t> cells;  // indexed by path index of the active layout
    std::uint64_t generation = 0;
};

/// Deterministic pseudo-random fill. The state of a cell depends only on
/// (seed, row-major offset), so two grids built over different layouts hold
/// identical states at every (k,i,j).
Grid init_grid(const LayoutMap& layout, double density, std::uint64_t seed);

/// One synchronous update into a fresh grid.
Grid step(const Grid& grid, const LayoutMap& layout, const RuleSpec& rule);

/// In-place variant used by run(): writes the next generation of `in` into
/// `out` (buffers must have equal dims; they may not alias).
void step_into(const Grid& in, Grid& out, const LayoutMap& layout, const RuleSpec& rule);

struct RunResult {
    Grid grid;
    double elapsed_s = 0;           // wall time for all iterations
    double per_cell_update_s = 0;   // elapsed / (iterations * (M-2g)^3)
};

RunResult run(Grid grid, const LayoutMap& layout, const RuleSpec& rule,
              unsigned iterations);

}  // namespace sfc3d

#endif  // SFC3D_GRID_HPP
