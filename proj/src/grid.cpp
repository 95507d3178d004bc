#include "sfc3d/grid.hpp"

#include <chrono>
#include <cmath>

#include "sfc3d/surface.hpp"

namespace sfc3d {
namespace {

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::vector<std::int32_t> stencil_deltas(Dims d, unsigned g) {
    std::vector<std::int32_t> deltas;
    const std::int32_t sg = static_cast<std::int32_t>(g);
    for (std::int32_t dk = -sg; dk <= sg; ++dk)
        for (std::int32_t di = -sg; di <= sg; ++di)
            for (std::int32_t dj = -sg; dj <= sg; ++dj)
                deltas.push_back((dk << (2 * d.m)) + (di << d.m) + dj);
    return deltas;
}

}  // namespace

RuleSpec RuleSpec::defaults(unsigned g) {
    if (g <= 1) return RuleSpec{1, 2, 3, 3, 3};
    RuleSpec r;
    r.g = g;
    const double v = static_cast<double>(RuleSpec{g}.neighbourhood());
    r.survive_lo = static_cast<std::uint32_t>(0.08 * v);
    r.survive_hi = static_cast<std::uint32_t>(0.12 * v);
    r.born_lo = r.born_hi = static_cast<std::uint32_t>(0.11 * v);
    return r;
}

void require_rule(const RuleSpec& rule, Dims d) {
    require_stencil(StencilSpec{rule.g}, d, "rule");
    const std::uint64_t v = rule.neighbourhood();
    if (rule.survive_lo > rule.survive_hi || rule.born_lo > rule.born_hi ||
        rule.survive_hi > v || rule.born_hi > v)
        throw std::invalid_argument("rule: thresholds must be ordered and at most " +
                                    std::to_string(v));
}

Grid init_grid(const LayoutMap& layout, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0))
        throw std::invalid_argument("init_grid: density must lie in [0, 1]");
    const std::uint64_t volume = layout.dims.volume();
    Grid grid{layout.dims, std::vector<std::uint8_t>(volume), 0};
    if (density == 0.0) return grid;
    if (density == 1.0) {
        std::fill(grid.cells.begin(), grid.cells.end(), std::uint8_t{1});
        return grid;
    }
    // density < 1 here, so this stays strictly below 2^64
    const std::uint64_t cut = static_cast<std::uint64_t>(std::ldexp(density, 64));
    const std::uint32_t* r2p = layout.rmo_to_path.data();
    for (std::uint64_t rmo = 0; rmo < volume; ++rmo)
        grid.cells[r2p[rmo]] =
            mix64(seed + 0x9E3779B97F4A7C15ULL * (rmo + 1)) < cut ? 1 : 0;
    return grid;
}

void step_into(const Grid& in, Grid& out, const LayoutMap& layout, const RuleSpec& rule) {
    const Dims d = in.dims;
    if (!(d == layout.dims) || !(out.dims == d) || out.cells.size() != in.cells.size())
        throw std::invalid_argument("step: grid and layout dims mismatch");
    require_rule(rule, d);
    const auto deltas = stencil_deltas(d, rule.g);
    const std::uint32_t* p2r = layout.path_to_rmo.data();
    const std::uint32_t* r2p = layout.rmo_to_path.data();
    const std::uint8_t* src = in.cells.data();
    std::uint8_t* dst = out.cells.data();
    const std::uint64_t volume = d.volume();
    const unsigned g = rule.g;
    for (std::uint64_t ipath = 0; ipath < volume; ++ipath) {
        const std::uint32_t irmo = p2r[ipath];
        if (in_border_zone(coord_of_rmo(irmo, d), d, g)) {
            dst[ipath] = src[ipath];  // frozen border
            continue;
        }
        std::uint32_t alive = 0;
        for (const std::int32_t delta : deltas)
            alive += src[r2p[irmo + delta]];
        const std::uint8_t self = src[ipath];
        alive -= self;  // deltas include the zero offset; the count excludes it
        dst[ipath] = self ? (alive >= rule.survive_lo && alive <= rule.survive_hi)
                          : (alive >= rule.born_lo && alive <= rule.born_hi);
    }
    out.generation = in.generation + 1;
}

Grid step(const Grid& grid, const LayoutMap& layout, const RuleSpec& rule) {
    Grid next{grid.dims, std::vector<std::uint8_t>(grid.cells.size()), 0};
    step_into(grid, next, layout, rule);
    return next;
}

RunResult run(Grid grid, const LayoutMap& layout, const RuleSpec& rule,
              unsigned iterations) {
    if (iterations < 1) throw std::invalid_argument("run: iterations must be >= 1");
    require_rule(rule, grid.dims);
    Grid scratch{grid.dims, std::vector<std::uint8_t>(grid.cells.size()), 0};
    const auto t0 = std::chrono::steady_clock::now();
    for (unsigned it = 0; it < iterations; ++it) {
        step_into(grid, scratch, layout, rule);
        std::swap(grid, scratch);
    }
    const auto t1 = std::chrono::steady_clock::now();
    RunResult res;
    res.elapsed_s = std::chrono::duration<double>(t1 - t0).count();
    const double interior = std::pow(static_cast<double>(grid.dims.M - 2 * rule.g), 3);
    res.per_cell_update_s = res.elapsed_s / (static_cast<double>(iterations) * interior);
    res.grid = std::move(grid);
    return res;
}

}  // namespace sfc3d
