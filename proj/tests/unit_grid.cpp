#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>

#include "doctest.h"
#include "sfc3d/grid.hpp"
#include "sfc3d/surface.hpp"

using namespace sfc3d;

namespace {

std::uint8_t state_at(const Grid& grid, const LayoutMap& layout, Coord3 c) {
    return grid.cells[layout.rmo_to_path[rmo_of(c, grid.dims)]];
}

std::uint64_t fnv1a(const std::vector<std::uint8_t>& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

TEST_CASE("init_grid density extremes") {
    const auto layout = build_layout(OrderingSpec::morton(Dims::from_exponent(3), 1));
    const auto dead = init_grid(layout, 0.0, 7);
    CHECK(std::count(dead.cells.begin(), dead.cells.end(), 1) == 0);
    const auto alive = init_grid(layout, 1.0, 7);
    CHECK(std::count(alive.cells.begin(), alive.cells.end(), 0) == 0);
    CHECK_THROWS_AS(init_grid(layout, 1.5, 7), std::invalid_argument);
}

TEST_CASE("init_grid assigns states by coordinate, not by layout") {
    const Dims d = Dims::from_exponent(3);
    const auto a = build_layout(OrderingSpec::row_major(d));
    const auto b = build_layout(OrderingSpec::hilbert(d));
    const auto ga = init_grid(a, 0.4, 42);
    const auto gb = init_grid(b, 0.4, 42);
    for (std::uint32_t k = 0; k < d.M; ++k)
        for (std::uint32_t i = 0; i < d.M; ++i)
            for (std::uint32_t j = 0; j < d.M; ++j)
                REQUIRE(state_at(ga, a, Coord3{k, i, j}) == state_at(gb, b, Coord3{k, i, j}));
}

TEST_CASE("all-dead grid stays dead") {
    const auto layout = build_layout(OrderingSpec::hilbert(Dims::from_exponent(3)));
    auto grid = init_grid(layout, 0.0, 1);
    grid = step(grid, layout, RuleSpec::defaults(1));
    CHECK(std::count(grid.cells.begin(), grid.cells.end(), 1) == 0);
}

TEST_CASE("one-slab blinker advances as hand-enumerated") {
    // A 3-cell line at slab 1 of an 8-cube, classic 2,3/3 thresholds over the
    // 26-neighbourhood. In-slab it flips to the perpendicular line; the three
    // cells of the adjacent interior slab 2 that see all three line cells are
    // born as well (slab 0 is frozen border).
    const Dims d = Dims::from_exponent(3);
    const auto layout = build_layout(OrderingSpec::morton(d, 1));
    auto grid = init_grid(layout, 0.0, 0);
    const std::set<std::tuple<unsigned, unsigned, unsigned>> start = {
        {1, 2, 3}, {1, 3, 3}, {1, 4, 3}};
    for (auto [k, i, j] : start)
        grid.cells[layout.rmo_to_path[rmo_of(Coord3{k, i, j}, d)]] = 1;
    grid = step(grid, layout, RuleSpec::defaults(1));
    const std::set<std::tuple<unsigned, unsigned, unsigned>> expected = {
        {1, 3, 2}, {1, 3, 3}, {1, 3, 4}, {2, 3, 2}, {2, 3, 3}, {2, 3, 4}};
    for (std::uint32_t k = 0; k < d.M; ++k)
        for (std::uint32_t i = 0; i < d.M; ++i)
            for (std::uint32_t j = 0; j < d.M; ++j)
                REQUIRE(state_at(grid, layout, Coord3{k, i, j}) ==
                        (expected.count({k, i, j}) ? 1 : 0));
}

TEST_CASE("final state is independent of the traversal layout") {
    for (unsigned m : {3u, 4u}) {
        const Dims d = Dims::from_exponent(m);
        const auto rule = RuleSpec::defaults(1);
        const auto base_layout = build_layout(OrderingSpec::row_major(d));
        auto base = init_grid(base_layout, 0.35, 99);
        for (int it = 0; it < 10; ++it) base = step(base, base_layout, rule);
        for (const auto& spec : {OrderingSpec::morton(d, m - 1), OrderingSpec::hilbert(d)}) {
            CAPTURE(spec.label());
            const auto layout = build_layout(spec);
            auto grid = init_grid(layout, 0.35, 99);
            for (int it = 0; it < 10; ++it) grid = step(grid, layout, rule);
            for (std::uint32_t k = 0; k < d.M; ++k)
                for (std::uint32_t i = 0; i < d.M; ++i)
                    for (std::uint32_t j = 0; j < d.M; ++j)
                        REQUIRE(state_at(grid, layout, Coord3{k, i, j}) ==
                                state_at(base, base_layout, Coord3{k, i, j}));
        }
    }
}

TEST_CASE("border cells never change") {
    const Dims d = Dims::from_exponent(4);
    const auto layout = build_layout(OrderingSpec::hilbert(d));
    const auto rule = RuleSpec::defaults(2);
    const auto initial = init_grid(layout, 0.5, 5);
    auto res = run(initial, layout, rule, 5);
    for (std::uint64_t ipath = 0; ipath < d.volume(); ++ipath) {
        const Coord3 c = coord_of_rmo(layout.path_to_rmo[ipath], d);
        if (in_border_zone(c, d, rule.g))
            REQUIRE(res.grid.cells[ipath] == initial.cells[ipath]);
    }
}

TEST_CASE("run is deterministic and reports positive timings") {
    const auto layout = build_layout(OrderingSpec::morton(Dims::from_exponent(4), 2));
    const auto rule = RuleSpec::defaults(1);
    const auto r1 = run(init_grid(layout, 0.3, 11), layout, rule, 10);
    const auto r2 = run(init_grid(layout, 0.3, 11), layout, rule, 10);
    CHECK(fnv1a(r1.grid.cells) == fnv1a(r2.grid.cells));
    CHECK(r1.grid.generation == 10);
    CHECK(r1.elapsed_s > 0);
    CHECK(r1.per_cell_update_s > 0);
    CHECK_THROWS_AS(run(init_grid(layout, 0.3, 1), layout, rule, 0), std::invalid_argument);
}

TEST_CASE("rule defaults and validation") {
    const auto r1 = RuleSpec::defaults(1);
    CHECK(r1.survive_lo == 2);
    CHECK(r1.survive_hi == 3);
    CHECK(r1.born_lo == 3);
    CHECK(r1.born_hi == 3);
    const auto r2 = RuleSpec::defaults(2);
    CHECK(r2.neighbourhood() == 124);
    CHECK(r2.survive_lo == 9);   // 0.08 * 124
    CHECK(r2.survive_hi == 14);  // 0.12 * 124
    CHECK(r2.born_lo == 13);     // 0.11 * 124
    CHECK(r2.born_lo == r2.born_hi);
    RuleSpec bad{1, 2, 3, 3, 99};
    CHECK_THROWS_AS(require_rule(bad, Dims::from_exponent(3)), std::invalid_argument);
}
