#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "doctest.h"
#include "sfc3d/halo.hpp"

using namespace sfc3d;

namespace {

std::vector<OrderingSpec> halo_specs(unsigned m) {
    const Dims d = Dims::from_exponent(m);
    std::vector<OrderingSpec> specs = {OrderingSpec::row_major(d),
                                       OrderingSpec::morton(d, m - 1)};
    if (m >= 2) specs.push_back(OrderingSpec::hilbert(d));
    return specs;
}

}  // namespace

TEST_CASE("every surface list has g*M^2 strictly increasing entries") {
    for (unsigned m : {2u, 3u, 4u, 5u}) {
        const Dims dims = Dims::from_exponent(m);
        for (unsigned g : {1u, 2u}) {
            if (2 * g >= dims.M) continue;
            for (const auto& spec : halo_specs(m)) {
                CAPTURE(spec.label());
                const auto lists = build_surface_lists(build_layout(spec), g);
                for (SurfaceId s : kAllSurfaces) {
                    const auto& list = lists[s];
                    REQUIRE(list.size() == std::uint64_t{g} * dims.M * dims.M);
                    REQUIRE(std::is_sorted(list.begin(), list.end()));
                    REQUIRE(std::adjacent_find(list.begin(), list.end()) == list.end());
                }
            }
        }
    }
}

TEST_CASE("decoded list coordinates match the surface definitions") {
    const Dims d = Dims::from_exponent(3);
    for (unsigned g : {1u, 2u}) {
        for (const auto& spec : halo_specs(3)) {
            CAPTURE(spec.label());
            const auto layout = build_layout(spec);
            const auto lists = build_surface_lists(layout, g);
            for (SurfaceId s : kAllSurfaces) {
                std::set<std::uint64_t> got;
                for (std::uint32_t p : lists[s]) {
                    const Coord3 c = coord_of_rmo(layout.path_to_rmo[p], d);
                    REQUIRE(surface_contains(s, c, d, g));
                    got.insert(rmo_of(c, d));
                }
                std::set<std::uint64_t> expected;
                for (std::uint64_t rmo = 0; rmo < d.volume(); ++rmo)
                    if (surface_contains(s, coord_of_rmo(rmo, d), d, g)) expected.insert(rmo);
                REQUIRE(got == expected);
            }
        }
    }
}

TEST_CASE("the six lists cover exactly the border zone at g = 1") {
    const Dims d = Dims::from_exponent(2);
    const auto layout = build_layout(OrderingSpec::hilbert(d));
    const auto lists = build_surface_lists(layout, 1);
    std::set<std::uint32_t> union_of_lists;
    for (SurfaceId s : kAllSurfaces)
        union_of_lists.insert(lists[s].begin(), lists[s].end());
    std::set<std::uint32_t> border;
    for (std::uint64_t p = 0; p < d.volume(); ++p)
        if (in_border_zone(coord_of_rmo(layout.path_to_rmo[p], d), d, 1))
            border.insert(static_cast<std::uint32_t>(p));
    CHECK(union_of_lists == border);
}

TEST_CASE("row-major front surface is the first M^2 path indices") {
    const Dims d = Dims::from_exponent(2);
    const auto layout = build_layout(OrderingSpec::row_major(d));
    const auto lists = build_surface_lists(layout, 1);
    const auto& rc = lists[SurfaceId::rc_front];
    REQUIRE(rc.size() == 16);
    for (std::uint32_t t = 0; t < 16; ++t) CHECK(rc[t] == t);

    const auto grid = init_grid(layout, 0.5, 3);
    const auto buf = pack_surface(grid, lists, SurfaceId::rc_front);
    for (std::uint32_t t = 0; t < 16; ++t) CHECK(buf[t] == grid.cells[t]);
}

TEST_CASE("pack and unpack are exact inverses") {
    for (const auto& spec : halo_specs(3)) {
        CAPTURE(spec.label());
        const auto layout = build_layout(spec);
        const auto lists = build_surface_lists(layout, 2);
        const auto grid = init_grid(layout, 0.5, 17);
        for (SurfaceId s : kAllSurfaces) {
            auto copy = grid;
            const auto buf = pack_surface(copy, lists, s);
            REQUIRE(buf.size() == lists[s].size());
            unpack_surface(buf, lists, s, copy);
            REQUIRE(copy.cells == grid.cells);
        }
    }
}

TEST_CASE("packing an all-dead grid yields a zero buffer") {
    const auto layout = build_layout(OrderingSpec::morton(Dims::from_exponent(3), 1));
    const auto lists = build_surface_lists(layout, 1);
    const auto grid = init_grid(layout, 0.0, 0);
    const auto buf = pack_surface(grid, lists, SurfaceId::sr_back);
    CHECK(std::count(buf.begin(), buf.end(), 0) == std::int64_t(buf.size()));
}

TEST_CASE("unpacking a zero buffer clears exactly the surface cells") {
    const Dims d = Dims::from_exponent(3);
    const auto layout = build_layout(OrderingSpec::hilbert(d));
    const auto lists = build_surface_lists(layout, 1);
    const auto full = init_grid(layout, 1.0, 0);
    auto grid = full;
    const HaloBuffer zeros(lists[SurfaceId::cs_back].size(), 0);
    unpack_surface(zeros, lists, SurfaceId::cs_back, grid);
    for (std::uint64_t p = 0; p < d.volume(); ++p) {
        const Coord3 c = coord_of_rmo(layout.path_to_rmo[p], d);
        CHECK(grid.cells[p] == (surface_contains(SurfaceId::cs_back, c, d, 1) ? 0 : 1));
    }
}

TEST_CASE("packed content is layout-independent by coordinate") {
    const Dims d = Dims::from_exponent(3);
    const auto la = build_layout(OrderingSpec::row_major(d));
    const auto lb = build_layout(OrderingSpec::hilbert(d));
    const auto lists_a = build_surface_lists(la, 1);
    const auto lists_b = build_surface_lists(lb, 1);
    const auto ga = init_grid(la, 0.5, 23);
    const auto gb = init_grid(lb, 0.5, 23);
    for (SurfaceId s : kAllSurfaces) {
        const auto ba = pack_surface(ga, lists_a, s);
        const auto bb = pack_surface(gb, lists_b, s);
        // collect (coordinate -> value) from both packs; they must agree
        std::map<std::uint64_t, std::uint8_t> va, vb;
        for (std::size_t t = 0; t < ba.size(); ++t)
            va[la.path_to_rmo[lists_a[s][t]]] = ba[t];
        for (std::size_t t = 0; t < bb.size(); ++t)
            vb[lb.path_to_rmo[lists_b[s][t]]] = bb[t];
        REQUIRE(va == vb);
    }
}

TEST_CASE("cross-layout halo exchange lands values on the right cells") {
    // pack under layout A, permute entries into layout B's list order by
    // coordinate, unpack under B: every (k,i,j) must hold the same state
    const Dims d = Dims::from_exponent(3);
    const auto la = build_layout(OrderingSpec::morton(d, 2));
    const auto lb = build_layout(OrderingSpec::hilbert(d));
    const auto lists_a = build_surface_lists(la, 1);
    const auto lists_b = build_surface_lists(lb, 1);
    const auto src = init_grid(la, 0.5, 31);
    const SurfaceId s = SurfaceId::rc_front;
    const auto packed = pack_surface(src, lists_a, s);
    std::map<std::uint32_t, std::uint8_t> by_rmo;
    for (std::size_t t = 0; t < packed.size(); ++t)
        by_rmo[la.path_to_rmo[lists_a[s][t]]] = packed[t];
    HaloBuffer permuted(lists_b[s].size());
    for (std::size_t t = 0; t < permuted.size(); ++t)
        permuted[t] = by_rmo.at(lb.path_to_rmo[lists_b[s][t]]);
    auto dst = init_grid(lb, 0.0, 0);
    unpack_surface(permuted, lists_b, s, dst);
    for (std::uint32_t i = 0; i < d.M; ++i)
        for (std::uint32_t j = 0; j < d.M; ++j) {
            const Coord3 c{0, i, j};
            CHECK(dst.cells[lb.rmo_to_path[rmo_of(c, d)]] ==
                  src.cells[la.rmo_to_path[rmo_of(c, d)]]);
        }
}

TEST_CASE("bench_pack emits six positive-timing records") {
    const auto layout = build_layout(OrderingSpec::hilbert(Dims::from_exponent(4)));
    const auto lists = build_surface_lists(layout, 1);
    const auto grid = init_grid(layout, 0.5, 7);
    const auto records = bench_pack(grid, lists, 10);
    REQUIRE(records.size() == 6);
    std::set<SurfaceId> seen;
    for (const auto& rec : records) {
        seen.insert(rec.surface);
        CHECK(rec.mean_s > 0);
        CHECK(rec.stddev_s >= 0);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("mismatched lists or buffers are rejected") {
    const auto l3 = build_layout(OrderingSpec::row_major(Dims::from_exponent(3)));
    const auto l2 = build_layout(OrderingSpec::row_major(Dims::from_exponent(2)));
    const auto lists3 = build_surface_lists(l3, 1);
    const auto grid2 = init_grid(l2, 0.0, 0);
    HaloBuffer buf;
    CHECK_THROWS_AS(pack_surface(grid2, lists3, SurfaceId::rc_front, buf),
                    std::invalid_argument);
    auto grid3 = init_grid(l3, 0.0, 0);
    const HaloBuffer wrong(5, 0);
    CHECK_THROWS_AS(unpack_surface(wrong, lists3, SurfaceId::rc_front, grid3),
                    std::invalid_argument);
}
