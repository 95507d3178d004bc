#include <cstdint>
#include <vector>

#include "doctest.h"
#include "sfc3d/kernels.hpp"
#include "sfc3d/morton.hpp"

using namespace sfc3d;

TEST_CASE("scalar fill agrees with point encode") {
    for (unsigned m = 1; m <= 5; ++m) {
        const Dims d = Dims::from_exponent(m);
        std::vector<std::uint32_t> fill(d.volume());
        for (unsigned r = 0; r < m; ++r) {
            kernels::morton_fill_scalar(fill.data(), m, r);
            for (std::uint64_t rmo = 0; rmo < d.volume(); ++rmo)
                REQUIRE(fill[rmo] == morton_encode(coord_of_rmo(rmo, d), d, r));
        }
    }
}

TEST_CASE("avx2 fill is bit-identical to the scalar reference") {
    if (!kernels::avx2_available()) {
        MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
        return;
    }
    for (unsigned m = 1; m <= 7; ++m) {
        const Dims d = Dims::from_exponent(m);
        std::vector<std::uint32_t> scalar(d.volume()), vec(d.volume(), 0xFFFFFFFFu);
        for (unsigned r = 0; r < m; ++r) {
            kernels::morton_fill_scalar(scalar.data(), m, r);
            kernels::morton_fill_avx2(vec.data(), m, r);
            REQUIRE(scalar == vec);
        }
    }
}

TEST_CASE("dispatcher returns a working kernel") {
    auto fn = kernels::morton_fill();
    REQUIRE(fn != nullptr);
    const Dims d = Dims::from_exponent(3);
    std::vector<std::uint32_t> fill(d.volume());
    fn(fill.data(), 3, 2);
    CHECK(fill[0] == 0);
    CHECK(fill[d.volume() - 1] == d.volume() - 1);
    CHECK(fill[rmo_of(Coord3{1, 1, 1}, d)] == 7);  // 2x2x2 blocks are contiguous
}
