#include <cstdint>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "sfc3d/hilbert.hpp"

using namespace sfc3d;

namespace {

int manhattan(Coord3 a, Coord3 b) {
    return std::abs(int(a.k) - int(b.k)) + std::abs(int(a.i) - int(b.i)) +
           std::abs(int(a.j) - int(b.j));
}

}  // namespace

TEST_CASE("hilbert endpoints") {
    for (unsigned m = 2; m <= 4; ++m) {
        const Dims d = Dims::from_exponent(m);
        CHECK(hilbert_encode(Coord3{0, 0, 0}, d) == 0);
        CHECK(hilbert_decode(0, d) == Coord3{0, 0, 0});
        CHECK(hilbert_decode(d.volume() - 1, d) == Coord3{d.M - 1, d.M - 1, d.M - 1});
    }
}

TEST_CASE("hilbert walk: bijection, inverse, unit steps") {
    for (unsigned m = 2; m <= 4; ++m) {
        const Dims d = Dims::from_exponent(m);
        std::vector<Coord3> along_path(d.volume());
        std::vector<bool> hit(d.volume(), false);
        for (std::uint64_t l = 0; l < d.volume(); ++l) {
            const Coord3 c = hilbert_decode(l, d);
            REQUIRE(contains(d, c));
            REQUIRE(hilbert_encode(c, d) == l);
            along_path[l] = c;
            const std::uint64_t rmo = rmo_of(c, d);
            REQUIRE(!hit[rmo]);
            hit[rmo] = true;
        }
        for (std::uint64_t l = 0; l + 1 < d.volume(); ++l)
            REQUIRE(manhattan(along_path[l], along_path[l + 1]) == 1);
    }
}

TEST_CASE("hilbert requires m >= 2") {
    CHECK_THROWS_AS(hilbert_encode(Coord3{0, 0, 0}, Dims::from_exponent(1)),
                    unsupported_ordering);
    CHECK_THROWS_AS(hilbert_decode(0, Dims::from_exponent(0)), unsupported_ordering);
}
