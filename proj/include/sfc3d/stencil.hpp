#ifndef SFC3D_STENCIL_HPP
#define SFC3D_STENCIL_HPP

#include "sfc3d/types.hpp"

namespace sfc3d {

struct StencilSpec {
    unsigned g = 1;  // half-width; the stencil is a cube of side 2g+1
};

inline void require_stencil(StencilSpec s, Dims d, const char* who) {
    if (s.g < 1)
        throw std::invalid_argument(std::string(who) + ": stencil half-width must be >= 1");
    if (2 * std::uint64_t{s.g} >= d.M)
        throw std::invalid_argument(std::string(who) + ": stencil with g = " +
                                    std::to_string(s.g) + " does not fit M = " +
                                    std::to_string(d.M));
}

}  // namespace sfc3d

#endif  // SFC3D_STENCIL_HPP
