#pragma once

#include "orbisym/presentation.hpp"

#include <string>

namespace fixtures {

inline constexpr const char* kOrbifold28 =
    "generators: x y z\n"
    "relators: x^5 y^2 z^2 (x*z)^3 (x*y)^2 (y*z^-1)^2\n";

inline orbisym::Presentation orbifold28() { return orbisym::load_presentation(kOrbifold28); }

inline orbisym::Presentation triangle(int p, int q, int r) {
  return orbisym::load_presentation("generators: x y\nrelators: x^" + std::to_string(p) + " y^" + std::to_string(q) +
                                    " (x*y)^" + std::to_string(r) + "\n");
}

}  // namespace fixtures
