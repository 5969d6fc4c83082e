#pragma once

#include "gia/cocycles.hpp"

namespace fixtures {

// sigma(u, v) = u_2 * v_1 on Z2xZ2: the cocycle of the Pauli basis I, X, Y, XY.
inline gia::Cocycle pauli() {
  gia::Group k = gia::Group::parse_literal("Z2xZ2");
  gia::Cocycle s = gia::trivial_cocycle(k, 2);
  for (gia::Elem u = 0; u < 4; ++u)
    for (gia::Elem v = 0; v < 4; ++v) s.at(u, v) = k.exponents(u)[1] * k.exponents(v)[0];
  return s;
}

// sigma(u, v) = u_1 * v_2 on Z3xZ3, nondegenerate bicharacter.
inline gia::Cocycle heisenberg3() {
  gia::Group t = gia::Group::parse_literal("Z3xZ3");
  gia::Cocycle s = gia::trivial_cocycle(t, 3);
  for (gia::Elem u = 0; u < 9; ++u)
    for (gia::Elem v = 0; v < 9; ++v) s.at(u, v) = t.exponents(u)[0] * t.exponents(v)[1] % 3;
  return s;
}

}  // namespace fixtures
