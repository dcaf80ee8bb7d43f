#pragma once

#include "levi/lie_algebra.hpp"

namespace levi {

/// Heisenberg algebra of dimension 2n+1 in the standard basis
/// x1..xn, y1..yn, z with [x_i, y_i] = z.
LieAlgebra heisenberg(int n);

/// Standard model of the n-dimensional filiform algebra:
/// [e1, e_i] = e_{i+1} for 2 <= i <= n-1. Requires n >= 3.
LieAlgebra standard_filiform(int n);

/// The 8-dimensional characteristically nilpotent algebra on a1..a8.
LieAlgebra dl8();

/// sl2 glued to the 3-dimensional Heisenberg algebra; basis x, y, z, h, e, f.
LieAlgebra glued_l0_h1();

}  // namespace levi
