#pragma once

#include <string_view>

#include "levi/free_nilpotent.hpp"
#include "levi/levi.hpp"
#include "levi/lie_algebra.hpp"
#include "levi/sl2.hpp"

namespace levi {

/// The 52-dimensional non-quasi-cyclic 3-nilpotent algebra of type 11 as a
/// lieconst text, exactly as transcribed (including its defects).
std::string_view table2_source();

/// Parsed table2_source() with labels v0..v10, w0..w18, z0..z6, x0..x14.
LieAlgebra table2();

/// Block action V(10) ⊕ V(18) ⊕ V(6) ⊕ V(14) on the v, w, z and x blocks,
/// each block in the standard basis a_0..a_n.
Sl2Action table2_action();

struct GeneratorKernel {
  FreeNilpotent free;  // N(11, 3)
  Matrix theta;        // generator i -> v_i
  bool surjective = false;
  SIdeal kernel;       // flags for V(10) acting on the generators
  bool homogeneous = false;
};

/// Kernel of the natural map from the free 3-nilpotent algebra on 11
/// generators onto target, sending the generators to the first 11 basis
/// vectors.
GeneratorKernel table2_kernel(const LieAlgebra& target);

}  // namespace levi
