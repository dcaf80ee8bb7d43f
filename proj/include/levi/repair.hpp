#pragma once

#include <string>
#include <utility>
#include <vector>

#include "levi/lie_algebra.hpp"
#include "levi/sl2.hpp"

namespace levi {

struct EntryChange {
  int i, j, k;  // [b_i, b_j] coefficient on b_k, i < j
  Rational before, after;
};

struct EquivariantRepair {
  bool ok = false;  // a unique correction was found and the result is equivariant
  std::string message;
  std::vector<EquivarianceViolation> violations;  // of the input
  std::vector<std::pair<int, int>> flagged;       // pairs entering a violated equation
  int unknowns = 0;
  int equations = 0;
  std::vector<EntryChange> diff;
  LieAlgebra repaired;  // equals the input unless ok
};

/// Localizes the failures of the sl2 Leibniz rule for the bracket of L and
/// solves for a correction. Every pair [b_i, b_j] appearing in a violated
/// equation becomes unknown on the targets b_k that are allowed for it: same
/// H-weight as b_i + b_j and lower-central depth at least the sum of the
/// depths. All equations touching those pairs are imposed. When that system
/// has several solutions the search falls back to single-entry corrections.
/// Nothing is changed unless the correction is unique. H must be diagonal.
EquivariantRepair repair_equivariant(const LieAlgebra& L, const Sl2Action& a);

}  // namespace levi
