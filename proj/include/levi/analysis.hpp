#pragma once

#include <vector>

#include "levi/lie_algebra.hpp"

namespace levi {

struct JacobiViolation {
  int i, j, k;  // 0-based, i < j < k
  SparseVector residual;
};

struct JacobiReport {
  long long triples_checked = 0;
  std::vector<JacobiViolation> violations;  // ordered by (i, j, k)
  bool ok() const { return violations.empty(); }
};

/// Checks [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] = 0 for all
/// i < j < k. The sweep is split across threads; the report is identical for
/// every thread count.
JacobiReport verify_jacobi(const LieAlgebra& L, int threads = 1);

/// N^1 = L, N^{j+1} = [L, N^j], listed until the first repeat (so a
/// nilpotent algebra ends with the zero subspace).
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
std::vector<Subspace> derived_series(const LieAlgebra& L);
std::vector<int> dims(const std::vector<Subspace>& series);

/// Span of [a, b] for a in A, b in B.
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

Subspace center(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
/// Largest t with N^t != 0; throws PreconditionFailed for non-nilpotent L.
int nilindex(const LieAlgebra& L);
/// dim L / L^2.
int type_of(const LieAlgebra& L);

struct LeibnizViolation {
  int i, j;  // basis pair, i < j
  SparseVector residual;  // d[b_i,b_j] - [d b_i, b_j] - [b_i, d b_j]
};

std::vector<LeibnizViolation> leibniz_violations(const LieAlgebra& L, const Matrix& d);
bool is_derivation(const LieAlgebra& L, const Matrix& d);

/// Basis of Der L, canonical as the RREF basis of row-major vectorized
/// matrices.
std::vector<Matrix> derivation_algebra(const LieAlgebra& L);

struct MatrixLieReport {
  bool closed = false;
  bool solvable = false;
  bool nilpotent = false;
  std::vector<int> derived_dims;  // empty unless closed
  std::vector<int> lower_dims;
};

/// Treats the span of square matrices as a Lie algebra under the commutator.
MatrixLieReport matrix_lie_tests(const std::vector<Matrix>& basis);

/// Structure constants of a commutator-closed, linearly independent family of
/// square matrices with respect to that family.
LieAlgebra from_matrices(const std::vector<Matrix>& basis);

Matrix killing_form(const LieAlgebra& L);
bool is_semisimple(const LieAlgebra& L);
/// Cartan's criterion: K(L, [L,L]) = 0.
bool cartan_solvable(const LieAlgebra& L);

bool is_subalgebra(const LieAlgebra& L, const Subspace& s);
bool is_ideal(const LieAlgebra& L, const Subspace& s);
/// True when every matrix maps s into itself.
bool is_invariant(const std::vector<Matrix>& maps, const Subspace& s);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;        // quotient_dim x dim
  std::vector<int> kept;    // original basis indices forming the quotient basis
};

/// L / I on the canonical complement (non-pivot coordinates of I). The
/// projection is checked to be a homomorphism.
Quotient quotient(const LieAlgebra& L, const Subspace& ideal);

/// Structure constants of a subalgebra in its RREF basis.
LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& s);

/// True when map([b_i,b_j]) = [map b_i, map b_j] for all basis pairs.
bool is_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& map);

}  // namespace levi
