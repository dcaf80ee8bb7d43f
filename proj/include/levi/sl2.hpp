#pragma once

#include <vector>

#include "levi/lie_algebra.hpp"

namespace levi {

/// sl2 acting on k^dim through matrices H, E, F. The relations
/// [H,E] = 2E, [H,F] = -2F, [E,F] = H are checked on construction.
class Sl2Action {
 public:
  Sl2Action() = default;
  Sl2Action(Matrix H, Matrix E, Matrix F);

  int dim() const { return H_.rows(); }
  const Matrix& H() const { return H_; }
  const Matrix& E() const { return E_; }
  const Matrix& F() const { return F_; }
  std::vector<Matrix> matrices() const { return {H_, E_, F_}; }

  friend bool operator==(const Sl2Action&, const Sl2Action&) = default;

 private:
  Matrix H_, E_, F_;
};

/// V(n) on a_0..a_n: H a_i = (n-2i) a_i, E a_i = (n-i+1) a_{i-1}, F a_i = (i+1) a_{i+1}.
Sl2Action irreducible(int n);
Sl2Action trivial_action(int dim);
Sl2Action direct_sum(const Sl2Action& a, const Sl2Action& b);
/// V(n_1) ⊕ V(n_2) ⊕ ... in the given order.
Sl2Action block_sum(const std::vector<int>& weights);

/// Basis e_i ⊗ f_j at index i * dim(b) + j.
Sl2Action tensor(const Sl2Action& a, const Sl2Action& b);
/// Basis e_i ∧ e_j (i < j), lexicographic.
Sl2Action wedge2(const Sl2Action& a);
/// Basis e_i ∧ e_j ∧ e_k (i < j < k), lexicographic.
Sl2Action wedge3(const Sl2Action& a);

/// Action on an invariant subspace, in its RREF basis.
Sl2Action restrict_action(const Sl2Action& a, const Subspace& invariant);
/// Action on the quotient, in the non-pivot coordinates of the subspace.
Sl2Action quotient_action(const Sl2Action& a, const Subspace& invariant);

struct Sl2Summand {
  int weight;
  int multiplicity;
  Subspace highest_weight;  // RREF basis of ker E ∩ ker(H - weight)
};

struct Sl2Decomposition {
  std::vector<Sl2Summand> summands;  // weights strictly descending
  /// Every weight repeated by multiplicity, descending.
  std::vector<int> weights() const;
  int dim() const;
};

/// Throws PreconditionFailed when H does not act semisimply with integer
/// eigenvalues ("not an algebraic sl2 action").
Sl2Decomposition decompose(const Sl2Action& a);
/// Decomposition of an invariant subspace; highest-weight spaces are returned
/// in ambient coordinates.
Sl2Decomposition decompose_within(const Sl2Action& a, const Subspace& invariant);

/// Concatenated weights of several invariant subspaces, block by block
/// (descending inside each block), e.g. the degree layers of a graded algebra.
std::vector<int> block_weights(const Sl2Action& a, const std::vector<Subspace>& blocks);

/// V(m) ⊗ V(n) = ⊕ V(m+n-2i), 0 <= i <= min(m,n); descending.
std::vector<int> clebsch_gordan(int m, int n);
/// Weights of ⋀²V(n): 2n-2, 2n-6, ... while nonnegative.
std::vector<int> wedge2_weights(int n);

struct EquivarianceViolation {
  char generator;  // 'H', 'E' or 'F'
  int i, j;        // basis pair, i < j
  SparseVector residual;
};

/// Pairs where H, E or F fails the Leibniz rule for the bracket of L.
std::vector<EquivarianceViolation> equivariance_violations(const Sl2Action& a, const LieAlgebra& L);
bool is_equivariant_bilinear(const Sl2Action& a, const LieAlgebra& L);

/// Smallest invariant subspace containing the vectors.
Subspace submodule_generated(const Sl2Action& a, const std::vector<SparseVector>& vectors);
bool is_submodule(const Sl2Action& a, const Subspace& s);

/// Invariant C with sub ⊕ C = within. Both inputs must be invariant and
/// sub ⊆ within. C is generated by the canonical complements of the
/// highest-weight spaces of sub inside those of within.
Subspace invariant_complement(const Sl2Action& a, const Subspace& sub, const Subspace& within);

}  // namespace levi
