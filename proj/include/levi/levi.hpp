#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levi/analysis.hpp"
#include "levi/free_nilpotent.hpp"
#include "levi/lie_algebra.hpp"
#include "levi/sl2.hpp"

namespace levi {

/// A linear representation of S given by one matrix per S-basis vector.
/// Both flags are computed on construction.
class Representation {
 public:
  Representation() = default;
  Representation(LieAlgebra s_algebra, std::vector<Matrix> images);

  const LieAlgebra& s_algebra() const { return s_; }
  const std::vector<Matrix>& images() const { return images_; }
  const Matrix& image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  int target_dim() const { return target_dim_; }

  /// [ρ(s_i), ρ(s_j)] = Σ_k c(i,j,k) ρ(s_k) for all i < j.
  bool is_homomorphism() const { return homomorphism_; }
  /// No nonzero combination of the images vanishes.
  bool is_faithful() const { return faithful_; }

 private:
  LieAlgebra s_;
  std::vector<Matrix> images_;
  int target_dim_ = 0;
  bool homomorphism_ = false;
  bool faithful_ = false;
};

/// sl2 in the basis (h, e, f) acting through H, E, F.
Representation sl2_representation(const Sl2Action& a);
/// Inverse of sl2_representation; throws PreconditionFailed when S is not
/// sl2 in the basis (h, e, f).
Sl2Action sl2_action(const Representation& rho);
/// True when the representation is of sl2 in the basis (h, e, f).
bool is_sl2_representation(const Representation& rho);

/// S ⊕_ρ N. The N block comes first: indices [0, n_dim) hold N and
/// [n_dim, n_dim + s_dim) hold S.
struct GluedAlgebra {
  LieAlgebra algebra;
  LieAlgebra n_algebra;
  Representation rho;
  std::vector<std::string> warnings;

  int n_dim() const { return n_algebra.dim(); }
  int s_dim() const { return rho.s_algebra().dim(); }
  Subspace n_block() const { return Subspace::coordinate(algebra.dim(), 0, n_dim()); }
  Subspace s_block() const { return Subspace::coordinate(algebra.dim(), n_dim(), algebra.dim()); }
};

/// Throws PreconditionFailed when some ρ(s_i) is not a derivation of N or ρ
/// is not a homomorphism. A degenerate Killing form on S only adds a warning.
/// Jacobi is re-verified on the result.
GluedAlgebra glue(const LieAlgebra& s, const LieAlgebra& n, const Representation& rho);

/// Δ∘ρ0: the action on the generators extended to derivations of F.
Representation extend_to_free(const FreeNilpotent& F, const Representation& rho0);

/// An ideal candidate of a free nilpotent algebra with its computed flags.
struct SIdeal {
  Subspace subspace;
  bool is_ideal = false;
  bool is_invariant = false;
  bool is_homogeneous = false;
};

SIdeal make_s_ideal(const FreeNilpotent& F, const Representation& rho, const Subspace& s);

/// I = ⊕_j (I ∩ degree-j block).
bool is_homogeneous_ideal(const FreeNilpotent& F, const Subspace& ideal);

/// Smallest ideal containing J (for nilindex 3 and J in degree >= 2 this is
/// J + [J, m]). Throws PreconditionFailed when J is not invariant.
SIdeal s_ideal_closure(const FreeNilpotent& F, const Representation& rho, const Subspace& J);

struct LeviQuotient {
  Quotient quotient;
  Representation rho;  // induced on the quotient
  GluedAlgebra glued;
};

/// F / I with the induced representation, glued to S. Throws
/// PreconditionFailed listing every violated condition: I not an ideal, not
/// invariant, not inside F², or containing the top block.
LeviQuotient quotient_with_levi(const FreeNilpotent& F, const Representation& rho, const SIdeal& ideal);

/// Invariant subspaces of `within` obtained by choosing, for each highest
/// weight, either nothing, everything, or one line spanned by a {0, ±1}
/// combination of the highest-weight basis. Deterministic order.
std::vector<Subspace> candidate_submodules(const Sl2Action& a, const Subspace& within);

/// F / (P ⊕ ([P, m] + Q)) for P inside degree 2 and Q inside degree 3 of a
/// nilindex-3 free algebra. Throws PreconditionFailed when the degree-3
/// block is swallowed.
LeviQuotient quasi_cyclic_quotient(const FreeNilpotent& F, const Representation& rho, const Subspace& P, const Subspace& Q);

/// Basis of sp_2n on x_1..x_n, y_1..y_n for b(x_i, y_i) = 1: the matrices X
/// with XᵀJ + JX = 0.
std::vector<Matrix> symplectic_algebra(int n);

struct HeisenbergQuotient {
  FreeNilpotent free;
  Subspace ideal;  // kernel of the symplectic contraction on degree 2
  Quotient quotient;
  int center_dim = 0;
  bool center_is_derived = false;
  Matrix form;  // [u_a, u_b] = form(a, b) z on the degree-1 block
  bool form_nondegenerate = false;
  bool kernel_matches_heisenberg = false;  // ker(F -> h_n) == ideal
  int symplectic_dim = 0;
  bool symplectic_descends = false;
  bool ok() const;
};

HeisenbergQuotient heisenberg_quotient(int n);

struct GraphQuotientResult {
  bool ok = false;
  std::vector<std::string> report;
  Rational lambda;
  SparseVector u, w;  // highest-weight vectors used in degree 2 and degree 3
  std::optional<SIdeal> ideal;
  std::optional<LeviQuotient> quotient;
};

/// Quotient by an ideal containing the graph B = <u + λw> of an isomorphism
/// between copies of V(weight) in degree 2 and degree 3, plus extra_P and
/// extra_Q. Tries the canonical highest-weight vectors first, then every
/// {0, ±1} combination over the multiplicity spaces; all attempts land in
/// the report. λ = 0 throws PreconditionFailed.
GraphQuotientResult nonhomogeneous_graph_quotient(const FreeNilpotent& F, const Sl2Action& generators, int weight,
                                                  const Rational& lambda, const Subspace& extra_P,
                                                  const Subspace& extra_Q);

/// The nilindex-3 quotient of N(V(10), 3) with blocks 11, 19, 7, 15 built
/// around a graph of V(14): P holds the V(10) and V(2) parts of degree 2,
/// and Q is the largest invariant part of degree 3 that keeps w out and
/// leaves one V(14).
struct NqcReconstruction {
  FreeNilpotent free;
  Sl2Action action;  // on all of F
  Subspace extra_P, extra_Q;
  GraphQuotientResult graph;
  std::vector<int> block_dims;  // quotient degree blocks split by module
};

NqcReconstruction reconstruct_non_quasi_cyclic(const Rational& lambda = Rational(1));

struct LayerReport {
  int degree = 0;
  std::vector<int> weights;
  bool generated = false;  // m_j ⊆ [m_1, m_{j-1}] + N^{j+1}
  bool in_tensor = false;  // weights of m_j ⊆ weights of m_1 ⊗ m_{j-1}
};

struct ModuleLayers {
  bool supported = false;
  std::string message;
  std::vector<LayerReport> layers;
  bool ok() const;
};

/// Splits the nilradical into invariant complements N^j = m_j ⊕ N^{j+1} and
/// checks that each layer is generated by, and is a constituent of, m_1 ⊗
/// m_{j-1}. Only sl2 Levi factors are supported.
ModuleLayers verify_module_layers(const GluedAlgebra& G);

struct CnExtension {
  LieAlgebra algebra;  // n first, then x_1..x_m, y_1..y_m
  int nilindex = 0;
  bool hypothesis_holds = false;  // {x : [x, n] ⊆ Z(n)} ⊆ n²
  bool der_nilpotent = false;
  std::vector<Matrix> symplectic_block;  // sp_2m on V_m, zero on n
  bool symplectic_are_derivations = false;
  int der_dim = 0;
};

/// n ⊕ V_m with [x_i, y_i] = z0 and [V_m, n] = 0. Throws PreconditionFailed
/// when z0 is not central, the hypothesis fails, or Der n is not nilpotent.
CnExtension cn_extension(const LieAlgebra& n, const SparseVector& z0, int m);

}  // namespace levi
