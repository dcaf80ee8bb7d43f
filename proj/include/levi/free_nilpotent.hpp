#pragma once

#include <vector>

#include "levi/lie_algebra.hpp"

namespace levi {

/// A Hall word: a generator (left = right = -1) or the bracket of two earlier
/// Hall words, referred to by their basis indices.
struct HallWord {
  int generator = -1;
  int left = -1;
  int right = -1;
  int degree = 1;
  bool is_generator() const { return generator >= 0; }
};

/// Free t-nilpotent Lie algebra on d generators with its Hall basis. Basis
/// index k is hall_basis[k]; degree blocks are contiguous and ascending, and
/// generators are indices 0..d-1.
struct FreeNilpotent {
  int d = 0;
  int t = 0;
  LieAlgebra algebra;
  std::vector<HallWord> hall_basis;
  std::vector<int> degree_offsets;  // size t+1; block m spans [offsets[m-1], offsets[m])

  int dim() const { return algebra.dim(); }
  int block_begin(int degree) const { return degree_offsets[static_cast<std::size_t>(degree - 1)]; }
  int block_end(int degree) const { return degree_offsets[static_cast<std::size_t>(degree)]; }
  Subspace block(int degree) const;
  /// Sum of the blocks of degree >= m.
  Subspace tail(int degree) const;
  std::string word_string(int k) const;
};

/// Largest dimension free_nilpotent() will build.
inline constexpr int kFreeNilpotentDimCap = 4096;

/// Builds the Hall basis and the structure constants by collection.
/// Throws ResourceLimit above kFreeNilpotentDimCap.
FreeNilpotent free_nilpotent(int d, int t);

std::vector<int> graded_dims(const FreeNilpotent& F);
/// Necklace count (1/m) sum_{k|m} mu(k) d^{m/k}: the dimension of the degree-m
/// part of the free Lie algebra on d generators.
long long witt_oracle(int d, int m);
/// sum_{m<=t} witt_oracle(d, m)
long long free_nilpotent_dim(int d, int t);

/// theta_G: extends generator i -> G[i] to a homomorphism F -> target
/// (target.dim x F.dim). Throws PreconditionFailed if the extension is not a
/// homomorphism, which happens when the target has nilindex above t.
Matrix natural_hom(const FreeNilpotent& F, const LieAlgebra& target, const std::vector<SparseVector>& G);

/// Extends d0 (F.dim x d: images of the generators) to the derivation
/// δ([u,v]) = [δu, v] + [u, δv] of F.
Matrix derivation_extension(const FreeNilpotent& F, const Matrix& d0);

/// Δ: gl(d) -> Der F, applied to each d x d matrix.
std::vector<Matrix> delta_hom(const FreeNilpotent& F, const std::vector<Matrix>& maps);
Matrix delta(const FreeNilpotent& F, const Matrix& map);

/// 𝔪 ⊕ ⋀²𝔪 with [x_i, x_j] = x_i∧x_j. Basis x_i, then x_i∧x_j (i<j) in
/// lexicographic order.
LieAlgebra wedge_model_2(int m);

/// 𝔪 ⊕ ⋀²𝔪 ⊕ 𝔰, where 𝔰 is the image of the projection
/// x⊗(y∧z) -> (2x⊗(y∧z) + y⊗(x∧z) + z⊗(y∧x))/3 inside 𝔪⊗⋀²𝔪, with basis the
/// RREF basis of that image.
struct WedgeModel3 {
  int m = 0;
  LieAlgebra algebra;
  Subspace s_space;  // inside 𝔪⊗⋀²𝔪, coordinates a*C(m,2) + pair(b,c)
  int wedge_begin() const { return m; }
  int s_begin() const { return m + m * (m - 1) / 2; }
};

WedgeModel3 wedge_model_3(int m);

/// Index of x_b∧x_c (b < c) among the C(m,2) lexicographic pairs.
int wedge_pair_index(int m, int b, int c);
/// Projection of x_a⊗(x_b∧x_c) in 𝔪⊗⋀²𝔪 coordinates (any b, c).
SparseVector s_projection(int m, int a, int b, int c);

}  // namespace levi
