#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levi/matrix.hpp"
#include "levi/sparse_vector.hpp"
#include "levi/subspace.hpp"

namespace levi {

/// Finite-dimensional Lie algebra given by structure constants on a basis
/// b_0..b_{n-1}. Only products [b_i, b_j] with i < j are stored; the rest
/// follow by antisymmetry. Linear maps between algebras are plain Matrix
/// values acting on coordinate columns.
class LieAlgebra {
 public:
  struct Constant {
    int i, j, k;
    Rational c;
  };

  LieAlgebra() = default;
  explicit LieAlgebra(int dim, std::string name = {});

  int dim() const { return dim_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Basis labels; "b1".."bn" unless set.
  std::string label(int i) const;
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  const std::optional<std::vector<int>>& grade() const { return grade_; }
  void set_grade(std::vector<int> grade);
  void clear_grade() { grade_.reset(); }
  /// True when a grading is present and every nonzero constant respects it.
  bool is_graded() const;

  /// [b_i, b_j] += c b_k. Accepts i > j (stored negated); i == j throws.
  void add_structure_constant(int i, int j, int k, const Rational& c);
  /// Replaces [b_i, b_j] for i != j.
  void set_bracket(int i, int j, SparseVector value);

  SparseVector bracket_basis(int i, int j) const;
  /// Stored product for i < j, no copy.
  const SparseVector& stored(int i, int j) const { return table_[pair_index(i, j)]; }

  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// [b_i, y]
  SparseVector bracket_with_basis(int i, const SparseVector& y) const;

  /// ad x as a matrix: column j holds [x, b_j].
  Matrix ad(const SparseVector& x) const;
  Matrix ad_basis(int i) const { return ad(SparseVector::unit(i)); }

  /// All nonzero constants with i < j, ordered by (i, j, k).
  std::vector<Constant> constants() const;
  bool is_abelian() const;

  /// Structure constants and dimension agree (names, labels and grading are
  /// presentation only).
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.table_ == b.table_; }

 private:
  std::size_t pair_index(int i, int j) const;
  void check_index(int i) const;

  int dim_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::optional<std::vector<int>> grade_;
  std::vector<SparseVector> table_;
};

/// Abelian algebra of dimension d.
LieAlgebra abelian(int d);
/// Basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2_algebra();

}  // namespace levi
