#pragma once

#include <optional>
#include <vector>

#include "levi/matrix.hpp"
#include "levi/sparse_vector.hpp"

namespace levi {

/// Row space in canonical reduced row-echelon form. Two subspaces are equal
/// exactly when their RREF bases coincide.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(int ambient_dim, const std::vector<SparseVector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace full(int ambient_dim);
  /// Span of the unit vectors e_begin, ..., e_{end-1}.
  static Subspace coordinate(int ambient_dim, int begin, int end);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == ambient_; }

  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<int> non_pivots() const;
  Matrix as_matrix() const;

  /// v minus the combination of basis rows matching v on the pivot columns;
  /// zero exactly when v lies in the subspace.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v with respect to basis(); v must lie in the subspace.
  Vector coordinates(const SparseVector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class SpanBuilder;
  int ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Canonical complement of a inside b: the RREF rows of b whose pivots are
/// not pivots of a. Requires a to be contained in b.
Subspace complement_within(const Subspace& a, const Subspace& b);

/// Incremental echelon basis. Rows have a leading 1 at their pivot but are
/// not back-substituted until build(). Holds a scratch buffer, so one
/// builder must not be shared between threads.
class SpanBuilder {
 public:
  explicit SpanBuilder(int ambient_dim);

  /// Adds v; returns true when the span grew.
  bool add(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  SparseVector reduce(const SparseVector& v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }
  /// Rows as inserted (normalized, echelon but not fully reduced).
  const std::vector<SparseVector>& rows() const { return rows_; }

  Subspace build() const;

 private:
  // Eliminates pivots left to right. With full == false it stops at the first
  // surviving non-pivot entry, which is all add() and contains() need.
  SparseVector eliminate(const SparseVector& v, bool full) const;

  int ambient_;
  std::vector<SparseVector> rows_;
  std::vector<int> pivot_row_;
  mutable Vector scratch_;
};

/// Expresses vectors in a fixed linearly independent family (not necessarily
/// in RREF), e.g. matrices of a Lie algebra basis after vectorization.
class Coordinatizer {
 public:
  /// Throws PreconditionFailed when the family is dependent.
  Coordinatizer(int ambient_dim, const std::vector<SparseVector>& family);

  int size() const { return size_; }
  const Subspace& span() const { return span_; }
  /// Coefficients c with v = sum c_i family_i, or nullopt when v is outside the span.
  std::optional<Vector> coordinates(const SparseVector& v) const;

 private:
  int ambient_;
  int size_;
  Subspace augmented_;  // rows (family_i | e_i), echelonized
  Subspace span_;
};

}  // namespace levi
