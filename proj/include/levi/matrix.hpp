#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "levi/rational.hpp"
#include "levi/sparse_vector.hpp"

namespace levi {

class Subspace;

/// Exact rational matrix stored as sparse rows. Dimensions are fixed at
/// construction; equality is entrywise. Used both as plain data and as a
/// linear map acting on column vectors (rows = target dim, cols = source dim).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix dense(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(int cols, std::vector<SparseVector> rows);
  static Matrix from_columns(int rows, const std::vector<SparseVector>& columns);
  static Matrix diagonal(const std::vector<Rational>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational at(int r, int c) const;
  void set(int r, int c, const Rational& value);
  void add_to(int r, int c, const Rational& value);

  const SparseVector& row(int r) const { return data_[static_cast<std::size_t>(r)]; }
  void set_row(int r, SparseVector v);
  SparseVector column(int c) const;
  std::vector<SparseVector> columns() const;

  SparseVector apply(const SparseVector& v) const;
  Vector apply(const Vector& v) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_diagonal() const;
  Rational trace() const;
  std::size_t nonzeros() const;

  /// Row-major flattening: entry (r, c) goes to index r * cols + c.
  SparseVector vectorize() const;
  static Matrix unvectorize(const SparseVector& v, int rows, int cols);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVector> data_;
};

/// sum_i v_i columns[i]; faster than Matrix::apply when the columns are
/// already at hand and v is sparse.
SparseVector apply_columns(const std::vector<SparseVector>& columns, const SparseVector& v);

/// [a, b] = ab - ba
Matrix commutator(const Matrix& a, const Matrix& b);

/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;           ///< unique RREF, same shape as the input
  std::vector<int> pivots;  ///< strictly increasing pivot columns
};

Echelon rref(const Matrix& m);
int rank(const Matrix& m);
Rational determinant(const Matrix& m);

/// Null space {v : m v = 0}.
Subspace kernel(const Matrix& m);
/// Column space as a subspace of the target.
Subspace image(const Matrix& m);

/// A particular solution of m x = rhs with every free variable set to 0, or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

}  // namespace levi
