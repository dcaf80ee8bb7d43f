#include "levi/matrix.hpp"

#include <algorithm>

#include "levi/error.hpp"
#include "levi/subspace.hpp"

namespace levi {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[static_cast<std::size_t>(i)] = SparseVector::unit(i);
  return m;
}

Matrix Matrix::dense(std::initializer_list<std::initializer_list<Rational>> rows) {
  int cols = rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(static_cast<int>(rows.size()), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) throw DimensionMismatch("ragged matrix literal");
    m.data_[r++] = SparseVector::from_dense(Vector(row));
  }
  return m;
}

Matrix Matrix::from_rows(int cols, std::vector<SparseVector> rows) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].last() >= cols) throw DimensionMismatch("row entry beyond column count");
    m.data_[r] = std::move(rows[r]);
  }
  return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<SparseVector>& columns) {
  std::vector<std::vector<SparseVector::Term>> terms(static_cast<std::size_t>(rows));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, x] : columns[c]) {
      if (r >= rows) throw DimensionMismatch("column entry beyond row count");
      terms[static_cast<std::size_t>(r)].emplace_back(static_cast<int>(c), x);
    }
  Matrix m(rows, static_cast<int>(columns.size()));
  for (std::size_t r = 0; r < terms.size(); ++r) m.data_[r] = SparseVector::from_terms(std::move(terms[r]));
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& entries) {
  int n = static_cast<int>(entries.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[static_cast<std::size_t>(i)] = SparseVector::unit(i, entries[static_cast<std::size_t>(i)]);
  return m;
}

Rational Matrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimensionMismatch("matrix index out of range");
  return data_[static_cast<std::size_t>(r)].at(c);
}

void Matrix::set(int r, int c, const Rational& value) {
  add_to(r, c, value - at(r, c));
}

void Matrix::add_to(int r, int c, const Rational& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimensionMismatch("matrix index out of range");
  data_[static_cast<std::size_t>(r)].add_scaled(SparseVector::unit(c), value);
}

void Matrix::set_row(int r, SparseVector v) {
  if (r < 0 || r >= rows_ || v.last() >= cols_) throw DimensionMismatch("row out of range");
  data_[static_cast<std::size_t>(r)] = std::move(v);
}

SparseVector Matrix::column(int c) const {
  std::vector<SparseVector::Term> t;
  for (int r = 0; r < rows_; ++r) {
    Rational x = data_[static_cast<std::size_t>(r)].at(c);
    if (x != 0) t.emplace_back(r, x);
  }
  return SparseVector::from_terms(std::move(t));
}

std::vector<SparseVector> Matrix::columns() const {
  Matrix t = transpose();
  return t.data_;
}

SparseVector Matrix::apply(const SparseVector& v) const {
  if (v.last() >= cols_) throw DimensionMismatch("vector length does not match matrix columns");
  std::vector<SparseVector::Term> t;
  for (int r = 0; r < rows_; ++r) {
    Rational x = dot(data_[static_cast<std::size_t>(r)], v);
    if (x != 0) t.emplace_back(r, x);
  }
  return SparseVector::from_terms(std::move(t));
}

Vector Matrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("vector length does not match matrix columns");
  Vector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[static_cast<std::size_t>(r)]) out[static_cast<std::size_t>(r)] += x * v[static_cast<std::size_t>(c)];
  return out;
}

Matrix Matrix::transpose() const {
  std::vector<std::vector<SparseVector::Term>> t(static_cast<std::size_t>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[static_cast<std::size_t>(r)]) t[static_cast<std::size_t>(c)].emplace_back(r, x);
  Matrix m(cols_, rows_);
  // Rows are visited in order, so each column list is already sorted.
  for (std::size_t c = 0; c < t.size(); ++c) m.data_[c] = SparseVector::from_terms(std::move(t[c]));
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& v) { return v.is_zero(); });
}

bool Matrix::is_diagonal() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (const auto& t : data_[static_cast<std::size_t>(r)])
      if (t.first != r) return false;
  return true;
}

Rational Matrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
  Rational s = 0;
  for (int r = 0; r < rows_; ++r) s += data_[static_cast<std::size_t>(r)].at(r);
  return s;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& v : data_) n += v.size();
  return n;
}

SparseVector Matrix::vectorize() const {
  std::vector<SparseVector::Term> t;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[static_cast<std::size_t>(r)]) t.emplace_back(r * cols_ + c, x);
  return SparseVector::from_terms(std::move(t));
}

Matrix Matrix::unvectorize(const SparseVector& v, int rows, int cols) {
  if (v.last() >= rows * cols) throw DimensionMismatch("vector too long to unvectorize");
  std::vector<std::vector<SparseVector::Term>> t(static_cast<std::size_t>(rows));
  for (const auto& [i, x] : v) t[static_cast<std::size_t>(i / cols)].emplace_back(i % cols, x);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < t.size(); ++r) m.data_[r] = SparseVector::from_terms(std::move(t[r]));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t r = 0; r < data_.size(); ++r) data_[r] += other.data_[r];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t r = 0; r < data_.size(); ++r) data_[r] -= other.data_[r];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  std::vector<SparseVector::Term> t;
  for (int r = 0; r < a.rows_; ++r) {
    t.clear();
    for (const auto& [k, x] : a.data_[static_cast<std::size_t>(r)])
      for (const auto& [c, y] : b.data_[static_cast<std::size_t>(k)]) t.emplace_back(c, x * y);
    m.data_[static_cast<std::size_t>(r)] = SparseVector::from_terms(t);
  }
  return m;
}

SparseVector apply_columns(const std::vector<SparseVector>& columns, const SparseVector& v) {
  std::vector<SparseVector::Term> t;
  for (const auto& [i, x] : v) {
    if (i >= static_cast<int>(columns.size())) throw DimensionMismatch("vector length exceeds column count");
    for (const auto& [r, y] : columns[static_cast<std::size_t>(i)]) t.emplace_back(r, x * y);
  }
  return SparseVector::from_terms(std::move(t));
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) m.set_row(r, a.row(r));
  for (int r = 0; r < b.rows(); ++r) m.set_row(a.rows() + r, b.row(r).shifted(a.cols()));
  return m;
}

Echelon rref(const Matrix& m) {
  Subspace s = Subspace::row_space(m);
  Matrix reduced(m.rows(), m.cols());
  for (int r = 0; r < s.dim(); ++r) reduced.set_row(r, s.basis()[static_cast<std::size_t>(r)]);
  return {std::move(reduced), s.pivots()};
}

int rank(const Matrix& m) {
  SpanBuilder b(m.cols());
  for (int r = 0; r < m.rows(); ++r) b.add(m.row(r));
  return b.dim();
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const int n = m.rows();
  std::vector<Vector> a;
  a.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) a.push_back(m.row(r).to_dense(n));
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const auto& piv = a[static_cast<std::size_t>(c)];
    det *= piv[static_cast<std::size_t>(c)];
    for (int r = c + 1; r < n; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(c)] == 0) continue;
      Rational f = row[static_cast<std::size_t>(c)] / piv[static_cast<std::size_t>(c)];
      for (int k = c; k < n; ++k) row[static_cast<std::size_t>(k)] -= f * piv[static_cast<std::size_t>(k)];
    }
  }
  return det;
}

Subspace kernel(const Matrix& m) {
  Subspace s = Subspace::row_space(m);
  // One basis vector per free column f: e_f minus the pivot entries of column f.
  std::vector<SparseVector> basis;
  const auto& piv = s.pivots();
  for (int f : s.non_pivots()) {
    std::vector<SparseVector::Term> t;
    t.emplace_back(f, 1);
    for (std::size_t k = 0; k < piv.size(); ++k) {
      Rational x = s.basis()[k].at(f);
      if (x != 0) t.emplace_back(piv[k], -x);
    }
    basis.push_back(SparseVector::from_terms(std::move(t)));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace image(const Matrix& m) { return Subspace::span(m.rows(), m.columns()); }

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  const int n = m.cols();
  // Echelonize the augmented matrix [m | rhs]; a pivot in the last column means inconsistency.
  SpanBuilder b(n + 1);
  for (int r = 0; r < m.rows(); ++r) {
    SparseVector row = m.row(r);
    if (rhs[static_cast<std::size_t>(r)] != 0) row.add_scaled(SparseVector::unit(n), rhs[static_cast<std::size_t>(r)]);
    b.add(row);
  }
  Subspace s = b.build();
  Vector x(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < s.pivots().size(); ++k) {
    int p = s.pivots()[k];
    if (p == n) return std::nullopt;
    x[static_cast<std::size_t>(p)] = s.basis()[k].at(n);
  }
  return x;
}

}  // namespace levi
