#include "levi/subspace.hpp"

#include <algorithm>

#include "levi/error.hpp"

namespace levi {

SpanBuilder::SpanBuilder(int ambient_dim)
    : ambient_(ambient_dim), pivot_row_(static_cast<std::size_t>(ambient_dim), -1) {}

SparseVector SpanBuilder::eliminate(const SparseVector& v, bool full) const {
  if (v.last() >= ambient_) throw DimensionMismatch("vector index out of range for span");
  if (v.is_zero() || rows_.empty()) return v;
  if (scratch_.size() != static_cast<std::size_t>(ambient_)) scratch_.assign(static_cast<std::size_t>(ambient_), Rational(0));
  Vector& w = scratch_;
  for (const auto& [i, x] : v) w[static_cast<std::size_t>(i)] = x;
  Rational c;
  for (int col = v.leading(); col < ambient_; ++col) {
    auto k = static_cast<std::size_t>(col);
    if (sgn(w[k]) == 0) continue;
    int r = pivot_row_[k];
    if (r < 0) {
      if (!full) break;
      continue;
    }
    c = w[k];
    for (const auto& [i, x] : rows_[static_cast<std::size_t>(r)]) w[static_cast<std::size_t>(i)] -= c * x;
  }
  std::vector<SparseVector::Term> terms;
  for (int col = v.leading(); col < ambient_; ++col) {
    auto k = static_cast<std::size_t>(col);
    if (sgn(w[k]) != 0) {
      terms.emplace_back(col, w[k]);
      w[k] = 0;
    }
  }
  return SparseVector::from_terms(std::move(terms));
}

SparseVector SpanBuilder::reduce(const SparseVector& v) const { return eliminate(v, true); }

bool SpanBuilder::contains(const SparseVector& v) const { return eliminate(v, false).is_zero(); }

bool SpanBuilder::add(const SparseVector& v) {
  SparseVector r = eliminate(v, false);
  if (r.is_zero()) return false;
  Rational lead = r.terms().front().second;
  r *= Rational(1) / lead;
  pivot_row_[static_cast<std::size_t>(r.leading())] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

Subspace SpanBuilder::build() const {
  std::vector<SparseVector> rows = rows_;
  std::sort(rows.begin(), rows.end(), [](const SparseVector& a, const SparseVector& b) { return a.leading() < b.leading(); });
  // Back-substitution, last pivot first; row i is already clear of all later pivots.
  for (std::size_t i = rows.size(); i-- > 0;) {
    const int p = rows[i].leading();
    for (std::size_t j = 0; j < i; ++j) {
      Rational c = rows[j].at(p);
      if (c != 0) rows[j].add_scaled(rows[i], -c);
    }
  }
  Subspace s(ambient_);
  s.pivots_.reserve(rows.size());
  for (const auto& r : rows) s.pivots_.push_back(r.leading());
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::span(int ambient_dim, const std::vector<SparseVector>& vectors) {
  SpanBuilder b(ambient_dim);
  for (const auto& v : vectors) b.add(v);
  return b.build();
}

Subspace Subspace::row_space(const Matrix& m) {
  SpanBuilder b(m.cols());
  for (int r = 0; r < m.rows(); ++r) b.add(m.row(r));
  return b.build();
}

Subspace Subspace::full(int ambient_dim) { return coordinate(ambient_dim, 0, ambient_dim); }

Subspace Subspace::coordinate(int ambient_dim, int begin, int end) {
  if (begin < 0 || end > ambient_dim || begin > end) throw DimensionMismatch("coordinate block out of range");
  Subspace s(ambient_dim);
  for (int i = begin; i < end; ++i) {
    s.basis_.push_back(SparseVector::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<int> Subspace::non_pivots() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Matrix Subspace::as_matrix() const { return Matrix::from_rows(ambient_, basis_); }

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (v.last() >= ambient_) throw DimensionMismatch("vector index out of range for subspace");
  if (basis_.empty() || v.is_zero()) return v;
  // Coefficients are read off the pivot entries of v itself, since RREF rows
  // vanish on every other pivot column.
  std::vector<SparseVector::Term> terms(v.terms());
  std::size_t k = 0;
  for (const auto& [i, x] : v) {
    while (k < pivots_.size() && pivots_[k] < i) ++k;
    if (k < pivots_.size() && pivots_[k] == i)
      for (const auto& [j, y] : basis_[k]) terms.emplace_back(j, -x * y);
  }
  return SparseVector::from_terms(std::move(terms));
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const SparseVector& v) { return contains(v); });
}

Vector Subspace::coordinates(const SparseVector& v) const {
  Vector c(basis_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v.at(pivots_[k]);
  return c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  SpanBuilder s(a.ambient_dim());
  for (const auto& v : a.basis()) s.add(v);
  for (const auto& v : b.basis()) s.add(v);
  return s.build();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  const int n = a.ambient_dim();
  // Zassenhaus: echelonize rows (a|a) and (b|0); rows whose left half vanishes
  // span the intersection in their right half.
  std::vector<SparseVector> rows;
  for (const auto& v : a.basis()) rows.push_back(v + v.shifted(n));
  for (const auto& v : b.basis()) rows.push_back(v);
  Subspace z = Subspace::span(2 * n, rows);
  std::vector<SparseVector> out;
  for (const auto& r : z.basis())
    if (r.leading() >= n) out.push_back(r.shifted(-n));
  return Subspace::span(n, out);
}

Subspace complement_within(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  if (!b.contains(a)) throw PreconditionFailed("complement_within: first subspace is not contained in the second");
  std::vector<SparseVector> out;
  const auto& ap = a.pivots();
  for (std::size_t k = 0; k < b.basis().size(); ++k)
    if (!std::binary_search(ap.begin(), ap.end(), b.pivots()[k])) out.push_back(b.basis()[k]);
  return Subspace::span(a.ambient_dim(), out);
}

Coordinatizer::Coordinatizer(int ambient_dim, const std::vector<SparseVector>& family)
    : ambient_(ambient_dim), size_(static_cast<int>(family.size())) {
  std::vector<SparseVector> rows;
  rows.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].last() >= ambient_dim) throw DimensionMismatch("family vector out of range");
    rows.push_back(family[i] + SparseVector::unit(ambient_dim + static_cast<int>(i)));
  }
  augmented_ = Subspace::span(ambient_dim + size_, rows);
  std::vector<SparseVector> left;
  for (const auto& r : augmented_.basis()) {
    if (r.leading() >= ambient_dim) throw PreconditionFailed("Coordinatizer: family is linearly dependent");
    left.push_back(r.slice(0, ambient_dim));
  }
  span_ = Subspace::span(ambient_dim, left);
}

std::optional<Vector> Coordinatizer::coordinates(const SparseVector& v) const {
  // Reducing (v | 0) leaves (0 | -c) exactly when v = sum c_i family_i.
  SparseVector r = augmented_.reduce(v);
  if (r.leading() >= 0 && r.leading() < ambient_) return std::nullopt;
  Vector c(static_cast<std::size_t>(size_));
  for (const auto& [i, x] : r) c[static_cast<std::size_t>(i - ambient_)] = -x;
  return c;
}

}  // namespace levi
