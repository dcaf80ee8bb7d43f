#include "levi/lie_algebra.hpp"

#include <algorithm>

#include "levi/error.hpp"

namespace levi {

LieAlgebra::LieAlgebra(int dim, std::string name) : dim_(dim), name_(std::move(name)) {
  if (dim < 0) throw DimensionMismatch("negative algebra dimension");
  table_.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim > 0 ? dim - 1 : 0) / 2);
}

std::size_t LieAlgebra::pair_index(int i, int j) const {
  // Row-major upper triangle without the diagonal.
  auto n = static_cast<std::size_t>(dim_);
  auto a = static_cast<std::size_t>(i);
  auto b = static_cast<std::size_t>(j);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

void LieAlgebra::check_index(int i) const {
  if (i < 0 || i >= dim_) throw DimensionMismatch("basis index out of range");
}

std::string LieAlgebra::label(int i) const {
  check_index(i);
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(i)];
  return "b" + std::to_string(i + 1);
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != dim_) throw DimensionMismatch("label count differs from dimension");
  labels_ = std::move(labels);
}

void LieAlgebra::set_grade(std::vector<int> grade) {
  if (static_cast<int>(grade.size()) != dim_) throw DimensionMismatch("grade count differs from dimension");
  grade_ = std::move(grade);
}

bool LieAlgebra::is_graded() const {
  if (!grade_) return false;
  const auto& g = *grade_;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (const auto& t : stored(i, j))
        if (g[static_cast<std::size_t>(t.first)] != g[static_cast<std::size_t>(i)] + g[static_cast<std::size_t>(j)]) return false;
  return true;
}

void LieAlgebra::add_structure_constant(int i, int j, int k, const Rational& c) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) throw PreconditionFailed("structure constant with i == j");
  if (i < j)
    table_[pair_index(i, j)].add_scaled(SparseVector::unit(k), c);
  else
    table_[pair_index(j, i)].add_scaled(SparseVector::unit(k), -c);
}

void LieAlgebra::set_bracket(int i, int j, SparseVector value) {
  check_index(i);
  check_index(j);
  if (i == j) throw PreconditionFailed("bracket of a basis vector with itself is zero");
  if (value.last() >= dim_) throw DimensionMismatch("bracket value out of range");
  if (i < j)
    table_[pair_index(i, j)] = std::move(value);
  else
    table_[pair_index(j, i)] = -std::move(value);
}

SparseVector LieAlgebra::bracket_basis(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return {};
  if (i < j) return table_[pair_index(i, j)];
  return -table_[pair_index(j, i)];
}

SparseVector LieAlgebra::bracket_with_basis(int i, const SparseVector& y) const {
  std::vector<SparseVector::Term> terms;
  for (const auto& [j, b] : y) {
    if (j == i) continue;
    const SparseVector& p = i < j ? table_[pair_index(i, j)] : table_[pair_index(j, i)];
    Rational s = i < j ? b : Rational(-b);
    for (const auto& [k, c] : p) terms.emplace_back(k, s * c);
  }
  return SparseVector::from_terms(std::move(terms));
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  if (x.last() >= dim_ || y.last() >= dim_) throw DimensionMismatch("vector length exceeds algebra dimension");
  std::vector<SparseVector::Term> terms;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      if (i == j) continue;
      const SparseVector& p = i < j ? table_[pair_index(i, j)] : table_[pair_index(j, i)];
      if (p.is_zero()) continue;
      Rational s = a * b;
      if (i > j) s = -s;
      for (const auto& [k, c] : p) terms.emplace_back(k, s * c);
    }
  return SparseVector::from_terms(std::move(terms));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw DimensionMismatch("vector length differs from algebra dimension");
  return bracket(SparseVector::from_dense(x), SparseVector::from_dense(y)).to_dense(dim_);
}

Matrix LieAlgebra::ad(const SparseVector& x) const {
  std::vector<SparseVector> cols;
  cols.reserve(static_cast<std::size_t>(dim_));
  for (int j = 0; j < dim_; ++j) cols.push_back(bracket(x, SparseVector::unit(j)));
  return Matrix::from_columns(dim_, cols);
}

std::vector<LieAlgebra::Constant> LieAlgebra::constants() const {
  std::vector<Constant> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (const auto& [k, c] : stored(i, j)) out.push_back({i, j, k, c});
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVector& v) { return v.is_zero(); });
}

LieAlgebra abelian(int d) {
  if (d < 0) throw PreconditionFailed("abelian: negative dimension");
  return LieAlgebra(d, "abelian" + std::to_string(d));
}

LieAlgebra sl2_algebra() {
  LieAlgebra s(3, "sl2");
  s.set_labels({"h", "e", "f"});
  s.add_structure_constant(0, 1, 1, 2);
  s.add_structure_constant(0, 2, 2, -2);
  s.add_structure_constant(1, 2, 0, 1);
  return s;
}

}  // namespace levi
