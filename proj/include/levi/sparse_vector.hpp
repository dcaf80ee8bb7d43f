#pragma once

#include <utility>
#include <vector>

#include "levi/rational.hpp"

namespace levi {

/// Sparse coordinate vector: (index, value) terms sorted by index, no stored
/// zeros. The ambient dimension is carried by whoever owns the vector.
class SparseVector {
 public:
  using Term = std::pair<int, Rational>;

  SparseVector() = default;

  static SparseVector unit(int index, const Rational& value = 1);
  static SparseVector from_dense(const Vector& v);
  /// Terms may be unsorted and repeated; they are merged and zeros dropped.
  static SparseVector from_terms(std::vector<Term> terms);

  Vector to_dense(int n) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Index of the first nonzero entry, or -1 for the zero vector.
  int leading() const { return terms_.empty() ? -1 : terms_.front().first; }
  /// Largest stored index, or -1.
  int last() const { return terms_.empty() ? -1 : terms_.back().first; }

  Rational at(int index) const;

  /// this += c * other
  void add_scaled(const SparseVector& other, const Rational& c);

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  SparseVector& operator*=(const Rational& c);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& c, SparseVector a) { return a *= c; }
  friend SparseVector operator-(SparseVector a) { return a *= Rational(-1); }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

  /// Entries restricted to [begin, end).
  SparseVector slice(int begin, int end) const;
  /// Adds offset to every index.
  SparseVector shifted(int offset) const;

 private:
  std::vector<Term> terms_;
};

Rational dot(const SparseVector& a, const SparseVector& b);

/// Dense accumulator for repeated sparse updates over a fixed dimension.
class Accumulator {
 public:
  explicit Accumulator(int n) : values_(static_cast<std::size_t>(n)), touched_(static_cast<std::size_t>(n), 0) {}

  void add(int index, const Rational& c);
  void add_scaled(const SparseVector& v, const Rational& c);
  /// Returns the accumulated vector and resets to zero.
  SparseVector take();

 private:
  std::vector<Rational> values_;
  std::vector<char> touched_;
  std::vector<int> indices_;
};

}  // namespace levi
