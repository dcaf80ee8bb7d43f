#include "levi/sparse_vector.hpp"

#include <algorithm>

namespace levi {

SparseVector SparseVector::unit(int index, const Rational& value) {
  SparseVector v;
  if (value != 0) v.terms_.emplace_back(index, value);
  return v;
}

SparseVector SparseVector::from_dense(const Vector& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.terms_.emplace_back(static_cast<int>(i), dense[i]);
  return v;
}

SparseVector SparseVector::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  SparseVector v;
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().first == t.first)
      v.terms_.back().second += t.second;
    else
      v.terms_.push_back(std::move(t));
  }
  std::erase_if(v.terms_, [](const Term& t) { return t.second == 0; });
  return v;
}

Vector SparseVector::to_dense(int n) const {
  Vector d(static_cast<std::size_t>(n));
  for (const auto& [i, c] : terms_) d[static_cast<std::size_t>(i)] = c;
  return d;
}

Rational SparseVector::at(int index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, int i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& c) {
  if (c == 0 || other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  Rational tmp;
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      tmp = a->second + c * b->second;
      if (tmp != 0) out.emplace_back(a->first, tmp);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  add_scaled(other, 1);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  add_scaled(other, -1);
  return *this;
}

SparseVector& SparseVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

SparseVector SparseVector::slice(int begin, int end) const {
  SparseVector v;
  for (const auto& t : terms_)
    if (t.first >= begin && t.first < end) v.terms_.push_back(t);
  return v;
}

SparseVector SparseVector::shifted(int offset) const {
  SparseVector v = *this;
  for (auto& t : v.terms_) t.first += offset;
  return v;
}

Rational dot(const SparseVector& a, const SparseVector& b) {
  Rational s = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      s += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return s;
}

void Accumulator::add(int index, const Rational& c) {
  auto i = static_cast<std::size_t>(index);
  if (!touched_[i]) {
    touched_[i] = 1;
    indices_.push_back(index);
  }
  values_[i] += c;
}

void Accumulator::add_scaled(const SparseVector& v, const Rational& c) {
  if (c == 0) return;
  for (const auto& [i, x] : v) add(i, c * x);
}

SparseVector Accumulator::take() {
  std::sort(indices_.begin(), indices_.end());
  std::vector<SparseVector::Term> terms;
  terms.reserve(indices_.size());
  for (int i : indices_) {
    auto k = static_cast<std::size_t>(i);
    if (values_[k] != 0) terms.emplace_back(i, values_[k]);
    values_[k] = 0;
    touched_[k] = 0;
  }
  indices_.clear();
  return SparseVector::from_terms(std::move(terms));
}

}  // namespace levi
