#include "levi/free_nilpotent.hpp"

#include <algorithm>
#include <unordered_map>

#include "levi/analysis.hpp"
#include "levi/error.hpp"

namespace levi {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Integer witt_exact(int d, int m) {
  Integer sum = 0;
  for (int k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(m / k));
    sum += mobius(k) * power;
  }
  return sum / m;
}

// Rewrites brackets of Hall basis elements into the Hall basis.
class Collector {
 public:
  Collector(const std::vector<HallWord>& words, const std::unordered_map<long long, int>& index, int t)
      : words_(words), index_(index), t_(t), n_(static_cast<long long>(words.size())) {}

  SparseVector collect(int a, int b) {
    if (a == b) return {};
    if (words_[static_cast<std::size_t>(a)].degree + words_[static_cast<std::size_t>(b)].degree > t_) return {};
    if (a < b) return -collect(b, a);
    const long long key = a * n_ + b;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const HallWord& u = words_[static_cast<std::size_t>(a)];
    SparseVector result;
    if (u.is_generator() || u.right <= b) {
      result = SparseVector::unit(index_.at(key));
    } else {
      // [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]  (Jacobi), with u2 > v
      std::vector<SparseVector::Term> terms;
      for (const auto& [x, c] : collect(u.left, b))
        for (const auto& [k, e] : collect(x, u.right)) terms.emplace_back(k, c * e);
      for (const auto& [y, c] : collect(u.right, b))
        for (const auto& [k, e] : collect(u.left, y)) terms.emplace_back(k, c * e);
      result = SparseVector::from_terms(std::move(terms));
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const std::vector<HallWord>& words_;
  const std::unordered_map<long long, int>& index_;
  int t_;
  long long n_;
  std::unordered_map<long long, SparseVector> memo_;
};

}  // namespace

long long witt_oracle(int d, int m) {
  if (d < 0 || m < 1) throw PreconditionFailed("witt_oracle: need d >= 0 and m >= 1");
  Integer w = witt_exact(d, m);
  if (!w.fits_slong_p()) throw ResourceLimit("witt_oracle: count does not fit in 64 bits");
  return w.get_si();
}

long long free_nilpotent_dim(int d, int t) {
  Integer total = 0;
  for (int m = 1; m <= t; ++m) total += witt_exact(d, m);
  if (!total.fits_slong_p()) throw ResourceLimit("free nilpotent dimension does not fit in 64 bits");
  return total.get_si();
}

Subspace FreeNilpotent::block(int degree) const { return Subspace::coordinate(dim(), block_begin(degree), block_end(degree)); }

Subspace FreeNilpotent::tail(int degree) const {
  if (degree > t) return Subspace(dim());
  return Subspace::coordinate(dim(), block_begin(degree), dim());
}

std::string FreeNilpotent::word_string(int k) const {
  const HallWord& w = hall_basis[static_cast<std::size_t>(k)];
  if (w.is_generator()) return "x" + std::to_string(w.generator + 1);
  return "[" + word_string(w.left) + "," + word_string(w.right) + "]";
}

FreeNilpotent free_nilpotent(int d, int t) {
  if (d < 1 || t < 1) throw PreconditionFailed("free_nilpotent: need d >= 1 and t >= 1");
  const long long expected = free_nilpotent_dim(d, t);
  if (expected > kFreeNilpotentDimCap)
    throw ResourceLimit("free_nilpotent(" + std::to_string(d) + "," + std::to_string(t) + ") has dimension " +
                        std::to_string(expected) + ", above the cap of " + std::to_string(kFreeNilpotentDimCap));

  FreeNilpotent F;
  F.d = d;
  F.t = t;
  F.degree_offsets.push_back(0);
  auto& words = F.hall_basis;
  for (int i = 0; i < d; ++i) words.push_back({i, -1, -1, 1});
  F.degree_offsets.push_back(d);

  const long long N = expected;
  std::unordered_map<long long, int> index;  // key left*N + right
  for (int m = 2; m <= t; ++m) {
    // [u,v] is a Hall word iff u > v and, when u = [u1,u2], u2 <= v. Within a
    // degree, words are ordered lexicographically by (u, v).
    std::vector<std::pair<int, int>> fresh;
    for (int u = 0; u < static_cast<int>(words.size()); ++u) {
      const HallWord& wu = words[static_cast<std::size_t>(u)];
      const int dv = m - wu.degree;
      if (dv < 1) continue;
      for (int v = F.degree_offsets[static_cast<std::size_t>(dv - 1)]; v < F.degree_offsets[static_cast<std::size_t>(dv)] && v < u; ++v) {
        if (!wu.is_generator() && wu.right > v) continue;
        fresh.emplace_back(u, v);
      }
    }
    std::sort(fresh.begin(), fresh.end());
    for (const auto& [u, v] : fresh) {
      index.emplace(u * N + v, static_cast<int>(words.size()));
      words.push_back({-1, u, v, m});
    }
    F.degree_offsets.push_back(static_cast<int>(words.size()));
  }
  if (static_cast<long long>(words.size()) != expected) throw Error("free_nilpotent: Hall basis size disagrees with the Witt count");

  const int n = static_cast<int>(words.size());
  F.algebra = LieAlgebra(n, "N(" + std::to_string(d) + "," + std::to_string(t) + ")");
  Collector collector(words, index, t);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (words[static_cast<std::size_t>(i)].degree + words[static_cast<std::size_t>(j)].degree > t) continue;
      SparseVector v = collector.collect(i, j);
      if (!v.is_zero()) F.algebra.set_bracket(i, j, std::move(v));
    }
  std::vector<std::string> labels;
  std::vector<int> grade;
  for (int k = 0; k < n; ++k) {
    labels.push_back(F.word_string(k));
    grade.push_back(words[static_cast<std::size_t>(k)].degree);
  }
  F.algebra.set_labels(std::move(labels));
  F.algebra.set_grade(std::move(grade));
  return F;
}

std::vector<int> graded_dims(const FreeNilpotent& F) {
  std::vector<int> out;
  for (int m = 1; m <= F.t; ++m) out.push_back(F.block_end(m) - F.block_begin(m));
  return out;
}

Matrix natural_hom(const FreeNilpotent& F, const LieAlgebra& target, const std::vector<SparseVector>& G) {
  if (static_cast<int>(G.size()) != F.d) throw DimensionMismatch("natural_hom: need one image per generator");
  std::vector<SparseVector> images;
  images.reserve(static_cast<std::size_t>(F.dim()));
  for (const auto& w : F.hall_basis) {
    if (w.is_generator())
      images.push_back(G[static_cast<std::size_t>(w.generator)]);
    else
      images.push_back(target.bracket(images[static_cast<std::size_t>(w.left)], images[static_cast<std::size_t>(w.right)]));
  }
  Matrix theta = Matrix::from_columns(target.dim(), images);
  if (!is_homomorphism(F.algebra, target, theta))
    throw PreconditionFailed("natural_hom: the extension is not a homomorphism (target nilindex exceeds t?)");
  return theta;
}

Matrix derivation_extension(const FreeNilpotent& F, const Matrix& d0) {
  if (d0.rows() != F.dim() || d0.cols() != F.d) throw DimensionMismatch("derivation_extension: d0 must be dim x d");
  const auto gens = d0.columns();
  std::vector<SparseVector> images;
  images.reserve(static_cast<std::size_t>(F.dim()));
  for (int k = 0; k < F.dim(); ++k) {
    const HallWord& w = F.hall_basis[static_cast<std::size_t>(k)];
    if (w.is_generator()) {
      images.push_back(gens[static_cast<std::size_t>(w.generator)]);
      continue;
    }
    SparseVector v = F.algebra.bracket(images[static_cast<std::size_t>(w.left)], SparseVector::unit(w.right));
    v += F.algebra.bracket_with_basis(w.left, images[static_cast<std::size_t>(w.right)]);
    images.push_back(std::move(v));
  }
  return Matrix::from_columns(F.dim(), images);
}

Matrix delta(const FreeNilpotent& F, const Matrix& map) {
  if (map.rows() != F.d || map.cols() != F.d) throw DimensionMismatch("delta: map must be d x d");
  // Generators occupy indices 0..d-1, so the columns embed unchanged.
  return derivation_extension(F, Matrix::from_columns(F.dim(), map.columns()));
}

std::vector<Matrix> delta_hom(const FreeNilpotent& F, const std::vector<Matrix>& maps) {
  std::vector<Matrix> out;
  out.reserve(maps.size());
  for (const auto& m : maps) out.push_back(delta(F, m));
  return out;
}

int wedge_pair_index(int m, int b, int c) {
  if (!(0 <= b && b < c && c < m)) throw DimensionMismatch("wedge_pair_index: need 0 <= b < c < m");
  return b * m - b * (b + 1) / 2 + (c - b - 1);
}

SparseVector s_projection(int m, int a, int b, int c) {
  const int pairs = m * (m - 1) / 2;
  std::vector<SparseVector::Term> terms;
  // coef * x_p ⊗ (x_q ∧ x_r)
  auto add = [&](const Rational& coef, int p, int q, int r) {
    if (q == r) return;
    Rational s = coef;
    if (q > r) {
      std::swap(q, r);
      s = -s;
    }
    terms.emplace_back(p * pairs + wedge_pair_index(m, q, r), s);
  };
  add(Rational(2, 3), a, b, c);
  add(Rational(1, 3), b, a, c);
  add(Rational(1, 3), c, b, a);
  return SparseVector::from_terms(std::move(terms));
}

LieAlgebra wedge_model_2(int m) {
  if (m < 2) throw PreconditionFailed("wedge_model_2: need m >= 2");
  const int pairs = m * (m - 1) / 2;
  LieAlgebra L(m + pairs, "N(m,2), dim m = " + std::to_string(m));
  std::vector<std::string> labels;
  std::vector<int> grade;
  for (int i = 0; i < m; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    grade.push_back(1);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      labels.push_back("x" + std::to_string(i + 1) + "^x" + std::to_string(j + 1));
      grade.push_back(2);
      L.add_structure_constant(i, j, m + wedge_pair_index(m, i, j), 1);
    }
  L.set_labels(std::move(labels));
  L.set_grade(std::move(grade));
  return L;
}

WedgeModel3 wedge_model_3(int m) {
  if (m < 2) throw PreconditionFailed("wedge_model_3: need m >= 2");
  const int pairs = m * (m - 1) / 2;
  WedgeModel3 W;
  W.m = m;
  std::vector<SparseVector> images;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = b + 1; c < m; ++c) images.push_back(s_projection(m, a, b, c));
  W.s_space = Subspace::span(m * pairs, images);

  const int sdim = W.s_space.dim();
  LieAlgebra L(m + pairs + sdim, "N(m,3), dim m = " + std::to_string(m));
  std::vector<std::string> labels;
  std::vector<int> grade;
  for (int i = 0; i < m; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    grade.push_back(1);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      labels.push_back("x" + std::to_string(i + 1) + "^x" + std::to_string(j + 1));
      grade.push_back(2);
      L.add_structure_constant(i, j, m + wedge_pair_index(m, i, j), 1);
    }
  for (int k = 0; k < sdim; ++k) {
    labels.push_back("s" + std::to_string(k + 1));
    grade.push_back(3);
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        Vector coords = W.s_space.coordinates(s_projection(m, a, b, c));
        L.set_bracket(a, m + wedge_pair_index(m, b, c), SparseVector::from_dense(coords).shifted(m + pairs));
      }
  L.set_labels(std::move(labels));
  L.set_grade(std::move(grade));
  W.algebra = std::move(L);
  return W;
}

}  // namespace levi
