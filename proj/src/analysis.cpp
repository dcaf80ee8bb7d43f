#include "levi/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "levi/error.hpp"

namespace levi {

namespace {

SparseVector jacobi_residual(const LieAlgebra& L, int i, int j, int k) {
  const SparseVector& ij = L.stored(i, j);
  const SparseVector& jk = L.stored(j, k);
  const SparseVector& ik = L.stored(i, k);
  if (ij.is_zero() && jk.is_zero() && ik.is_zero()) return {};
  // [[bi,bj],bk] + [[bj,bk],bi] + [[bk,bi],bj]
  //   = -[bk,[bi,bj]] - [bi,[bj,bk]] + [bj,[bi,bk]]
  std::vector<SparseVector::Term> terms;
  auto push = [&terms](const SparseVector& v, int sign) {
    for (const auto& [m, c] : v) terms.emplace_back(m, sign > 0 ? Rational(c) : Rational(-c));
  };
  push(L.bracket_with_basis(k, ij), -1);
  push(L.bracket_with_basis(i, jk), -1);
  push(L.bracket_with_basis(j, ik), 1);
  return SparseVector::from_terms(std::move(terms));
}

}  // namespace

JacobiReport verify_jacobi(const LieAlgebra& L, int threads) {
  const int n = L.dim();
  std::vector<std::vector<JacobiViolation>> per_i(static_cast<std::size_t>(std::max(n, 0)));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next++; i < n; i = next++) {
      auto& out = per_i[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          SparseVector r = jacobi_residual(L, i, j, k);
          if (!r.is_zero()) out.push_back({i, j, k, std::move(r)});
        }
    }
  };
  threads = std::clamp(threads, 1, 64);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  JacobiReport report;
  const long long N = n;
  report.triples_checked = N * (N - 1) * (N - 2) / 6;
  for (auto& v : per_i)
    for (auto& x : v) report.violations.push_back(std::move(x));
  return report;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  SpanBuilder s(L.dim());
  if (a.is_full()) {
    for (const auto& y : b.basis())
      for (int i = 0; i < L.dim(); ++i) s.add(L.bracket_with_basis(i, y));
  } else {
    for (const auto& x : a.basis())
      for (const auto& y : b.basis()) s.add(L.bracket(x, y));
  }
  return s.build();
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::full(L.dim())};
  const Subspace full = series.front();
  while (true) {
    Subspace next = bracket_span(L, full, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::full(L.dim())};
  while (true) {
    Subspace next = bracket_span(L, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<int> dims(const std::vector<Subspace>& series) {
  std::vector<int> d;
  for (const auto& s : series) d.push_back(s.dim());
  return d;
}

Subspace center(const LieAlgebra& L) {
  const int n = L.dim();
  // x is central iff sum_i x_i c(i,j,k) = 0 for every j, k.
  std::vector<SparseVector> rows;
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<SparseVector::Term>> eq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (const auto& [k, c] : L.bracket_basis(i, j)) eq[static_cast<std::size_t>(k)].emplace_back(i, c);
    for (auto& e : eq)
      if (!e.empty()) rows.push_back(SparseVector::from_terms(std::move(e)));
  }
  return kernel(Matrix::from_rows(n, std::move(rows)));
}

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().is_zero(); }

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().is_zero(); }

int nilindex(const LieAlgebra& L) {
  auto lcs = lower_central_series(L);
  if (!lcs.back().is_zero()) throw PreconditionFailed("nilindex: algebra is not nilpotent");
  return static_cast<int>(lcs.size()) - 1;
}

int type_of(const LieAlgebra& L) {
  Subspace full = Subspace::full(L.dim());
  return L.dim() - bracket_span(L, full, full).dim();
}

std::vector<LeibnizViolation> leibniz_violations(const LieAlgebra& L, const Matrix& d) {
  const int n = L.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation matrix does not match algebra dimension");
  std::vector<SparseVector> image = d.columns();
  std::vector<LeibnizViolation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& di = image[static_cast<std::size_t>(i)];
      const auto& dj = image[static_cast<std::size_t>(j)];
      SparseVector r = apply_columns(image, L.stored(i, j));
      r -= L.bracket(di, SparseVector::unit(j));
      r -= L.bracket_with_basis(i, dj);
      if (!r.is_zero()) out.push_back({i, j, std::move(r)});
    }
  return out;
}

bool is_derivation(const LieAlgebra& L, const Matrix& d) { return leibniz_violations(L, d).empty(); }

std::vector<Matrix> derivation_algebra(const LieAlgebra& L) {
  const int n = L.dim();
  // Unknown d(r,c) sits at r*n + c. Equation (i<j, k):
  //   sum_m c(i,j,m) d(k,m) - sum_r c(r,j,k) d(r,i) - sum_r c(i,r,k) d(r,j) = 0
  std::vector<SparseVector> rows;
  std::vector<std::vector<SparseVector::Term>> eq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (const auto& [m, c] : L.stored(i, j))
        for (int k = 0; k < n; ++k) eq[static_cast<std::size_t>(k)].emplace_back(k * n + m, c);
      for (int r = 0; r < n; ++r) {
        for (const auto& [k, c] : L.bracket_basis(r, j)) eq[static_cast<std::size_t>(k)].emplace_back(r * n + i, -c);
        for (const auto& [k, c] : L.bracket_basis(i, r)) eq[static_cast<std::size_t>(k)].emplace_back(r * n + j, -c);
      }
      for (auto& e : eq) {
        if (e.empty()) continue;
        SparseVector v = SparseVector::from_terms(std::move(e));
        e.clear();
        if (!v.is_zero()) rows.push_back(std::move(v));
      }
    }
  Subspace sol = kernel(Matrix::from_rows(n * n, std::move(rows)));
  std::vector<Matrix> basis;
  for (const auto& v : sol.basis()) basis.push_back(Matrix::unvectorize(v, n, n));
  return basis;
}

namespace {

int matrix_side(const std::vector<Matrix>& basis) {
  if (basis.empty()) return 0;
  int n = basis.front().rows();
  for (const auto& m : basis)
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("matrix family must be square of one size");
  return n;
}

std::vector<Matrix> unvectorize_all(const Subspace& s, int n) {
  std::vector<Matrix> out;
  for (const auto& v : s.basis()) out.push_back(Matrix::unvectorize(v, n, n));
  return out;
}

Subspace commutator_span(const std::vector<Matrix>& a, const std::vector<Matrix>& b, int n) {
  SpanBuilder s(n * n);
  for (const auto& x : a)
    for (const auto& y : b) s.add(commutator(x, y).vectorize());
  return s.build();
}

}  // namespace

MatrixLieReport matrix_lie_tests(const std::vector<Matrix>& basis) {
  const int n = matrix_side(basis);
  MatrixLieReport r;
  std::vector<SparseVector> vecs;
  for (const auto& m : basis) vecs.push_back(m.vectorize());
  Subspace span = Subspace::span(n * n, vecs);
  r.closed = span.contains(commutator_span(basis, basis, n));
  if (!r.closed) return r;

  Subspace cur = span;
  r.derived_dims.push_back(cur.dim());
  while (!cur.is_zero()) {
    auto mats = unvectorize_all(cur, n);
    Subspace next = commutator_span(mats, mats, n);
    if (next == cur) break;
    cur = std::move(next);
    r.derived_dims.push_back(cur.dim());
  }
  r.solvable = cur.is_zero();

  auto full = unvectorize_all(span, n);
  cur = span;
  r.lower_dims.push_back(cur.dim());
  while (!cur.is_zero()) {
    Subspace next = commutator_span(full, unvectorize_all(cur, n), n);
    if (next == cur) break;
    cur = std::move(next);
    r.lower_dims.push_back(cur.dim());
  }
  r.nilpotent = cur.is_zero();
  return r;
}

LieAlgebra from_matrices(const std::vector<Matrix>& basis) {
  const int n = matrix_side(basis);
  std::vector<SparseVector> vecs;
  for (const auto& m : basis) vecs.push_back(m.vectorize());
  Coordinatizer coords(n * n, vecs);
  const int d = static_cast<int>(basis.size());
  LieAlgebra L(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto c = coords.coordinates(commutator(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]).vectorize());
      if (!c) throw PreconditionFailed("from_matrices: family is not closed under commutators");
      L.set_bracket(i, j, SparseVector::from_dense(*c));
    }
  return L;
}

Matrix killing_form(const LieAlgebra& L) {
  const int n = L.dim();
  std::vector<Matrix> ad, adt;
  for (int i = 0; i < n; ++i) {
    ad.push_back(L.ad_basis(i));
    adt.push_back(ad.back().transpose());
  }
  Matrix K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      // trace(A B) = sum_a <row_a(A), column_a(B)>
      Rational t = 0;
      for (int a = 0; a < n; ++a) t += dot(ad[static_cast<std::size_t>(i)].row(a), adt[static_cast<std::size_t>(j)].row(a));
      if (t != 0) {
        K.set(i, j, t);
        if (i != j) K.set(j, i, t);
      }
    }
  return K;
}

bool is_semisimple(const LieAlgebra& L) { return L.dim() > 0 && determinant(killing_form(L)) != 0; }

bool cartan_solvable(const LieAlgebra& L) {
  Matrix K = killing_form(L);
  Subspace full = Subspace::full(L.dim());
  Subspace d = bracket_span(L, full, full);
  return std::all_of(d.basis().begin(), d.basis().end(), [&](const SparseVector& v) { return K.apply(v).is_zero(); });
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) {
  return s.contains(bracket_span(L, s, s));
}

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim()) throw DimensionMismatch("subspace does not live in the algebra");
  for (const auto& v : s.basis())
    for (int i = 0; i < L.dim(); ++i)
      if (!s.contains(L.bracket_with_basis(i, v))) return false;
  return true;
}

bool is_invariant(const std::vector<Matrix>& maps, const Subspace& s) {
  for (const auto& m : maps) {
    auto cols = m.columns();
    for (const auto& v : s.basis())
      if (!s.contains(apply_columns(cols, v))) return false;
  }
  return true;
}

bool is_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& map) {
  if (map.rows() != target.dim() || map.cols() != source.dim()) throw DimensionMismatch("map shape does not match algebras");
  std::vector<SparseVector> img = map.columns();
  for (int i = 0; i < source.dim(); ++i)
    for (int j = i + 1; j < source.dim(); ++j)
      if (apply_columns(img, source.stored(i, j)) != target.bracket(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

Quotient quotient(const LieAlgebra& L, const Subspace& ideal) {
  if (!is_ideal(L, ideal)) throw PreconditionFailed("quotient: subspace is not an ideal");
  const int n = L.dim();
  Quotient q;
  q.kept = ideal.non_pivots();
  const int m = static_cast<int>(q.kept.size());
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < m; ++a) pos[static_cast<std::size_t>(q.kept[static_cast<std::size_t>(a)])] = a;
  auto project = [&](const SparseVector& v) {
    std::vector<SparseVector::Term> t;
    for (const auto& [i, x] : ideal.reduce(v)) t.emplace_back(pos[static_cast<std::size_t>(i)], x);
    return SparseVector::from_terms(std::move(t));
  };
  std::vector<SparseVector> cols;
  for (int c = 0; c < n; ++c) cols.push_back(project(SparseVector::unit(c)));
  q.projection = Matrix::from_columns(m, cols);

  q.algebra = LieAlgebra(m, L.name().empty() ? std::string{} : L.name() + "/I");
  std::vector<std::string> labels;
  std::vector<int> grade;
  for (int a = 0; a < m; ++a) {
    const int ia = q.kept[static_cast<std::size_t>(a)];
    if (!L.labels().empty()) labels.push_back(L.label(ia));
    if (L.grade()) grade.push_back((*L.grade())[static_cast<std::size_t>(ia)]);
    for (int b = a + 1; b < m; ++b) q.algebra.set_bracket(a, b, project(L.stored(ia, q.kept[static_cast<std::size_t>(b)])));
  }
  if (!labels.empty()) q.algebra.set_labels(std::move(labels));
  if (L.grade()) q.algebra.set_grade(std::move(grade));
  if (!is_homomorphism(L, q.algebra, q.projection)) throw Error("quotient: projection failed the homomorphism check");
  return q;
}

LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& s) {
  const auto& b = s.basis();
  LieAlgebra A(s.dim());
  for (int a = 0; a < s.dim(); ++a)
    for (int c = a + 1; c < s.dim(); ++c) {
      SparseVector v = L.bracket(b[static_cast<std::size_t>(a)], b[static_cast<std::size_t>(c)]);
      if (!s.contains(v)) throw PreconditionFailed("subalgebra: subspace is not closed under the bracket");
      A.set_bracket(a, c, SparseVector::from_dense(s.coordinates(v)));
    }
  return A;
}

}  // namespace levi
