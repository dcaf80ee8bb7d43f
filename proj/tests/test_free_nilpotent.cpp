#include <catch_amalgamated.hpp>

#include <random>

#include "levi/analysis.hpp"
#include "levi/error.hpp"
#include "levi/fixtures.hpp"
#include "levi/free_nilpotent.hpp"

using namespace levi;

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Brute-force necklace count: primitive words of length m over d letters up to
// rotation, counted by listing every word and its rotations.
long long lyndon_brute(int d, int m) {
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= d;
  long long count = 0;
  std::vector<int> w(static_cast<std::size_t>(m));
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < m; ++i) {
      w[static_cast<std::size_t>(i)] = static_cast<int>(c % d);
      c /= d;
    }
    // Lyndon words: strictly smaller than every proper rotation.
    bool lyndon = true;
    for (int r = 1; r < m && lyndon; ++r) {
      std::vector<int> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      if (!(w < rot)) lyndon = false;
    }
    if (lyndon) ++count;
  }
  return count;
}

Matrix random_square(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      m.set(r, c, q);
    }
  return m;
}

std::vector<SparseVector> units(int count) {
  std::vector<SparseVector> g;
  for (int i = 0; i < count; ++i) g.push_back(SparseVector::unit(i));
  return g;
}

}  // namespace

TEST_CASE("free nilpotent dimensions") {
  CHECK(free_nilpotent(2, 2).dim() == 3);
  for (int d = 1; d <= 4; ++d) {
    auto F = free_nilpotent(d, 1);
    CHECK(F.dim() == d);
    CHECK(F.algebra.is_abelian());
  }
  auto F23 = free_nilpotent(2, 3);
  CHECK(F23.dim() == 5);
  CHECK(graded_dims(F23) == std::vector<int>{2, 1, 2});
  CHECK(free_nilpotent(3, 3).dim() == 14);
  for (int d = 2; d <= 5; ++d) {
    CHECK(free_nilpotent(d, 2).dim() == binom(d + 1, 2));
    CHECK(free_nilpotent(d, 3).dim() == binom(d + 1, 2) + 2 * binom(d + 1, 3));
  }
  CHECK_THROWS_AS(free_nilpotent(0, 2), PreconditionFailed);
  CHECK_THROWS_AS(free_nilpotent(20, 4), ResourceLimit);
}

TEST_CASE("Witt oracle") {
  CHECK(witt_oracle(2, 2) == 1);
  CHECK(witt_oracle(2, 3) == 2);
  CHECK(witt_oracle(3, 3) == 8);
  for (int d = 1; d <= 4; ++d)
    for (int m = 1; m <= 6; ++m) CHECK(witt_oracle(d, m) == lyndon_brute(d, m));
  for (int d = 1; d <= 4; ++d)
    for (int t = 1; t <= 5; ++t) {
      auto g = graded_dims(free_nilpotent(d, t));
      for (int m = 1; m <= t; ++m) CHECK(g[static_cast<std::size_t>(m - 1)] == witt_oracle(d, m));
    }
}

TEST_CASE("Hall basis shape") {
  auto F = free_nilpotent(2, 3);
  CHECK(F.word_string(2) == "[x2,x1]");
  CHECK(F.word_string(3) == "[[x2,x1],x1]");
  CHECK(F.word_string(4) == "[[x2,x1],x2]");
  CHECK(F.algebra.is_graded());
  for (int k = 0; k < F.dim(); ++k) CHECK((*F.algebra.grade())[static_cast<std::size_t>(k)] == F.hall_basis[static_cast<std::size_t>(k)].degree);
}

TEST_CASE("Jacobi on free nilpotent algebras") {
  for (auto [d, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 3}, {2, 5}}) {
    auto F = free_nilpotent(d, t);
    INFO("d=" << d << " t=" << t);
    CHECK(verify_jacobi(F.algebra).ok());
    CHECK(nilindex(F.algebra) == t);
    CHECK(type_of(F.algebra) == d);
    CHECK(F.algebra.is_graded());
  }
}

TEST_CASE("natural homomorphisms") {
  auto F = free_nilpotent(2, 2);
  Matrix th = natural_hom(F, heisenberg(1), units(2));
  CHECK(rank(th) == 3);
  CHECK(kernel(th).is_zero());

  Matrix ab = natural_hom(F, abelian(2), units(2));
  CHECK(kernel(ab) == F.block(2));

  // h1 has nilindex 2; a t = 1 free algebra cannot map onto it homomorphically.
  CHECK_THROWS_AS(natural_hom(free_nilpotent(2, 1), heisenberg(1), units(2)), PreconditionFailed);

  // Universal property smoke test on the nilpotent fixtures.
  for (const LieAlgebra& N : {heisenberg(1), heisenberg(2), heisenberg(3), standard_filiform(4), standard_filiform(5), dl8()}) {
    INFO(N.name());
    const int t = nilindex(N);
    auto lcs = lower_central_series(N);
    std::vector<SparseVector> gens;
    for (int c : lcs[1].non_pivots()) gens.push_back(SparseVector::unit(c));
    REQUIRE(static_cast<int>(gens.size()) == type_of(N));
    auto FN = free_nilpotent(static_cast<int>(gens.size()), t);
    Matrix theta = natural_hom(FN, N, gens);
    CHECK(rank(theta) == N.dim());
    CHECK(is_ideal(FN.algebra, kernel(theta)));
  }
}

TEST_CASE("quotient of free nilpotent by its degree-2 block") {
  auto F = free_nilpotent(2, 2);
  Quotient q = quotient(F.algebra, F.block(2));
  CHECK(q.algebra.dim() == 2);
  CHECK(q.algebra.is_abelian());
}

TEST_CASE("derivation extension") {
  for (auto [d, t] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}}) {
    auto F = free_nilpotent(d, t);
    Matrix grading = delta(F, Matrix::identity(d));
    std::vector<Rational> diag;
    for (const auto& w : F.hall_basis) diag.push_back(w.degree);
    CHECK(grading == Matrix::diagonal(diag));
    CHECK(is_derivation(F.algebra, grading));
    CHECK(delta(F, Matrix(d, d)).is_zero());
  }
  // e acting on V(1): e a1 = a0, e a0 = 0; x = a0, y = a1.
  auto F = free_nilpotent(2, 2);
  Matrix e = Matrix::dense({{0, 1}, {0, 0}});
  Matrix de = delta(F, e);
  CHECK(is_derivation(F.algebra, de));
  CHECK(de.apply(SparseVector::unit(2)).is_zero());
  // Images of generators may land anywhere in F.
  Matrix d0(F.dim(), 2);
  d0.set(2, 0, 1);
  Matrix ext = derivation_extension(F, d0);
  CHECK(is_derivation(F.algebra, ext));
}

TEST_CASE("Delta is an injective homomorphism") {
  auto F23 = free_nilpotent(2, 3);
  Matrix h = Matrix::dense({{1, 0}, {0, -1}});
  Matrix e = Matrix::dense({{0, 1}, {0, 0}});
  Matrix f = Matrix::dense({{0, 0}, {1, 0}});
  CHECK(commutator(delta(F23, e), delta(F23, f)) == delta(F23, h));

  std::mt19937 rng(12345);
  for (auto [d, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    auto F = free_nilpotent(d, t);
    for (int trial = 0; trial < 40; ++trial) {
      Matrix a = random_square(rng, d), b = random_square(rng, d);
      Matrix da = delta(F, a), db = delta(F, b);
      CHECK(delta(F, commutator(a, b)) == commutator(da, db));
      CHECK(is_derivation(F.algebra, da));
      CHECK(da.is_zero() == a.is_zero());
    }
  }
}

TEST_CASE("wedge models") {
  auto W = wedge_model_3(2);
  CHECK(W.algebra.dim() == 5);
  // [x, x∧y] = x⊗(x∧y), itself the first 𝔰-basis vector.
  CHECK(s_projection(2, 0, 0, 1) == SparseVector::unit(0));
  CHECK(W.algebra.bracket_basis(0, 2) == SparseVector::unit(3));

  auto W3 = wedge_model_3(3);
  CHECK(W3.algebra.dim() == 14);
  CHECK(W3.s_space.dim() == 8);
  // Cyclic sum of projections vanishes, so Jacobi holds for generators.
  SparseVector cyc = s_projection(3, 0, 1, 2) + s_projection(3, 1, 2, 0) + s_projection(3, 2, 0, 1);
  CHECK(cyc.is_zero());

  for (int t = 2; t <= 3; ++t)
    for (int d = 2; d <= 4; ++d) {
      INFO("t=" << t << " d=" << d);
      LieAlgebra M = t == 2 ? wedge_model_2(d) : wedge_model_3(d).algebra;
      CHECK(verify_jacobi(M).ok());
      auto F = free_nilpotent(d, t);
      REQUIRE(M.dim() == F.dim());
      Matrix theta = natural_hom(F, M, units(d));
      CHECK(rank(theta) == M.dim());
      // Grade preserving: each Hall word maps into the block of its degree.
      const auto& g = *M.grade();
      bool graded = true;
      for (int k = 0; k < F.dim(); ++k)
        for (const auto& [i, x] : theta.column(k))
          if (g[static_cast<std::size_t>(i)] != F.hall_basis[static_cast<std::size_t>(k)].degree) graded = false;
      CHECK(graded);
    }
}
