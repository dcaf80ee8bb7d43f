#include <catch_amalgamated.hpp>

#include "levi/analysis.hpp"
#include "levi/error.hpp"
#include "levi/fixtures.hpp"

using namespace levi;

namespace {

SparseVector e(int i) { return SparseVector::unit(i); }

// îd_V on h_n: identity on x, y and 2 on z.
Matrix id_hat(int n) {
  std::vector<Rational> d(static_cast<std::size_t>(2 * n + 1), 1);
  d.back() = 2;
  return Matrix::diagonal(d);
}

}  // namespace

TEST_CASE("brackets on fixtures") {
  LieAlgebra h1 = heisenberg(1);
  CHECK(h1.bracket(e(0), e(1)) == e(2));
  CHECK(h1.bracket(e(1), e(0)) == -e(2));
  SparseVector v = e(0) + Rational(3) * e(1) - e(2);
  CHECK(h1.bracket(v, v).is_zero());
  LieAlgebra d = dl8();
  CHECK(d.bracket(e(0), e(1)) == e(4));
  CHECK(d.bracket(e(2), e(3)) == -e(4));
  CHECK(d.bracket(e(3), e(5)) == -e(7));
  CHECK_THROWS_AS(h1.bracket(e(5), e(0)), DimensionMismatch);
  CHECK_THROWS_AS(h1.add_structure_constant(1, 1, 0, 1), PreconditionFailed);
}

TEST_CASE("glued L0(h1) product table") {
  LieAlgebra g = glued_l0_h1();
  enum { x, y, z, h, E, F };
  CHECK(g.bracket_basis(x, y) == e(z));
  CHECK(g.bracket_basis(h, x) == e(x));
  CHECK(g.bracket_basis(h, y) == -e(y));
  CHECK(g.bracket_basis(E, y) == e(x));
  CHECK(g.bracket_basis(F, x) == e(y));
  CHECK(g.bracket_basis(h, E) == Rational(2) * e(E));
  CHECK(g.bracket_basis(h, F) == Rational(-2) * e(F));
  CHECK(g.bracket_basis(E, F) == e(h));
  CHECK(g.constants().size() == 8);
  CHECK(verify_jacobi(g).ok());
}

TEST_CASE("Jacobi sweep") {
  CHECK(verify_jacobi(abelian(5)).ok());
  for (int n = 1; n <= 3; ++n) CHECK(verify_jacobi(heisenberg(n)).ok());
  CHECK(verify_jacobi(dl8()).ok());
  CHECK(verify_jacobi(dl8()).triples_checked == 56);

  // Three-dimensional: the single triple vanishes identically here, so this is a Lie algebra.
  LieAlgebra ok(3);
  ok.add_structure_constant(0, 1, 2, 1);
  ok.add_structure_constant(0, 2, 1, 1);
  CHECK(verify_jacobi(ok).ok());

  // [b1,b2] = b3, [b1,b3] = b1: J(b1,b2,b3) = [b3,b3] + 0 + [-b1,b2] = -b3.
  LieAlgebra bad(3);
  bad.add_structure_constant(0, 1, 2, 1);
  bad.add_structure_constant(0, 2, 0, 1);
  auto r = verify_jacobi(bad);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].i == 0);
  CHECK(r.violations[0].j == 1);
  CHECK(r.violations[0].k == 2);
  CHECK(r.violations[0].residual == -e(2));

  // Thread count never changes the report.
  LieAlgebra noisy = dl8();
  noisy.add_structure_constant(0, 6, 7, 1);
  noisy.add_structure_constant(2, 7, 4, Rational(1, 3));
  auto r1 = verify_jacobi(noisy, 1);
  auto r4 = verify_jacobi(noisy, 4);
  REQUIRE_FALSE(r1.ok());
  REQUIRE(r1.violations.size() == r4.violations.size());
  for (std::size_t k = 0; k < r1.violations.size(); ++k) {
    CHECK(r1.violations[k].i == r4.violations[k].i);
    CHECK(r1.violations[k].j == r4.violations[k].j);
    CHECK(r1.violations[k].k == r4.violations[k].k);
    CHECK(r1.violations[k].residual == r4.violations[k].residual);
  }
}

TEST_CASE("series, center, nilindex, type") {
  LieAlgebra h1 = heisenberg(1);
  CHECK(dims(lower_central_series(h1)) == std::vector<int>{3, 1, 0});
  CHECK(nilindex(h1) == 2);
  CHECK(type_of(h1) == 2);

  CHECK(dims(lower_central_series(abelian(4))) == std::vector<int>{4, 0});
  CHECK(nilindex(abelian(4)) == 1);
  CHECK(type_of(abelian(4)) == 4);

  LieAlgebra d = dl8();
  CHECK(dims(lower_central_series(d)) == std::vector<int>{8, 4, 2, 0});
  CHECK(nilindex(d) == 3);
  CHECK(center(d) == Subspace::span(8, {e(6), e(7)}));

  LieAlgebra h2 = heisenberg(2);
  CHECK(h2.dim() == 5);
  CHECK(center(h2).dim() == 1);

  LieAlgebra f4 = standard_filiform(4);
  CHECK(nilindex(f4) == 3);
  CHECK(type_of(f4) == 2);
  CHECK_THROWS_AS(standard_filiform(2), PreconditionFailed);

  CHECK_FALSE(is_nilpotent(sl2_algebra()));
  CHECK_THROWS_AS(nilindex(sl2_algebra()), PreconditionFailed);
  CHECK(dims(derived_series(sl2_algebra())) == std::vector<int>{3});
  CHECK(is_solvable(heisenberg(2)));
}

TEST_CASE("derivations") {
  LieAlgebra h1 = heisenberg(1);
  CHECK(is_derivation(h1, h1.ad_basis(0)));
  CHECK(is_derivation(dl8(), dl8().ad(e(0) - e(3))));
  CHECK_FALSE(is_derivation(h1, Matrix::identity(3)));
  for (int n = 1; n <= 3; ++n) CHECK(is_derivation(heisenberg(n), id_hat(n)));

  CHECK(derivation_algebra(abelian(3)).size() == 9);
  for (int n = 1; n <= 3; ++n) {
    auto der = derivation_algebra(heisenberg(n));
    CHECK(static_cast<int>(der.size()) == (n + 1) * (2 * n + 1));
    for (const auto& d : der) CHECK(is_derivation(heisenberg(n), d));
  }
}

TEST_CASE("characteristic ideals are Der-invariant") {
  for (const LieAlgebra& L : {dl8(), heisenberg(2), standard_filiform(5)}) {
    auto der = derivation_algebra(L);
    CHECK(is_invariant(der, center(L)));
    for (const auto& s : lower_central_series(L)) CHECK(is_invariant(der, s));
  }
}

TEST_CASE("matrix Lie algebra tests") {
  auto r = matrix_lie_tests(derivation_algebra(heisenberg(1)));
  CHECK(r.closed);
  CHECK_FALSE(r.solvable);
  for (int n = 4; n <= 7; ++n) {
    auto f = matrix_lie_tests(derivation_algebra(standard_filiform(n)));
    CHECK(f.closed);
    CHECK(f.solvable);
  }
  auto d = matrix_lie_tests(derivation_algebra(dl8()));
  CHECK(d.closed);
  CHECK(d.nilpotent);

  // A non-closed family reports closed = false.
  Matrix a = Matrix::dense({{0, 1}, {0, 0}});
  Matrix b = Matrix::dense({{0, 0}, {1, 0}});
  CHECK_FALSE(matrix_lie_tests({a, b}).closed);
}

TEST_CASE("Killing form and Cartan criterion") {
  CHECK(killing_form(abelian(3)).is_zero());
  CHECK(cartan_solvable(abelian(3)));
  Matrix k = killing_form(sl2_algebra());
  CHECK(k == Matrix::dense({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
  CHECK(determinant(k) != 0);
  CHECK(is_semisimple(sl2_algebra()));
  for (int n = 1; n <= 3; ++n) {
    CHECK(killing_form(heisenberg(n)).is_zero());
    CHECK(cartan_solvable(heisenberg(n)));
  }
  // Agreement with derived-series solvability on algebras built from matrices.
  for (const LieAlgebra& L : {heisenberg(1), standard_filiform(5), dl8(), glued_l0_h1()}) {
    LieAlgebra D = from_matrices(derivation_algebra(L));
    CHECK(verify_jacobi(D).ok());
    CHECK(cartan_solvable(D) == is_solvable(D));
  }
  CHECK_FALSE(cartan_solvable(glued_l0_h1()));
}

TEST_CASE("ideals and quotients") {
  LieAlgebra h1 = heisenberg(1);
  Quotient q = quotient(h1, center(h1));
  CHECK(q.algebra.dim() == 2);
  CHECK(q.algebra.is_abelian());
  CHECK(q.kept == std::vector<int>{0, 1});

  Quotient same = quotient(dl8(), Subspace(8));
  CHECK(same.algebra == dl8());
  CHECK(same.projection == Matrix::identity(8));

  CHECK_FALSE(is_ideal(h1, Subspace::span(3, {e(0)})));
  CHECK_THROWS_AS(quotient(h1, Subspace::span(3, {e(0)})), PreconditionFailed);

  LieAlgebra d = dl8();
  auto lcs = lower_central_series(d);
  Quotient qd = quotient(d, lcs[2]);
  CHECK(qd.algebra.dim() == 6);
  CHECK(verify_jacobi(qd.algebra).ok());
  CHECK(is_homomorphism(d, qd.algebra, qd.projection));
  CHECK(nilindex(qd.algebra) == 2);

  LieAlgebra s = subalgebra(d, lcs[1]);
  CHECK(s.dim() == 4);
  CHECK(verify_jacobi(s).ok());
}
