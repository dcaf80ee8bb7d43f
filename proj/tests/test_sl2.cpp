#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "levi/analysis.hpp"
#include "levi/error.hpp"
#include "levi/free_nilpotent.hpp"
#include "levi/sl2.hpp"

using namespace levi;

namespace {

SparseVector e(int i) { return SparseVector::unit(i); }

std::vector<int> sorted_desc(std::vector<int> w) {
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

// Weights of a module from its H-character: mult(w) = c(w) - c(w+2).
std::vector<int> weights_from_character(const std::map<int, int>& character) {
  std::vector<int> out;
  for (const auto& [w, c] : character) {
    if (w < 0) continue;
    auto it = character.find(w + 2);
    int m = c - (it == character.end() ? 0 : it->second);
    for (int k = 0; k < m; ++k) out.push_back(w);
  }
  return sorted_desc(out);
}

// Action on N(2,t) obtained by extending the V(1) action on the generators.
Sl2Action extended_v1(const FreeNilpotent& F) {
  Sl2Action v1 = irreducible(1);
  return Sl2Action(delta(F, v1.H()), delta(F, v1.E()), delta(F, v1.F()));
}

}  // namespace

TEST_CASE("irreducible modules follow the explicit formulas") {
  Sl2Action v0 = irreducible(0);
  CHECK(v0.H().is_zero());
  CHECK(v0.E().is_zero());
  CHECK(v0.F().is_zero());

  Sl2Action v1 = irreducible(1);
  CHECK(v1.H() == Matrix::diagonal({1, -1}));
  CHECK(v1.E().apply(e(1)) == e(0));
  CHECK(v1.F().apply(e(0)) == e(1));

  Sl2Action v2 = irreducible(2);
  CHECK(v2.H() == Matrix::diagonal({2, 0, -2}));
  CHECK(v2.E().apply(e(1)) == Rational(2) * e(0));
  CHECK(v2.E().apply(e(2)) == e(1));

  CHECK_THROWS_AS(Sl2Action(Matrix::identity(2), Matrix(2, 2), Matrix(2, 2)), PreconditionFailed);
}

TEST_CASE("tensor and wedge constructions") {
  Sl2Action w = wedge2(irreducible(1));
  CHECK(w.dim() == 1);
  CHECK(w.H().is_zero());
  CHECK(w.E().is_zero());
  Sl2Action a = direct_sum(irreducible(3), irreducible(1));
  CHECK(tensor(irreducible(0), a) == a);
  CHECK(wedge3(irreducible(1)).dim() == 0);
  CHECK(wedge3(irreducible(3)).dim() == 4);
  // ⋀³ of a 4-dim module is dual to the module itself.
  CHECK(decompose(wedge3(irreducible(3))).weights() == std::vector<int>{3});
  CHECK(decompose(wedge3(irreducible(4))).weights() == std::vector<int>{6, 2});
}

TEST_CASE("decomposition examples") {
  CHECK(decompose(tensor(irreducible(1), irreducible(1))).weights() == std::vector<int>{2, 0});
  for (int n = 0; n <= 6; ++n) CHECK(decompose(irreducible(n)).weights() == std::vector<int>{n});
  CHECK(decompose(wedge2(irreducible(10))).weights() == std::vector<int>{18, 14, 10, 6, 2});
  CHECK(clebsch_gordan(1, 1) == std::vector<int>{2, 0});
  CHECK(clebsch_gordan(5, 0) == std::vector<int>{5});
  CHECK(wedge2_weights(10) == std::vector<int>{18, 14, 10, 6, 2});
}

TEST_CASE("decompose agrees with Clebsch-Gordan") {
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) CHECK(decompose(tensor(irreducible(m), irreducible(n))).weights() == clebsch_gordan(m, n));
}

TEST_CASE("wedge2 weights from a brute-force character count") {
  for (int n = 0; n <= 12; ++n) {
    std::map<int, int> character;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) ++character[(n - 2 * i) + (n - 2 * j)];
    CHECK(weights_from_character(character) == wedge2_weights(n));
    CHECK(decompose(wedge2(irreducible(n))).weights() == wedge2_weights(n));
  }
}

TEST_CASE("decomposition invariants") {
  for (const Sl2Action& a : {tensor(irreducible(3), irreducible(2)), wedge2(irreducible(6)), block_sum({4, 0, 4, 1})}) {
    Sl2Decomposition d = decompose(a);
    CHECK(d.dim() == a.dim());
    for (std::size_t k = 1; k < d.summands.size(); ++k) CHECK(d.summands[k - 1].weight > d.summands[k].weight);
    // F-strings of the highest-weight vectors span the module.
    std::vector<SparseVector> span;
    for (const auto& s : d.summands)
      for (const auto& v : s.highest_weight.basis()) {
        CHECK(a.E().apply(v).is_zero());
        CHECK(a.H().apply(v) == Rational(s.weight) * v);
        SparseVector x = v;
        for (int k = 0; k <= s.weight; ++k) {
          span.push_back(x);
          x = a.F().apply(x);
        }
        CHECK(x.is_zero());
      }
    CHECK(Subspace::span(a.dim(), span).is_full());
  }
}

TEST_CASE("tensor square splits into wedge and symmetric parts") {
  Sl2Action a = block_sum({3, 1});
  Sl2Action t = tensor(a, a);
  const int n = a.dim();
  std::vector<SparseVector> anti;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) anti.push_back(e(i * n + j) - e(j * n + i));
  Subspace alt = Subspace::span(t.dim(), anti);
  REQUIRE(is_submodule(t, alt));
  auto w_alt = decompose(restrict_action(t, alt)).weights();
  CHECK(w_alt == decompose(wedge2(a)).weights());
  auto w_sym = decompose(quotient_action(t, alt)).weights();
  std::vector<int> all = w_alt;
  all.insert(all.end(), w_sym.begin(), w_sym.end());
  CHECK(sorted_desc(all) == decompose(t).weights());
  // H-trace bookkeeping: both parts have trace 0 and dimensions add up.
  CHECK(restrict_action(t, alt).H().trace() == 0);
  CHECK(alt.dim() + quotient_action(t, alt).dim() == t.dim());
}

TEST_CASE("restriction and quotient partition the weights") {
  Sl2Action a = block_sum({4, 2, 2, 0, 3});
  std::vector<SparseVector> seeds = {e(0) + e(5), e(10) - e(2)};
  Subspace s = submodule_generated(a, seeds);
  REQUIRE(is_submodule(a, s));
  auto w = decompose(restrict_action(a, s)).weights();
  auto q = decompose(quotient_action(a, s)).weights();
  w.insert(w.end(), q.begin(), q.end());
  CHECK(sorted_desc(w) == decompose(a).weights());
  CHECK_THROWS_AS(quotient_action(a, Subspace::span(a.dim(), {e(1)})), PreconditionFailed);
}

TEST_CASE("submodule generation") {
  CHECK(submodule_generated(irreducible(4), {e(0)}).is_full());
  Sl2Action two = block_sum({1, 1});
  Subspace diag = submodule_generated(two, {e(0) + e(2)});
  CHECK(diag.dim() == 2);
  CHECK(diag == Subspace::span(4, {e(0) + e(2), e(1) + e(3)}));
  CHECK(submodule_generated(two, {SparseVector{}}).is_zero());
}

TEST_CASE("invariant complement") {
  Sl2Action a = block_sum({2, 2, 0});
  Subspace sub = submodule_generated(a, {e(0) + e(3)});
  Subspace whole = Subspace::full(a.dim());
  Subspace c = invariant_complement(a, sub, whole);
  CHECK(is_submodule(a, c));
  CHECK(c.dim() + sub.dim() == a.dim());
  CHECK(sum(c, sub).is_full());
  CHECK(decompose(restrict_action(a, c)).weights() == std::vector<int>{2, 0});
}

TEST_CASE("equivariance of brackets") {
  auto F = free_nilpotent(2, 3);
  Sl2Action act = extended_v1(F);
  CHECK(is_equivariant_bilinear(act, F.algebra));
  CHECK(decompose(act).weights() == std::vector<int>{1, 1, 0});
  CHECK(block_weights(act, {F.block(1), F.block(2), F.block(3)}) == std::vector<int>{1, 0, 1});
  CHECK(is_equivariant_bilinear(trivial_action(F.dim()), F.algebra));

  // Mutation: perturb one structure constant; the violation is localized.
  LieAlgebra bad = F.algebra;
  bad.add_structure_constant(0, 2, 3, Rational(1, 2));
  auto v = equivariance_violations(act, bad);
  REQUIRE_FALSE(v.empty());
  bool hit = std::any_of(v.begin(), v.end(), [](const EquivarianceViolation& x) { return x.i == 0 && x.j == 2; });
  CHECK(hit);
}
