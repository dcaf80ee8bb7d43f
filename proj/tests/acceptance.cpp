// Acceptance run: one PASS/FAIL line per criterion, each with its pinned time
// budget. Exit status is 1 when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "levi/analysis.hpp"
#include "levi/error.hpp"
#include "levi/fixtures.hpp"
#include "levi/free_nilpotent.hpp"
#include "levi/levi.hpp"
#include "levi/repair.hpp"
#include "levi/sl2.hpp"
#include "levi/table2.hpp"
#include "levi/weyl.hpp"

using namespace levi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // Records a check; the first few failures are named in the detail.
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = "failed: " + what;
    else if (detail.size() < 400) detail += "; " + what;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SparseVector e(int i) { return SparseVector::unit(i); }

Outcome dimension_formulas() {
  Outcome o;
  for (int d = 2; d <= 5; ++d) {
    const int n2 = free_nilpotent(d, 2).dim(), n3 = free_nilpotent(d, 3).dim();
    o.check(n2 == binom(d + 1, 2), "dim N(" + std::to_string(d) + ",2)=" + std::to_string(n2));
    o.check(n3 == binom(d + 1, 2) + 2 * binom(d + 1, 3), "dim N(" + std::to_string(d) + ",3)=" + std::to_string(n3));
  }
  if (o.pass) o.detail = "d=2..5: C(d+1,2) and C(d+1,2)+2C(d+1,3) exact";
  return o;
}

Outcome witt() {
  Outcome o;
  int blocks = 0;
  for (int d = 1; d <= 4; ++d)
    for (int t = 1; t <= 5; ++t) {
      const auto g = graded_dims(free_nilpotent(d, t));
      for (int m = 1; m <= t; ++m, ++blocks)
        o.check(g[static_cast<std::size_t>(m - 1)] == witt_oracle(d, m), "degree " + std::to_string(m) + " of N(" + std::to_string(d) + "," + std::to_string(t) + ")");
    }
  const auto F = free_nilpotent(3, 4);
  const JacobiReport j = verify_jacobi(F.algebra, 4);
  o.check(j.ok(), "Jacobi on N(3,4)");
  if (o.pass) o.detail = std::to_string(blocks) + " graded blocks match necklace counts; N(3,4) dim " + std::to_string(F.dim()) + ", " + std::to_string(j.triples_checked) + " triples clean";
  return o;
}

// r_n = k·id_hat ⊕ {δ : δ(V) ⊆ kz, δ(z) = 0} inside Der(h_n).
std::vector<Matrix> r_n(int n) {
  const int dim = 2 * n + 1;
  std::vector<Matrix> out;
  Matrix id_hat(dim, dim);
  for (int i = 0; i < 2 * n; ++i) id_hat.set(i, i, 1);
  id_hat.set(2 * n, 2 * n, 2);
  out.push_back(id_hat);
  for (int i = 0; i < 2 * n; ++i) {
    Matrix m(dim, dim);
    m.set(2 * n, i, 1);
    out.push_back(m);
  }
  return out;
}

Outcome heisenberg_derivations() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const std::string tag = "h" + std::to_string(n);
    const LieAlgebra h = heisenberg(n);
    const auto der = derivation_algebra(h);
    o.check(static_cast<int>(der.size()) == (n + 1) * (2 * n + 1), "dim Der " + tag + "=" + std::to_string(der.size()));
    // Basis of Der starting with r_n, then completed from the computed basis.
    std::vector<Matrix> basis = r_n(n);
    std::vector<SparseVector> flat;
    for (const auto& m : basis) {
      o.check(is_derivation(h, m), tag + ": r_n element not a derivation");
      flat.push_back(m.vectorize());
    }
    Subspace span = Subspace::span((2 * n + 1) * (2 * n + 1), flat);
    for (const auto& m : der) {
      if (span.contains(m.vectorize())) continue;
      basis.push_back(m);
      flat.push_back(m.vectorize());
      span = Subspace::span(span.ambient_dim(), flat);
    }
    o.check(basis.size() == der.size(), tag + ": r_n not inside Der");
    const LieAlgebra D = from_matrices(basis);
    const Subspace r = Subspace::coordinate(D.dim(), 0, 2 * n + 1);
    o.check(is_ideal(D, r), tag + ": r_n not an ideal");
    o.check(is_solvable(subalgebra(D, r)), tag + ": r_n not solvable");
    const LieAlgebra levi_factor = quotient(D, r).algebra;
    o.check(determinant(killing_form(levi_factor)) != 0, tag + ": Killing form of Der/r_n degenerate");
    if (n == 1) o.check(!is_solvable(D), "Der h1 solvable");
  }
  if (o.pass) o.detail = "dims 6,15,28; Der h1 not solvable; r_n solvable ideal, Der/r_n = sp_2n with nondegenerate Killing form";
  return o;
}

Representation sp2_on_h1() {
  const Sl2Action v1 = irreducible(1);
  return sl2_representation(Sl2Action(direct_sum(v1.H(), Matrix(1, 1)), direct_sum(v1.E(), Matrix(1, 1)), direct_sum(v1.F(), Matrix(1, 1))));
}

Outcome filiform_no_go() {
  Outcome o;
  for (int n = 4; n <= 7; ++n) {
    const auto r = matrix_lie_tests(derivation_algebra(standard_filiform(n)));
    o.check(r.closed && r.solvable, "Der F" + std::to_string(n) + " not solvable");
  }
  const GluedAlgebra g = glue(sl2_algebra(), heisenberg(1), sp2_on_h1());
  const auto got = g.algebra.constants(), want = glued_l0_h1().constants();
  bool same = got.size() == want.size();
  for (std::size_t i = 0; same && i < got.size(); ++i)
    same = got[i].i == want[i].i && got[i].j == want[i].j && got[i].k == want[i].k && got[i].c == want[i].c;
  o.check(same, "glued sl2 + h1 table differs");
  o.check(g.warnings.empty() && verify_jacobi(g.algebra).ok(), "glued algebra invalid");
  if (o.pass) o.detail = "Der solvable for n=4..7; sl2 glue on h1 matches " + std::to_string(want.size()) + " constants";
  return o;
}

Outcome cn_algebra() {
  Outcome o;
  const LieAlgebra d = dl8();
  const auto r = matrix_lie_tests(derivation_algebra(d));
  o.check(r.closed && r.nilpotent, "Der Dl8 not nilpotent");
  o.check(center(d) == Subspace::span(8, {e(6), e(7)}), "center differs from span{a7,a8}");
  const auto lcs = dims(lower_central_series(d));
  o.check(lcs == std::vector<int>{8, 4, 2, 0}, "lcs " + join(lcs));
  if (o.pass) o.detail = "Der nilpotent, Z = span{a7,a8}, lcs (8,4,2,0)";
  return o;
}

Outcome cn_extension_check() {
  Outcome o;
  const CnExtension c = cn_extension(dl8(), e(6), 1);
  o.check(c.nilindex == 3, "nilindex " + std::to_string(c.nilindex));
  o.check(c.symplectic_are_derivations, "symplectic block not derivations");
  Matrix h(10, 10), ee(10, 10), f(10, 10);
  h.set(8, 8, 1);
  h.set(9, 9, -1);
  ee.set(8, 9, 1);
  f.set(9, 8, 1);
  for (const Matrix& m : {h, ee, f}) o.check(is_derivation(c.algebra, m), "sp2 generator not a derivation");
  const auto w = decompose(Sl2Action(h, ee, f)).weights();
  o.check(w == std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0, 0}, "weights " + join(w));
  if (o.pass) o.detail = "dim 10, nilindex 3, weights " + join(w) + ", sp2 acts by derivations";
  return o;
}

Outcome module_examples() {
  Outcome o;
  const auto F = free_nilpotent(2, 3);
  const Representation r = extend_to_free(F, sl2_representation(irreducible(1)));
  const auto w = block_weights(sl2_action(r), {F.block(1), F.block(2), F.block(3)});
  o.check(w == std::vector<int>{1, 0, 1}, "N(V(1),3) weights " + join(w));
  const GluedAlgebra g = glue(sl2_algebra(), F.algebra, r);
  std::vector<Matrix> ad;
  for (int i = 0; i < 3; ++i) ad.push_back(g.algebra.ad_basis(F.dim() + i));
  const auto gw = block_weights(Sl2Action(ad[0], ad[1], ad[2]),
                                {g.s_block(), Subspace::coordinate(8, 0, 2), Subspace::coordinate(8, 2, 3), Subspace::coordinate(8, 3, 5)});
  o.check(gw == std::vector<int>{2, 1, 0, 1}, "glued weights " + join(gw));
  o.check(clebsch_gordan(1, 1) == std::vector<int>{2, 0}, "clebsch_gordan(1,1)");
  if (o.pass) o.detail = "N(V(1),3) " + join(w) + ", glued " + join(gw) + ", V(1)xV(1) = V(2)+V(0)";
  return o;
}

Outcome table1() {
  Outcome o;
  int ok = 0;
  std::vector<std::string> findings;
  const auto lines = table1_audit();
  for (const auto& l : lines) {
    if (l.ok()) {
      ++ok;
      continue;
    }
    findings.push_back(l.format());
  }
  o.pass = findings.empty();
  std::ostringstream d;
  d << ok << "/" << lines.size() << " identities hold";
  for (const auto& f : findings) d << "; " << f;
  o.detail = d.str();
  return o;
}

Outcome table2_check() {
  Outcome o;
  const LieAlgebra L = table2();
  const Sl2Action act = table2_action();
  o.check(L.dim() == 52, "dim " + std::to_string(L.dim()));
  const JacobiReport j = verify_jacobi(L, 4);
  o.check(j.triples_checked == 22100, "triples " + std::to_string(j.triples_checked));
  const auto lcs = dims(lower_central_series(L));
  o.check(lcs == std::vector<int>{52, 41, 15, 0}, "lcs " + join(lcs));
  o.check(type_of(L) == 11, "type");
  const auto eqv = equivariance_violations(act, L);

  std::ostringstream d;
  d << "as transcribed: " << j.violations.size() << " Jacobi triples, " << eqv.size() << " equivariance equations";
  if (!j.ok() || !eqv.empty()) {
    const EquivariantRepair r = repair_equivariant(L, act);
    o.check(r.ok, "repair: " + r.message);
    if (r.ok) {
      o.check(!r.diff.empty(), "violations but empty diff");
      for (const auto& c : r.diff)
        d << "; repair " << L.label(c.i) << "," << L.label(c.j) << " on " << L.label(c.k) << ": " << to_string(c.before) << " -> " << to_string(c.after);
      const JacobiReport j2 = verify_jacobi(r.repaired, 4);
      o.check(j2.ok(), "Jacobi after repair");
      o.check(is_equivariant_bilinear(act, r.repaired), "equivariance after repair");
      o.check(dims(lower_central_series(r.repaired)) == std::vector<int>{52, 41, 15, 0}, "lcs after repair");
      o.check(type_of(r.repaired) == 11, "type after repair");
      d << "; repaired: Jacobi, equivariance, lcs (52,41,15,0), type 11 hold";
    }
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome nqc() {
  Outcome o;
  const auto F = free_nilpotent(11, 3);
  o.check(F.dim() == 506, "dim N(11,3)");
  const Representation rho = extend_to_free(F, sl2_representation(irreducible(10)));
  const auto w2 = decompose_within(sl2_action(rho), F.block(2)).weights();
  o.check(w2 == std::vector<int>{18, 14, 10, 6, 2}, "degree-2 weights " + join(w2));

  const LieAlgebra repaired = repair_equivariant(table2(), table2_action()).repaired;
  const GeneratorKernel k = table2_kernel(repaired);
  o.check(k.surjective, "theta not surjective");
  o.check(k.kernel.subspace.dim() == 454, "dim ker " + std::to_string(k.kernel.subspace.dim()));
  o.check(k.kernel.is_ideal && k.kernel.is_invariant, "ker not an invariant ideal");
  o.check(!k.homogeneous, "ker homogeneous");

  const NqcReconstruction r = reconstruct_non_quasi_cyclic(1);
  o.check(r.graph.ok, "graph quotient failed");
  if (r.graph.ok) {
    const LieAlgebra& Q = r.graph.quotient->quotient.algebra;
    o.check(Q.dim() == 52 && type_of(Q) == 11 && nilindex(Q) == 3, "graph quotient shape");
    o.check(!is_homogeneous_ideal(r.free, r.graph.ideal->subspace), "graph ideal homogeneous");
    o.check(r.block_dims == std::vector<int>{11, 19, 7, 15}, "blocks " + join(r.block_dims));
  }
  if (o.pass) o.detail = "N(11,3) dim 506, degree 2 " + join(w2) + "; ker onto repaired table: dim 454, invariant, non-homogeneous; graph quotient 52-dim type 11 nilindex 3 blocks (11,19,7,15), non-homogeneous";
  return o;
}

Outcome heisenberg_quotients() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const HeisenbergQuotient h = heisenberg_quotient(n);
    const std::string tag = "n=" + std::to_string(n);
    o.check(h.quotient.algebra.dim() == 2 * n + 1, tag + " dim");
    o.check(h.center_dim == 1 && h.center_is_derived, tag + " center");
    o.check(h.form_nondegenerate, tag + " form degenerate");
    o.check(h.symplectic_descends, tag + " symplectic maps do not descend");
    o.check(h.ok(), tag + " report");
  }
  if (o.pass) o.detail = "n=1..3: dim 2n+1, Z = [h,h] of dim 1, nondegenerate form, sp_2n descends";
  return o;
}

Matrix random_square(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> v(-3, 3);
  Matrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.set(r, c, v(rng));
  return m;
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(20120611);

  // Δ is a homomorphism gl(d) -> Der N(d,t).
  const auto F = free_nilpotent(3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = random_square(rng, 3), b = random_square(rng, 3);
    o.check(delta(F, commutator(a, b)) == commutator(delta(F, a), delta(F, b)), "Delta trial " + std::to_string(trial));
  }

  // Closure is idempotent; quotients by S-ideals inside F^2 keep ρ faithful.
  int ideals = 0, quotients = 0;
  const std::vector<std::pair<FreeNilpotent, Sl2Action>> cases = {
      {F, irreducible(2)}, {free_nilpotent(4, 3), irreducible(3)},
      {free_nilpotent(4, 3), direct_sum(irreducible(1), irreducible(1))}, {free_nilpotent(2, 4), irreducible(1)}};
  for (const auto& [G, gens] : cases) {
    const Representation rho = extend_to_free(G, sl2_representation(gens));
    for (int deg = 2; deg <= G.t; ++deg)
      for (const Subspace& J : candidate_submodules(sl2_action(rho), G.block(deg))) {
        const SIdeal c = s_ideal_closure(G, rho, J);
        o.check(c.is_ideal && c.is_invariant, "closure not an S-ideal");
        o.check(s_ideal_closure(G, rho, c.subspace).subspace == c.subspace, "closure not idempotent");
        ++ideals;
        try {
          const LeviQuotient q = quotient_with_levi(G, rho, c);
          o.check(q.rho.is_faithful(), "faithfulness lost");
          ++quotients;
        } catch (const PreconditionFailed&) {
          // nilindex collapsed
        }
      }
  }
  o.check(quotients > 0, "no quotient exercised");

  // Grassmann identity and canonical RREF on random subspaces.
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  auto random_rows = [&](int rows, int cols) {
    std::vector<SparseVector> out;
    for (int r = 0; r < rows; ++r) {
      Vector v(static_cast<std::size_t>(cols));
      for (auto& x : v) x = Rational(num(rng), den(rng)), x.canonicalize();
      out.push_back(SparseVector::from_dense(v));
    }
    return out;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + trial % 5;
    const auto ra = random_rows(1 + trial % 4, n), rb = random_rows(1 + (trial / 3) % 4, n);
    // Shared vector so intersections are often nonzero.
    auto rb2 = rb;
    rb2.push_back(ra[0] + rb[0]);
    const Subspace a = Subspace::span(n, ra), b = Subspace::span(n, rb2);
    o.check(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim(), "Grassmann trial " + std::to_string(trial));
    std::vector<SparseVector> mixed;
    // Triangular change of spanning set: same span, same canonical basis.
    for (std::size_t i = 0; i < ra.size(); ++i) {
      SparseVector v = Rational(static_cast<int>(i) + 2) * ra[i];
      for (std::size_t q = i + 1; q < ra.size(); ++q) v += ra[q];
      mixed.push_back(v);
    }
    o.check(Subspace::span(n, mixed) == a, "RREF trial " + std::to_string(trial));
    const Echelon e = rref(a.as_matrix());
    o.check(e.reduced == rref(e.reduced).reduced, "RREF not idempotent");
  }
  if (o.pass)
    o.detail = "Delta on 100 seeded pairs; " + std::to_string(ideals) + " closures idempotent; " + std::to_string(quotients) +
               " quotients faithful; 100 Grassmann and RREF trials";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "dimension formulas", 10, dimension_formulas},
      {2, "Witt oracle and Jacobi on N(3,4)", 60, witt},
      {3, "Heisenberg derivations", 30, heisenberg_derivations},
      {4, "filiform no-go and sl2 glue on h1", 30, filiform_no_go},
      {5, "CN algebra Dl8", 10, cn_algebra},
      {6, "CN extension L1(Dl8, a7)", 10, cn_extension_check},
      {7, "module decompositions", 5, module_examples},
      {8, "nilindex 2/3 dimension table audit", 60, table1},
      {9, "52-dimensional table verification", 60, table2_check},
      {10, "non-quasi-cyclic reconstruction", 600, nqc},
      {11, "Heisenberg quotients", 30, heisenberg_quotients},
      {12, "property suites", 60, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over budget";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << std::setw(2) << c.id << ' ' << c.name << " [" << std::fixed
              << std::setprecision(2) << secs << "s / " << std::setprecision(0) << c.budget_seconds << "s] " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
