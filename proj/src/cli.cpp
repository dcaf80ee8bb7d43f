#include "levi/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "levi/analysis.hpp"
#include "levi/error.hpp"
#include "levi/fixtures.hpp"
#include "levi/free_nilpotent.hpp"
#include "levi/io.hpp"
#include "levi/levi.hpp"
#include "levi/repair.hpp"
#include "levi/sl2.hpp"
#include "levi/table2.hpp"
#include "levi/weyl.hpp"

namespace levi {

namespace {

// Files carry 1-based indices, so reports do too.
std::string vec(const SparseVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : v) {
    Rational a = c;
    if (first) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    if (a != 1) s += to_string(a) + "*";
    s += "b" + std::to_string(k + 1);
    first = false;
  }
  return s;
}

std::string list(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

LieAlgebra load_algebra(const std::string& path) { return parse_lieconst(read_text(path)); }

// Writes to the file, or to out when no file is given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_text(path, text);
}

int report_lcs(const LieAlgebra& L, std::ostream& out) {
  out << "lcs " << list(dims(lower_central_series(L))) << '\n';
  out << "derived " << list(dims(derived_series(L))) << '\n';
  if (is_nilpotent(L)) out << "nilindex " << nilindex(L) << "\ntype " << type_of(L) << '\n';
  else out << "nilpotent no\n";
  return 0;
}

int cmd_verify_jacobi(const std::string& path, int threads, std::ostream& out) {
  const LieAlgebra L = load_algebra(path);
  const JacobiReport r = verify_jacobi(L, threads);
  for (const auto& v : r.violations)
    out << "FAIL jacobi " << v.i + 1 << ' ' << v.j + 1 << ' ' << v.k + 1 << " residual " << vec(v.residual) << '\n';
  out << "jacobi triples=" << r.triples_checked << " violations=" << r.violations.size() << '\n';
  return r.ok() ? 0 : 1;
}

int cmd_verify_derivation(const std::string& alg, const std::string& map, std::ostream& out) {
  const LieAlgebra L = load_algebra(alg);
  const Matrix d = parse_linmap(read_text(map));
  if (d.rows() != L.dim() || d.cols() != L.dim()) throw ParseError("map is not " + std::to_string(L.dim()) + "x" + std::to_string(L.dim()));
  const auto v = leibniz_violations(L, d);
  for (const auto& x : v) out << "FAIL derivation " << x.i + 1 << ' ' << x.j + 1 << " residual " << vec(x.residual) << '\n';
  out << "derivation violations=" << v.size() << '\n';
  return v.empty() ? 0 : 1;
}

int cmd_verify_equivariant(const std::string& alg, const std::string& act, std::ostream& out) {
  const LieAlgebra L = load_algebra(alg);
  const Sl2Action a = parse_sl2act(read_text(act));
  if (a.dim() != L.dim()) throw ParseError("action has dim " + std::to_string(a.dim()) + ", algebra " + std::to_string(L.dim()));
  const auto v = equivariance_violations(a, L);
  for (const auto& x : v)
    out << "FAIL equivariant " << x.generator << ' ' << x.i + 1 << ' ' << x.j + 1 << " residual " << vec(x.residual) << '\n';
  out << "equivariant violations=" << v.size() << '\n';
  return v.empty() ? 0 : 1;
}

int cmd_der(const std::string& path, bool series, std::ostream& out) {
  const LieAlgebra L = load_algebra(path);
  const auto basis = derivation_algebra(L);
  out << "der dim=" << basis.size() << '\n';
  const LieAlgebra D = from_matrices(basis);
  out << "nilpotent " << yes(is_nilpotent(D)) << "\nsolvable " << yes(is_solvable(D)) << '\n';
  if (series) {
    out << "lcs " << list(dims(lower_central_series(D))) << '\n';
    out << "derived " << list(dims(derived_series(D))) << '\n';
  }
  return 0;
}

int cmd_sl2_decompose(const std::string& path, std::ostream& out) {
  const Sl2Action a = parse_sl2act(read_text(path));
  const Sl2Decomposition d = decompose(a);
  out << "dim " << a.dim() << '\n';
  for (const auto& s : d.summands) out << "V(" << s.weight << ") x" << s.multiplicity << '\n';
  out << "weights " << list(d.weights()) << '\n';
  return 0;
}

int cmd_quotient(const std::string& alg, const std::string& ideal_path, const std::string& dest, std::ostream& out) {
  const LieAlgebra L = load_algebra(alg);
  const Matrix rows = parse_linmap(read_text(ideal_path));
  if (rows.cols() != L.dim()) throw ParseError("ideal rows have length " + std::to_string(rows.cols()) + ", algebra dim " + std::to_string(L.dim()));
  const Subspace I = Subspace::row_space(rows);
  int failures = 0;
  for (int i = 0; i < L.dim() && failures < 10; ++i)
    for (const auto& v : I.basis()) {
      const SparseVector r = I.reduce(L.bracket_with_basis(i, v));
      if (r.is_zero()) continue;
      out << "FAIL ideal [b" << i + 1 << ", " << vec(v) << "] leaves " << vec(r) << '\n';
      if (++failures == 10) break;
    }
  if (failures) {
    out << "quotient: not an ideal\n";
    return 1;
  }
  const Quotient q = quotient(L, I);
  out << "ideal dim=" << I.dim() << "\nquotient dim=" << q.algebra.dim() << '\n';
  report_lcs(q.algebra, out);
  if (!dest.empty()) write_text(dest, write_lieconst(q.algebra));
  return 0;
}

int cmd_heisenberg(int n, std::ostream& out) {
  if (n < 1) throw ParseError("N must be positive");
  const HeisenbergQuotient h = heisenberg_quotient(n);
  out << "free dim=" << h.free.dim() << "\nideal dim=" << h.ideal.dim() << "\nquotient dim=" << h.quotient.algebra.dim() << '\n';
  out << "center dim=" << h.center_dim << "\ncenter equals derived " << yes(h.center_is_derived) << '\n';
  out << "form nondegenerate " << yes(h.form_nondegenerate) << "\nkernel matches heisenberg " << yes(h.kernel_matches_heisenberg) << '\n';
  out << "symplectic dim=" << h.symplectic_dim << "\nsymplectic descends " << yes(h.symplectic_descends) << '\n';
  if (!h.ok()) out << "FAIL heisenberg-quotient " << n << '\n';
  return h.ok() ? 0 : 1;
}

int cmd_table1(std::ostream& out) {
  int bad = 0;
  for (const auto& l : table1_audit()) {
    out << l.format() << '\n';
    bad += !l.ok();
  }
  if (bad) out << "FAIL table1-audit mismatches=" << bad << '\n';
  return bad ? 1 : 0;
}

LieAlgebra fixture(const std::string& name, const std::vector<int>& args) {
  auto need = [&](int lo) {
    if (args.size() != 1) throw ParseError("fixture " + name + " takes one integer");
    if (args[0] < lo) throw ParseError("fixture " + name + " needs N >= " + std::to_string(lo));
    return args[0];
  };
  auto none = [&] {
    if (!args.empty()) throw ParseError("fixture " + name + " takes no argument");
  };
  if (name == "table2") return none(), parse_lieconst(table2_source());
  if (name == "dl8") return none(), dl8();
  if (name == "l0h1") return none(), glued_l0_h1();
  if (name == "heisenberg") return heisenberg(need(1));
  if (name == "filiform") return standard_filiform(need(3));
  throw ParseError("unknown fixture '" + name + "'");
}

int cmd_reconstruct(const std::string& lambda_text, const std::string& dest, std::ostream& out) {
  const Rational lambda = parse_rational(lambda_text);
  if (lambda == 0) throw ParseError("lambda must be nonzero");
  const NqcReconstruction r = reconstruct_non_quasi_cyclic(lambda);
  for (const auto& line : r.graph.report) out << line << '\n';
  out << "free dim=" << r.free.dim() << '\n';
  if (!r.graph.ok) {
    out << "FAIL reconstruct-nqc: no valid graph ideal\n";
    return 1;
  }
  const LieAlgebra& Q = r.graph.quotient->quotient.algebra;
  out << "ideal dim=" << r.graph.ideal->subspace.dim() << "\nquotient dim=" << Q.dim() << '\n';
  report_lcs(Q, out);
  out << "blocks " << list(r.block_dims) << '\n';
  const bool homogeneous = is_homogeneous_ideal(r.free, r.graph.ideal->subspace);
  out << "homogeneous " << yes(homogeneous) << '\n';
  if (!dest.empty()) write_text(dest, write_lieconst(Q));
  if (homogeneous) out << "FAIL reconstruct-nqc: ideal is homogeneous\n";
  return homogeneous ? 1 : 0;
}

int cmd_repair(const std::string& alg, const std::string& act, const std::string& dest, std::ostream& out) {
  const LieAlgebra L = load_algebra(alg);
  const Sl2Action a = parse_sl2act(read_text(act));
  if (a.dim() != L.dim()) throw ParseError("action has dim " + std::to_string(a.dim()) + ", algebra " + std::to_string(L.dim()));
  const EquivariantRepair r = repair_equivariant(L, a);
  for (const auto& v : r.violations)
    out << "violation " << v.generator << ' ' << v.i + 1 << ' ' << v.j + 1 << " residual " << vec(v.residual) << '\n';
  out << "flagged pairs=" << r.flagged.size() << " unknowns=" << r.unknowns << " equations=" << r.equations << '\n';
  for (const auto& d : r.diff)
    out << "change c " << d.i + 1 << ' ' << d.j + 1 << ' ' << d.k + 1 << ": " << to_string(d.before) << " -> " << to_string(d.after) << '\n';
  if (!r.ok) {
    out << "FAIL repair-equivariant: " << r.message << '\n';
    return 1;
  }
  out << "repair: " << r.message << "\njacobi violations after repair=" << verify_jacobi(r.repaired).violations.size() << '\n';
  if (!dest.empty()) write_text(dest, write_lieconst(r.repaired));
  return 0;
}

int cmd_kernel(const std::string& path, std::ostream& out) {
  const LieAlgebra L = load_algebra(path);
  if (L.dim() < 11) throw ParseError("target needs at least 11 basis vectors");
  GeneratorKernel k;
  try {
    k = table2_kernel(L);
  } catch (const PreconditionFailed& e) {
    out << "FAIL nqc-kernel: " << e.what() << '\n';
    return 1;
  }
  out << "free dim=" << k.free.dim() << "\nsurjective " << yes(k.surjective) << '\n';
  out << "kernel dim=" << k.kernel.subspace.dim() << "\nideal " << yes(k.kernel.is_ideal) << "\ninvariant " << yes(k.kernel.is_invariant)
      << "\nhomogeneous " << yes(k.homogeneous) << '\n';
  const bool ok = k.surjective && k.kernel.is_ideal && k.kernel.is_invariant;
  if (!ok) out << "FAIL nqc-kernel\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with nilpotent Lie algebras and their Levi extensions", "levi"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  app.add_option("--threads", threads, "worker threads (output does not depend on it)")->check(CLI::Range(1, 256));

  std::function<int()> action;
  std::string f1, f2, dest;

  auto* free = app.add_subcommand("free", "free nilpotent algebra N(d, t) in the Hall basis");
  int d = 0, t = 0;
  free->add_option("--d", d, "generators")->required()->check(CLI::Range(1, 64));
  free->add_option("--t", t, "nilindex")->required()->check(CLI::Range(1, 64));
  free->add_option("--out", dest, "output file (default stdout)");
  free->callback([&] {
    action = [&] {
      const FreeNilpotent F = free_nilpotent(d, t);
      emit(dest, write_lieconst(F.algebra), out);
      if (!dest.empty()) out << "dim " << F.dim() << '\n';
      return 0;
    };
  });

  auto* verify = app.add_subcommand("verify", "Jacobi, Leibniz and sl2-equivariance checks");
  verify->require_subcommand(1);
  auto* vj = verify->add_subcommand("jacobi", "all triples i < j < k");
  vj->add_option("ALG", f1)->required();
  vj->callback([&] { action = [&] { return cmd_verify_jacobi(f1, threads, out); }; });
  auto* vd = verify->add_subcommand("derivation", "Leibniz rule for a linmap");
  vd->add_option("ALG", f1)->required();
  vd->add_option("MAP", f2)->required();
  vd->callback([&] { action = [&] { return cmd_verify_derivation(f1, f2, out); }; });
  auto* ve = verify->add_subcommand("equivariant", "h, e, f act by derivations");
  ve->add_option("ALG", f1)->required();
  ve->add_option("ACT", f2)->required();
  ve->callback([&] { action = [&] { return cmd_verify_equivariant(f1, f2, out); }; });

  auto* der = app.add_subcommand("der", "derivation algebra");
  bool series = false;
  der->add_option("ALG", f1)->required();
  der->add_flag("--series", series, "lower central and derived series of Der");
  der->callback([&] { action = [&] { return cmd_der(f1, series, out); }; });

  auto* lcs = app.add_subcommand("lcs", "lower central and derived series");
  lcs->add_option("ALG", f1)->required();
  lcs->callback([&] { action = [&] { return report_lcs(load_algebra(f1), out); }; });

  auto* sl2 = app.add_subcommand("sl2", "sl2 modules");
  sl2->require_subcommand(1);
  auto* dec = sl2->add_subcommand("decompose", "irreducible summands");
  dec->add_option("ACT", f1)->required();
  dec->callback([&] { action = [&] { return cmd_sl2_decompose(f1, out); }; });
  auto* block = sl2->add_subcommand("block", "V(n1) + V(n2) + ... in standard bases");
  std::vector<int> weights;
  block->add_option("WEIGHTS", weights)->required()->check(CLI::NonNegativeNumber);
  block->add_option("--out", dest, "output file (default stdout)");
  block->callback([&] { action = [&] { return emit(dest, write_sl2act(block_sum(weights)), out), 0; }; });

  auto* quot = app.add_subcommand("quotient", "quotient by the ideal spanned by the rows of a linmap");
  quot->add_option("ALG", f1)->required();
  quot->add_option("IDEAL", f2)->required();
  quot->add_option("--out", dest, "write the quotient algebra");
  quot->callback([&] { action = [&] { return cmd_quotient(f1, f2, dest, out); }; });

  auto* heis = app.add_subcommand("heisenberg-quotient", "h_n as a quotient of N(2n, 2)");
  int n = 0;
  heis->add_option("N", n)->required();
  heis->callback([&] { action = [&] { return cmd_heisenberg(n, out); }; });

  auto* t1 = app.add_subcommand("table1-audit", "dimension identities for nilindex 2 and 3 modules");
  t1->callback([&] { action = [&] { return cmd_table1(out); }; });

  auto* fix = app.add_subcommand("fixture", "bundled algebras: table2, dl8, heisenberg N, filiform N, l0h1");
  std::string name;
  std::vector<int> fix_args;
  fix->add_option("NAME", name)->required();
  fix->add_option("N", fix_args);
  fix->add_option("--out", dest, "output file (default stdout)");
  fix->callback([&] { action = [&] { return emit(dest, write_lieconst(fixture(name, fix_args)), out), 0; }; });

  auto* nqc = app.add_subcommand("reconstruct-nqc", "non-quasi-cyclic quotient of N(11, 3) through a graph ideal");
  std::string lambda = "1";
  nqc->add_option("--lambda", lambda, "graph slope p/q");
  nqc->add_option("--out", dest, "write the quotient algebra");
  nqc->callback([&] { action = [&] { return cmd_reconstruct(lambda, dest, out); }; });

  auto* kern = app.add_subcommand("nqc-kernel", "kernel of N(11, 3) onto ALG with generators b1..b11");
  kern->add_option("ALG", f1)->required();
  kern->callback([&] { action = [&] { return cmd_kernel(f1, out); }; });

  auto* rep = app.add_subcommand("repair-equivariant", "solve for the unique equivariant correction of flagged entries");
  rep->add_option("ALG", f1)->required();
  rep->add_option("ACT", f2)->required();
  rep->add_option("--out", dest, "write the corrected algebra");
  rep->callback([&] { action = [&] { return cmd_repair(f1, f2, dest, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace levi
