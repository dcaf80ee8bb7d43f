#include "levi/levi.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "levi/analysis.hpp"
#include "levi/error.hpp"
#include "levi/fixtures.hpp"

namespace levi {

namespace {

std::vector<SparseVector> units(int count) {
  std::vector<SparseVector> g;
  for (int i = 0; i < count; ++i) g.push_back(SparseVector::unit(i));
  return g;
}

// Ideal test through the generators only: ad of a bracket is the commutator
// of the ads, so closure under ad of generators is closure under all of F.
bool closed_under_generators(const FreeNilpotent& F, const Subspace& s) {
  for (const auto& v : s.basis())
    for (int g = 0; g < F.d; ++g)
      if (!s.contains(F.algebra.bracket_with_basis(g, v))) return false;
  return true;
}

// P x L where L lifts quotient coordinates to the kept unit vectors.
Matrix induced_map(const Quotient& q, const Matrix& x) {
  const int m = static_cast<int>(q.kept.size());
  std::vector<SparseVector> cols;
  for (int a = 0; a < m; ++a) cols.push_back(q.projection.apply(x.column(q.kept[static_cast<std::size_t>(a)])));
  return Matrix::from_columns(m, cols);
}

// Nonzero vectors of {0, ±1}^k whose first nonzero entry is +1.
std::vector<std::vector<int>> sign_patterns(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(k), -1);
  while (true) {
    auto first = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    if (first != c.end() && *first == 1) out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == 1) c[static_cast<std::size_t>(i--)] = -1;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
  // Fewest nonzeros first, then the earliest basis vectors, so (1,0,...,0)
  // (the canonical choice) leads.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto nz = [](const std::vector<int>& v) { return std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }); };
    if (nz(a) != nz(b)) return nz(a) < nz(b);
    return a > b;
  });
  return out;
}

SparseVector combine(const Subspace& s, const std::vector<int>& coeffs) {
  SparseVector v;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) v.add_scaled(s.basis()[i], Rational(coeffs[i]));
  return v;
}

std::string pattern_string(const std::vector<int>& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

const Subspace* hw_space(const Sl2Decomposition& d, int weight) {
  for (const auto& s : d.summands)
    if (s.weight == weight) return &s.highest_weight;
  return nullptr;
}

// weights(sub) ⊆ weights(whole) as multisets.
bool sub_multiset(std::vector<int> sub, std::vector<int> whole) {
  std::sort(sub.begin(), sub.end());
  std::sort(whole.begin(), whole.end());
  return std::includes(whole.begin(), whole.end(), sub.begin(), sub.end());
}

Matrix embed(const Matrix& x, int dim, int offset) {
  Matrix out(dim, dim);
  for (int r = 0; r < x.rows(); ++r)
    for (const auto& [c, v] : x.row(r)) out.set(r + offset, c + offset, v);
  return out;
}

}  // namespace

Representation::Representation(LieAlgebra s_algebra, std::vector<Matrix> images)
    : s_(std::move(s_algebra)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != s_.dim()) throw DimensionMismatch("representation needs one matrix per basis vector of S");
  target_dim_ = images_.empty() ? 0 : images_.front().rows();
  for (const auto& m : images_)
    if (m.rows() != target_dim_ || m.cols() != target_dim_) throw DimensionMismatch("representation matrices must be square of one size");

  homomorphism_ = true;
  for (int i = 0; i < s_.dim() && homomorphism_; ++i)
    for (int j = i + 1; j < s_.dim() && homomorphism_; ++j) {
      Matrix rhs(target_dim_, target_dim_);
      for (const auto& [k, c] : s_.stored(i, j)) rhs += c * images_[static_cast<std::size_t>(k)];
      if (commutator(images_[static_cast<std::size_t>(i)], images_[static_cast<std::size_t>(j)]) != rhs) homomorphism_ = false;
    }

  std::vector<SparseVector> vecs;
  for (const auto& m : images_) vecs.push_back(m.vectorize());
  faithful_ = Subspace::span(target_dim_ * target_dim_, vecs).dim() == s_.dim();
}

Representation sl2_representation(const Sl2Action& a) { return Representation(sl2_algebra(), {a.H(), a.E(), a.F()}); }

bool is_sl2_representation(const Representation& rho) { return rho.s_algebra() == sl2_algebra(); }

Sl2Action sl2_action(const Representation& rho) {
  if (!is_sl2_representation(rho)) throw PreconditionFailed("representation is not of sl2 in the basis (h, e, f)");
  return Sl2Action(rho.image(0), rho.image(1), rho.image(2));
}

GluedAlgebra glue(const LieAlgebra& s, const LieAlgebra& n, const Representation& rho) {
  if (!(rho.s_algebra() == s)) throw DimensionMismatch("glue: representation is of a different algebra");
  if (rho.target_dim() != n.dim() && s.dim() > 0) throw DimensionMismatch("glue: representation does not act on N");
  for (int i = 0; i < s.dim(); ++i)
    if (!is_derivation(n, rho.image(i)))
      throw PreconditionFailed("glue: rho(" + s.label(i) + ") is not a derivation of N");
  if (!rho.is_homomorphism()) throw PreconditionFailed("glue: rho is not a homomorphism");

  GluedAlgebra g;
  g.n_algebra = n;
  g.rho = rho;
  if (!is_semisimple(s)) g.warnings.push_back("S has a degenerate Killing form");

  const int nd = n.dim();
  LieAlgebra L(nd + s.dim(), s.name().empty() || n.name().empty() ? std::string{} : s.name() + "+" + n.name());
  for (const auto& c : n.constants()) L.add_structure_constant(c.i, c.j, c.k, c.c);
  for (const auto& c : s.constants()) L.add_structure_constant(nd + c.i, nd + c.j, nd + c.k, c.c);
  for (int i = 0; i < s.dim(); ++i)
    for (int r = 0; r < nd; ++r)
      for (const auto& [c, x] : rho.image(i).row(r)) L.add_structure_constant(nd + i, c, r, x);
  std::vector<std::string> labels;
  for (int i = 0; i < nd; ++i) labels.push_back(n.label(i));
  for (int i = 0; i < s.dim(); ++i) labels.push_back(s.label(i));
  L.set_labels(std::move(labels));

  if (!verify_jacobi(L).ok()) throw Error("glue: Jacobi failed although rho passed both checks");
  g.algebra = std::move(L);
  return g;
}

Representation extend_to_free(const FreeNilpotent& F, const Representation& rho0) {
  if (rho0.s_algebra().dim() > 0 && rho0.target_dim() != F.d) throw DimensionMismatch("extend_to_free: rho0 must act on the generators");
  return Representation(rho0.s_algebra(), delta_hom(F, rho0.images()));
}

bool is_homogeneous_ideal(const FreeNilpotent& F, const Subspace& ideal) {
  for (const auto& v : ideal.basis())
    for (int m = 1; m <= F.t; ++m) {
      SparseVector part = v.slice(F.block_begin(m), F.block_end(m));
      if (!part.is_zero() && !ideal.contains(part)) return false;
    }
  return true;
}

SIdeal make_s_ideal(const FreeNilpotent& F, const Representation& rho, const Subspace& s) {
  if (s.ambient_dim() != F.dim()) throw DimensionMismatch("subspace does not live in the free algebra");
  SIdeal out;
  out.subspace = s;
  out.is_ideal = closed_under_generators(F, s);
  out.is_invariant = is_invariant(rho.images(), s);
  out.is_homogeneous = is_homogeneous_ideal(F, s);
  return out;
}

SIdeal s_ideal_closure(const FreeNilpotent& F, const Representation& rho, const Subspace& J) {
  if (!is_invariant(rho.images(), J)) throw PreconditionFailed("s_ideal_closure: J is not invariant");
  SpanBuilder b(F.dim());
  for (const auto& v : J.basis()) b.add(v);
  for (int next = 0; next < b.dim(); ++next) {
    SparseVector v = b.rows()[static_cast<std::size_t>(next)];
    for (int g = 0; g < F.d; ++g) b.add(F.algebra.bracket_with_basis(g, v));
  }
  return make_s_ideal(F, rho, b.build());
}

LeviQuotient quotient_with_levi(const FreeNilpotent& F, const Representation& rho, const SIdeal& ideal) {
  // Flags are recomputed here rather than trusted.
  SIdeal I = make_s_ideal(F, rho, ideal.subspace);
  std::vector<std::string> problems;
  if (!I.is_ideal) problems.push_back("not an ideal");
  if (!I.is_invariant) problems.push_back("not invariant");
  if (!F.tail(2).contains(I.subspace)) problems.push_back("not inside F^2");
  if (I.subspace.contains(F.block(F.t))) problems.push_back("nilindex collapsed");
  if (!problems.empty()) {
    std::string msg = "quotient_with_levi:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw PreconditionFailed(msg);
  }
  LeviQuotient out;
  out.quotient = quotient(F.algebra, I.subspace);
  std::vector<Matrix> images;
  for (const auto& m : rho.images()) images.push_back(induced_map(out.quotient, m));
  out.rho = Representation(rho.s_algebra(), std::move(images));
  out.glued = glue(rho.s_algebra(), out.quotient.algebra, out.rho);
  return out;
}

std::vector<Subspace> candidate_submodules(const Sl2Action& a, const Subspace& within) {
  Sl2Decomposition d = decompose_within(a, within);
  // Per weight: lists of seed vectors.
  std::vector<std::vector<std::vector<SparseVector>>> options;
  long long total = 1;
  for (const auto& s : d.summands) {
    std::vector<std::vector<SparseVector>> opt;
    opt.push_back({});
    if (s.multiplicity >= 2)
      for (const auto& c : sign_patterns(s.multiplicity)) opt.push_back({combine(s.highest_weight, c)});
    opt.push_back(s.highest_weight.basis());
    total *= static_cast<long long>(opt.size());
    if (total > 4096) throw ResourceLimit("candidate_submodules: too many combinations");
    options.push_back(std::move(opt));
  }
  std::vector<Subspace> out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<SparseVector> seeds;
    for (std::size_t w = 0; w < options.size(); ++w)
      for (const auto& v : options[w][pick[w]]) seeds.push_back(v);
    out.push_back(submodule_generated(a, seeds));
    std::size_t w = options.size();
    while (w > 0 && pick[w - 1] + 1 == options[w - 1].size()) pick[--w] = 0;
    if (w == 0) break;
    ++pick[w - 1];
  }
  return out;
}

LeviQuotient quasi_cyclic_quotient(const FreeNilpotent& F, const Representation& rho, const Subspace& P, const Subspace& Q) {
  if (F.t != 3) throw PreconditionFailed("quasi_cyclic_quotient: needs nilindex 3");
  if (!F.block(2).contains(P)) throw PreconditionFailed("quasi_cyclic_quotient: P is not inside degree 2");
  if (!F.block(3).contains(Q)) throw PreconditionFailed("quasi_cyclic_quotient: Q is not inside degree 3");
  if (!is_invariant(rho.images(), P) || !is_invariant(rho.images(), Q))
    throw PreconditionFailed("quasi_cyclic_quotient: P and Q must be invariant");
  Subspace top = sum(bracket_span(F.algebra, P, F.block(1)), Q);
  if (top.contains(F.block(3))) throw PreconditionFailed("quasi_cyclic_quotient: nilindex collapsed");
  return quotient_with_levi(F, rho, make_s_ideal(F, rho, sum(P, top)));
}

std::vector<Matrix> symplectic_algebra(int n) {
  if (n < 0) throw PreconditionFailed("symplectic_algebra: n must be nonnegative");
  const int d = 2 * n;
  Matrix J(d, d);
  for (int i = 0; i < n; ++i) {
    J.set(i, n + i, 1);
    J.set(n + i, i, -1);
  }
  // Row (r, c) of the system: Σ_k X(k,r) J(k,c) + Σ_k J(r,k) X(k,c).
  Matrix sys(d * d, d * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const int row = r * d + c;
      for (int k = 0; k < d; ++k) {
        sys.add_to(row, k * d + r, J.at(k, c));
        sys.add_to(row, k * d + c, J.at(r, k));
      }
    }
  std::vector<Matrix> out;
  Subspace solutions = kernel(sys);
  for (const auto& v : solutions.basis()) out.push_back(Matrix::unvectorize(v, d, d));
  return out;
}

bool HeisenbergQuotient::ok() const {
  const int n = free.d / 2;
  return quotient.algebra.dim() == 2 * n + 1 && center_dim == 1 && center_is_derived && form_nondegenerate &&
         kernel_matches_heisenberg && symplectic_dim == n * (2 * n + 1) && symplectic_descends;
}

HeisenbergQuotient heisenberg_quotient(int n) {
  if (n < 1) throw PreconditionFailed("heisenberg_quotient: n must be positive");
  HeisenbergQuotient h;
  h.free = free_nilpotent(2 * n, 2);
  const FreeNilpotent& F = h.free;
  auto b = [n](int a, int c) {
    if (c == a + n) return 1;
    if (a == c + n) return -1;
    return 0;
  };
  // Kernel of u∧v -> b(u, v) inside degree 2.
  std::vector<SparseVector> rows;
  for (int g = 0; g < F.d; ++g) rows.push_back(SparseVector::unit(g));
  SparseVector contraction;
  for (int k = F.block_begin(2); k < F.block_end(2); ++k) {
    const HallWord& w = F.hall_basis[static_cast<std::size_t>(k)];
    if (int v = b(w.left, w.right)) contraction.add_scaled(SparseVector::unit(k), Rational(v));
  }
  rows.push_back(contraction);
  h.ideal = kernel(Matrix::from_rows(F.dim(), rows));
  h.quotient = quotient(F.algebra, h.ideal);
  const LieAlgebra& Q = h.quotient.algebra;

  Subspace z = center(Q);
  h.center_dim = z.dim();
  h.center_is_derived = lower_central_series(Q)[1] == z;

  // Generators survive as the first 2n quotient coordinates; the centre is
  // the last one.
  const int d = 2 * n;
  h.form = Matrix(d, d);
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c)
      if (a != c) h.form.set(a, c, Q.bracket_basis(a, c).at(d));
  h.form_nondegenerate = determinant(h.form) != 0;

  h.kernel_matches_heisenberg = kernel(natural_hom(F, heisenberg(n), units(d))) == h.ideal;

  auto sp = symplectic_algebra(n);
  h.symplectic_dim = static_cast<int>(sp.size());
  h.symplectic_descends = true;
  for (const auto& X : sp) {
    Matrix D = delta(F, X);
    if (!is_invariant({D}, h.ideal) || !is_derivation(Q, induced_map(h.quotient, D))) {
      h.symplectic_descends = false;
      break;
    }
  }
  return h;
}

GraphQuotientResult nonhomogeneous_graph_quotient(const FreeNilpotent& F, const Sl2Action& generators, int weight,
                                                  const Rational& lambda, const Subspace& extra_P,
                                                  const Subspace& extra_Q) {
  if (lambda == 0) throw PreconditionFailed("nonhomogeneous_graph_quotient: lambda = 0 gives a homogeneous ideal");
  if (F.t != 3) throw PreconditionFailed("nonhomogeneous_graph_quotient: needs nilindex 3");
  if (generators.dim() != F.d) throw DimensionMismatch("nonhomogeneous_graph_quotient: action must be on the generators");

  GraphQuotientResult res;
  res.lambda = lambda;
  Representation rho = extend_to_free(F, sl2_representation(generators));
  Sl2Action act = sl2_action(rho);
  if (!F.block(2).contains(extra_P) || !is_submodule(act, extra_P))
    throw PreconditionFailed("nonhomogeneous_graph_quotient: extra_P must be an invariant subspace of degree 2");
  if (!F.block(3).contains(extra_Q) || !is_submodule(act, extra_Q))
    throw PreconditionFailed("nonhomogeneous_graph_quotient: extra_Q must be an invariant subspace of degree 3");

  Sl2Decomposition d2 = decompose_within(act, F.block(2));
  Sl2Decomposition d3 = decompose_within(act, F.block(3));
  const Subspace* U = hw_space(d2, weight);
  const Subspace* W = hw_space(d3, weight);
  if (!U) res.report.push_back("no copy of V(" + std::to_string(weight) + ") in degree 2");
  if (!W) res.report.push_back("no copy of V(" + std::to_string(weight) + ") in degree 3");
  if (!U || !W) return res;

  auto pu = sign_patterns(U->dim());
  auto pw = sign_patterns(W->dim());
  constexpr std::size_t kMaxAttempts = 2048;
  std::size_t attempts = 0;
  for (const auto& cu : pu)
    for (const auto& cw : pw) {
      if (++attempts > kMaxAttempts) {
        res.report.push_back("search stopped after " + std::to_string(kMaxAttempts) + " attempts");
        return res;
      }
      SparseVector u = combine(*U, cu), w = combine(*W, cw);
      Subspace B = submodule_generated(act, {u + lambda * w});
      SIdeal I = s_ideal_closure(F, rho, sum(extra_P, sum(B, extra_Q)));
      std::string tag = "u" + pattern_string(cu) + " w" + pattern_string(cw) + ": ";
      std::vector<std::string> why;
      if (!I.is_ideal) why.push_back("not an ideal");
      if (!I.is_invariant) why.push_back("not invariant");
      if (I.is_homogeneous) why.push_back("homogeneous");
      if (I.subspace.contains(F.block(3))) why.push_back("contains degree 3");
      if (!why.empty()) {
        std::string line = tag + "rejected:";
        for (const auto& y : why) line += " " + y + ";";
        res.report.push_back(line);
        continue;
      }
      res.report.push_back(tag + "accepted, ideal dim " + std::to_string(I.subspace.dim()));
      res.u = u;
      res.w = w;
      res.quotient = quotient_with_levi(F, rho, I);
      res.ideal = std::move(I);
      res.ok = true;
      return res;
    }
  res.report.push_back("no valid copy found");
  return res;
}

NqcReconstruction reconstruct_non_quasi_cyclic(const Rational& lambda) {
  constexpr int kGenerators = 10, kGraph = 14;
  NqcReconstruction r;
  r.free = free_nilpotent(kGenerators + 1, 3);
  const FreeNilpotent& F = r.free;
  Representation rho = extend_to_free(F, sl2_representation(irreducible(kGenerators)));
  r.action = sl2_action(rho);

  Sl2Decomposition d2 = decompose_within(r.action, F.block(2));
  Sl2Decomposition d3 = decompose_within(r.action, F.block(3));
  std::vector<SparseVector> p_seeds;
  for (int w : {10, 2})
    if (const Subspace* s = hw_space(d2, w)) p_seeds.insert(p_seeds.end(), s->basis().begin(), s->basis().end());
  r.extra_P = submodule_generated(r.action, p_seeds);

  const Subspace* U = hw_space(d2, kGraph);
  const Subspace* W = hw_space(d3, kGraph);
  if (!U || !W) throw Error("reconstruct_non_quasi_cyclic: V(14) missing");
  const SparseVector& u = U->basis().front();
  const SparseVector& w = W->basis().front();

  // Whatever lies in [P + <u>, m] is forced into the ideal; of the V(14)
  // copies in degree 3 keep out exactly the one through w.
  Subspace forced = bracket_span(F.algebra, sum(r.extra_P, submodule_generated(r.action, {u})), F.block(1));
  Subspace forced_hw(F.dim());
  Sl2Decomposition df = decompose_within(r.action, forced);
  if (const Subspace* k = hw_space(df, kGraph)) forced_hw = *k;
  if (forced_hw.contains(w)) throw Error("reconstruct_non_quasi_cyclic: w is forced into the ideal");
  std::vector<SparseVector> w_span = forced_hw.basis();
  w_span.push_back(w);
  Subspace hyper = sum(forced_hw, complement_within(Subspace::span(F.dim(), w_span), *W));
  std::vector<SparseVector> q_seeds = hyper.basis();
  for (const auto& s : d3.summands)
    if (s.weight != kGraph) q_seeds.insert(q_seeds.end(), s.highest_weight.basis().begin(), s.highest_weight.basis().end());
  r.extra_Q = submodule_generated(r.action, q_seeds);

  r.graph = nonhomogeneous_graph_quotient(F, irreducible(kGenerators), kGraph, lambda, r.extra_P, r.extra_Q);
  if (r.graph.ok) {
    ModuleLayers layers = verify_module_layers(r.graph.quotient->glued);
    for (const auto& layer : layers.layers)
      for (int x : layer.weights) r.block_dims.push_back(x + 1);
  }
  return r;
}

bool ModuleLayers::ok() const {
  return supported && std::all_of(layers.begin(), layers.end(), [](const LayerReport& l) { return l.generated && l.in_tensor; });
}

ModuleLayers verify_module_layers(const GluedAlgebra& G) {
  ModuleLayers out;
  if (!is_sl2_representation(G.rho)) {
    out.message = "rank-1 only: the Levi factor is not sl2 in the basis (h, e, f)";
    return out;
  }
  out.supported = true;
  const LieAlgebra& N = G.n_algebra;
  Sl2Action act = sl2_action(G.rho);
  auto lcs = lower_central_series(N);
  std::vector<Subspace> m;
  for (std::size_t j = 0; j + 1 < lcs.size(); ++j) {
    if (lcs[j].is_zero()) break;
    LayerReport layer;
    layer.degree = static_cast<int>(j) + 1;
    m.push_back(invariant_complement(act, lcs[j + 1], lcs[j]));
    layer.weights = decompose_within(act, m.back()).weights();
    if (j == 0) {
      layer.generated = layer.in_tensor = true;
    } else {
      layer.generated = sum(bracket_span(N, m.front(), m[j - 1]), lcs[j + 1]).contains(m.back());
      std::vector<int> tensor_weights;
      for (int a : out.layers.front().weights)
        for (int b : out.layers[j - 1].weights)
          for (int c : clebsch_gordan(a, b)) tensor_weights.push_back(c);
      layer.in_tensor = sub_multiset(layer.weights, tensor_weights);
    }
    out.layers.push_back(std::move(layer));
  }
  return out;
}

CnExtension cn_extension(const LieAlgebra& n, const SparseVector& z0, int m) {
  if (m < 0) throw PreconditionFailed("cn_extension: m must be nonnegative");
  const int nd = n.dim();
  Subspace Z = center(n);
  if (z0.is_zero() || !Z.contains(z0)) throw PreconditionFailed("cn_extension: z0 is not a nonzero central element");

  CnExtension out;
  // {x : [x, b_j] ∈ Z for all j} as the kernel of x -> ([x, b_j] mod Z)_j.
  std::vector<SparseVector> rows;
  for (int j = 0; j < nd; ++j) {
    std::vector<SparseVector> cols;
    for (int i = 0; i < nd; ++i) cols.push_back(Z.reduce(n.bracket_basis(i, j)));
    Matrix block = Matrix::from_columns(nd, cols);
    for (int r = 0; r < nd; ++r)
      if (!block.row(r).is_zero()) rows.push_back(block.row(r));
  }
  Subspace almost_central = kernel(Matrix::from_rows(nd, rows));
  out.hypothesis_holds = lower_central_series(n)[1].contains(almost_central);
  if (!out.hypothesis_holds) throw PreconditionFailed("cn_extension: {x : [x, n] ⊆ Z(n)} is not inside n^2");
  out.der_nilpotent = matrix_lie_tests(derivation_algebra(n)).nilpotent;
  if (!out.der_nilpotent) throw PreconditionFailed("cn_extension: Der n is not nilpotent");

  const int dim = nd + 2 * m;
  LieAlgebra L(dim, n.name().empty() ? std::string{} : "L" + std::to_string(m) + "(" + n.name() + ")");
  for (const auto& c : n.constants()) L.add_structure_constant(c.i, c.j, c.k, c.c);
  for (int i = 0; i < m; ++i)
    for (const auto& [k, c] : z0) L.add_structure_constant(nd + i, nd + m + i, k, c);
  std::vector<std::string> labels;
  for (int i = 0; i < nd; ++i) labels.push_back(n.label(i));
  for (int i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) labels.push_back("y" + std::to_string(i));
  L.set_labels(std::move(labels));

  out.nilindex = nilindex(L);
  for (const auto& X : symplectic_algebra(m)) out.symplectic_block.push_back(embed(X, dim, nd));
  out.symplectic_are_derivations = std::all_of(out.symplectic_block.begin(), out.symplectic_block.end(),
                                               [&](const Matrix& d) { return is_derivation(L, d); });
  out.der_dim = static_cast<int>(derivation_algebra(L).size());
  out.algebra = std::move(L);
  return out;
}

}  // namespace levi
