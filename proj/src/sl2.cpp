#include "levi/sl2.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "levi/analysis.hpp"
#include "levi/error.hpp"

namespace levi {

namespace {

Matrix kron(const Matrix& x, const Matrix& y) {
  const int q = y.rows();
  const int s = y.cols();
  Matrix out(x.rows() * q, x.cols() * s);
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < q; ++j) {
      std::vector<SparseVector::Term> t;
      for (const auto& [k, a] : x.row(i))
        for (const auto& [l, b] : y.row(j)) t.emplace_back(k * s + l, a * b);
      out.set_row(i * q + j, SparseVector::from_terms(std::move(t)));
    }
  return out;
}

int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

// Lexicographic rank of i < j < k among the triples of 0..n-1.
class TripleIndex {
 public:
  explicit TripleIndex(int n) {
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) index_[{i, j, k}] = idx++;
    size_ = idx;
  }
  int operator()(int i, int j, int k) const { return index_.at({i, j, k}); }
  int size() const { return size_; }

 private:
  std::map<std::array<int, 3>, int> index_;
  int size_ = 0;
};

Matrix wedge2_of(const Matrix& x) {
  const int n = x.rows();
  const auto cols = x.columns();
  std::vector<SparseVector> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<SparseVector::Term> t;
      auto put = [&](int a, int b, const Rational& c) {
        if (a == b) return;
        if (a < b)
          t.emplace_back(pair_index(n, a, b), c);
        else
          t.emplace_back(pair_index(n, b, a), -c);
      };
      for (const auto& [r, c] : cols[static_cast<std::size_t>(i)]) put(r, j, c);
      for (const auto& [r, c] : cols[static_cast<std::size_t>(j)]) put(i, r, c);
      out.push_back(SparseVector::from_terms(std::move(t)));
    }
  return Matrix::from_columns(n * (n - 1) / 2, out);
}

Matrix wedge3_of(const Matrix& x, const TripleIndex& idx) {
  const int n = x.rows();
  const auto cols = x.columns();
  std::vector<SparseVector> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<SparseVector::Term> t;
        auto put = [&](std::array<int, 3> v, Rational c) {
          if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) return;
          // Bubble sort with sign.
          for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2 - p; ++q)
              if (v[static_cast<std::size_t>(q)] > v[static_cast<std::size_t>(q + 1)]) {
                std::swap(v[static_cast<std::size_t>(q)], v[static_cast<std::size_t>(q + 1)]);
                c = -c;
              }
          t.emplace_back(idx(v[0], v[1], v[2]), c);
        };
        for (const auto& [r, c] : cols[static_cast<std::size_t>(i)]) put({r, j, k}, c);
        for (const auto& [r, c] : cols[static_cast<std::size_t>(j)]) put({i, r, k}, c);
        for (const auto& [r, c] : cols[static_cast<std::size_t>(k)]) put({i, j, r}, c);
        out.push_back(SparseVector::from_terms(std::move(t)));
      }
  return Matrix::from_columns(idx.size(), out);
}

Matrix restrict_matrix(const Matrix& x, const Subspace& s) {
  const auto cols = x.columns();
  std::vector<SparseVector> out;
  for (const auto& b : s.basis()) {
    SparseVector v = apply_columns(cols, b);
    if (!s.contains(v)) throw PreconditionFailed("subspace is not invariant under the action");
    out.push_back(SparseVector::from_dense(s.coordinates(v)));
  }
  return Matrix::from_columns(s.dim(), out);
}

Matrix quotient_matrix(const Matrix& x, const Subspace& s) {
  const auto kept = s.non_pivots();
  std::vector<int> pos(static_cast<std::size_t>(s.ambient_dim()), -1);
  for (std::size_t a = 0; a < kept.size(); ++a) pos[static_cast<std::size_t>(kept[a])] = static_cast<int>(a);
  const auto cols = x.columns();
  std::vector<SparseVector> out;
  for (int c : kept) {
    std::vector<SparseVector::Term> t;
    for (const auto& [i, v] : s.reduce(cols[static_cast<std::size_t>(c)])) t.emplace_back(pos[static_cast<std::size_t>(i)], v);
    out.push_back(SparseVector::from_terms(std::move(t)));
  }
  return Matrix::from_columns(static_cast<int>(kept.size()), out);
}

}  // namespace

Sl2Action::Sl2Action(Matrix H, Matrix E, Matrix F) : H_(std::move(H)), E_(std::move(E)), F_(std::move(F)) {
  const int n = H_.rows();
  for (const Matrix* m : {&H_, &E_, &F_})
    if (m->rows() != n || m->cols() != n) throw DimensionMismatch("sl2 action matrices must be square of one size");
  if (commutator(H_, E_) != Rational(2) * E_) throw PreconditionFailed("not an sl2 action: [H,E] != 2E");
  if (commutator(H_, F_) != Rational(-2) * F_) throw PreconditionFailed("not an sl2 action: [H,F] != -2F");
  if (commutator(E_, F_) != H_) throw PreconditionFailed("not an sl2 action: [E,F] != H");
}

Sl2Action irreducible(int n) {
  if (n < 0) throw PreconditionFailed("irreducible: weight must be nonnegative");
  Matrix H(n + 1, n + 1), E(n + 1, n + 1), F(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    H.set(i, i, n - 2 * i);
    if (i >= 1) E.set(i - 1, i, n - i + 1);
    if (i < n) F.set(i + 1, i, i + 1);
  }
  return Sl2Action(std::move(H), std::move(E), std::move(F));
}

Sl2Action trivial_action(int dim) { return Sl2Action(Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim)); }

Sl2Action direct_sum(const Sl2Action& a, const Sl2Action& b) {
  return Sl2Action(direct_sum(a.H(), b.H()), direct_sum(a.E(), b.E()), direct_sum(a.F(), b.F()));
}

Sl2Action block_sum(const std::vector<int>& weights) {
  Sl2Action acc = trivial_action(0);
  for (int w : weights) acc = direct_sum(acc, irreducible(w));
  return acc;
}

Sl2Action tensor(const Sl2Action& a, const Sl2Action& b) {
  Matrix ia = Matrix::identity(a.dim());
  Matrix ib = Matrix::identity(b.dim());
  auto lift = [&](const Matrix& x, const Matrix& y) { return kron(x, ib) + kron(ia, y); };
  return Sl2Action(lift(a.H(), b.H()), lift(a.E(), b.E()), lift(a.F(), b.F()));
}

Sl2Action wedge2(const Sl2Action& a) { return Sl2Action(wedge2_of(a.H()), wedge2_of(a.E()), wedge2_of(a.F())); }

Sl2Action wedge3(const Sl2Action& a) {
  TripleIndex idx(a.dim());
  return Sl2Action(wedge3_of(a.H(), idx), wedge3_of(a.E(), idx), wedge3_of(a.F(), idx));
}

Sl2Action restrict_action(const Sl2Action& a, const Subspace& invariant) {
  return Sl2Action(restrict_matrix(a.H(), invariant), restrict_matrix(a.E(), invariant), restrict_matrix(a.F(), invariant));
}

Sl2Action quotient_action(const Sl2Action& a, const Subspace& invariant) {
  if (!is_submodule(a, invariant)) throw PreconditionFailed("quotient_action: subspace is not invariant");
  return Sl2Action(quotient_matrix(a.H(), invariant), quotient_matrix(a.E(), invariant), quotient_matrix(a.F(), invariant));
}

std::vector<int> Sl2Decomposition::weights() const {
  std::vector<int> w;
  for (const auto& s : summands)
    for (int k = 0; k < s.multiplicity; ++k) w.push_back(s.weight);
  return w;
}

int Sl2Decomposition::dim() const {
  int d = 0;
  for (const auto& s : summands) d += s.multiplicity * (s.weight + 1);
  return d;
}

Sl2Decomposition decompose(const Sl2Action& a) {
  const int n = a.dim();
  Sl2Decomposition out;
  if (a.H().is_diagonal()) {
    // Weight spaces are coordinate spans; only E needs a kernel computation.
    std::map<int, std::vector<int>, std::greater<>> by_weight;
    for (int c = 0; c < n; ++c) {
      Rational h = a.H().row(c).at(c);
      if (h.get_den() != 1) throw PreconditionFailed("not an algebraic sl2 action: non-integer weight");
      by_weight[static_cast<int>(h.get_num().get_si())].push_back(c);
    }
    const auto ecols = a.E().columns();
    for (const auto& [w, coords] : by_weight) {
      if (w < 0) continue;
      std::vector<SparseVector> cols;
      for (int c : coords) cols.push_back(ecols[static_cast<std::size_t>(c)]);
      Subspace k = kernel(Matrix::from_columns(n, cols));
      if (k.is_zero()) continue;
      std::vector<SparseVector> hw;
      for (const auto& v : k.basis()) {
        std::vector<SparseVector::Term> t;
        for (const auto& [i, x] : v) t.emplace_back(coords[static_cast<std::size_t>(i)], x);
        hw.push_back(SparseVector::from_terms(std::move(t)));
      }
      Subspace s = Subspace::span(n, hw);
      out.summands.push_back({w, s.dim(), std::move(s)});
    }
  } else {
    for (int w = n - 1; w >= 0; --w) {
      std::vector<SparseVector> rows;
      for (int r = 0; r < n; ++r) {
        rows.push_back(a.E().row(r));
        rows.push_back(a.H().row(r) - SparseVector::unit(r, w));
      }
      Subspace s = kernel(Matrix::from_rows(n, std::move(rows)));
      if (!s.is_zero()) out.summands.push_back({w, s.dim(), std::move(s)});
    }
  }
  if (out.dim() != n) throw PreconditionFailed("not an algebraic sl2 action: highest weights do not account for the dimension");
  return out;
}

Sl2Decomposition decompose_within(const Sl2Action& a, const Subspace& invariant) {
  Sl2Decomposition d = decompose(restrict_action(a, invariant));
  for (auto& s : d.summands) {
    std::vector<SparseVector> vecs;
    for (const auto& c : s.highest_weight.basis()) {
      std::vector<SparseVector::Term> t;
      for (const auto& [k, x] : c)
        for (const auto& [i, y] : invariant.basis()[static_cast<std::size_t>(k)]) t.emplace_back(i, x * y);
      vecs.push_back(SparseVector::from_terms(std::move(t)));
    }
    s.highest_weight = Subspace::span(invariant.ambient_dim(), vecs);
  }
  return d;
}

std::vector<int> block_weights(const Sl2Action& a, const std::vector<Subspace>& blocks) {
  std::vector<int> out;
  for (const auto& b : blocks) {
    auto w = decompose(restrict_action(a, b)).weights();
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::vector<int> clebsch_gordan(int m, int n) {
  if (m < 0 || n < 0) throw PreconditionFailed("clebsch_gordan: weights must be nonnegative");
  std::vector<int> w;
  for (int i = 0; i <= std::min(m, n); ++i) w.push_back(m + n - 2 * i);
  return w;
}

std::vector<int> wedge2_weights(int n) {
  if (n < 0) throw PreconditionFailed("wedge2_weights: weight must be nonnegative");
  std::vector<int> w;
  for (int x = 2 * n - 2; x >= 0; x -= 4) w.push_back(x);
  return w;
}

std::vector<EquivarianceViolation> equivariance_violations(const Sl2Action& a, const LieAlgebra& L) {
  if (a.dim() != L.dim()) throw DimensionMismatch("action and algebra dimensions differ");
  std::vector<EquivarianceViolation> out;
  const std::pair<char, const Matrix*> gens[] = {{'H', &a.H()}, {'E', &a.E()}, {'F', &a.F()}};
  for (const auto& [name, m] : gens)
    for (auto& v : leibniz_violations(L, *m)) out.push_back({name, v.i, v.j, std::move(v.residual)});
  return out;
}

bool is_equivariant_bilinear(const Sl2Action& a, const LieAlgebra& L) { return equivariance_violations(a, L).empty(); }

Subspace submodule_generated(const Sl2Action& a, const std::vector<SparseVector>& vectors) {
  // Closure under E and F suffices since H = [E,F].
  const auto ecols = a.E().columns();
  const auto fcols = a.F().columns();
  SpanBuilder b(a.dim());
  for (const auto& v : vectors) b.add(v);
  for (int next = 0; next < b.dim(); ++next) {
    SparseVector v = b.rows()[static_cast<std::size_t>(next)];
    b.add(apply_columns(ecols, v));
    b.add(apply_columns(fcols, v));
  }
  return b.build();
}

bool is_submodule(const Sl2Action& a, const Subspace& s) { return is_invariant(a.matrices(), s); }

Subspace invariant_complement(const Sl2Action& a, const Subspace& sub, const Subspace& within) {
  if (!within.contains(sub)) throw PreconditionFailed("invariant_complement: sub is not contained in within");
  Sl2Decomposition outer = decompose_within(a, within);
  Sl2Decomposition inner = decompose_within(a, sub);
  std::vector<SparseVector> seeds;
  for (const auto& s : outer.summands) {
    Subspace inner_hw(a.dim());
    for (const auto& t : inner.summands)
      if (t.weight == s.weight) inner_hw = t.highest_weight;
    Subspace c = complement_within(inner_hw, s.highest_weight);
    seeds.insert(seeds.end(), c.basis().begin(), c.basis().end());
  }
  return submodule_generated(a, seeds);
}

}  // namespace levi
