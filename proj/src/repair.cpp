#include "levi/repair.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "levi/analysis.hpp"
#include "levi/error.hpp"
#include "levi/subspace.hpp"

namespace levi {

namespace {

using Pair = std::pair<int, int>;

Pair ordered(int i, int j) { return i < j ? Pair{i, j} : Pair{j, i}; }

// Affine residual: per target coordinate, a linear form in the unknowns plus
// a constant.
struct Residual {
  std::map<int, SparseVector> linear;
  std::map<int, Rational> constant;
};

class System {
 public:
  System(const LieAlgebra& L, const Sl2Action& a, const std::set<Pair>& flagged) : L_(L), gens_(a.matrices()) {
    const int n = L.dim();
    for (int k = 0; k < n; ++k) {
      const Rational w = a.H().at(k, k);
      if (w.get_den() != 1)
        throw PreconditionFailed("H weights must be integers");
      weight_.push_back(static_cast<int>(w.get_num().get_si()));
    }
    // depth(k) = largest j with b_k in N^j
    const auto lcs = lower_central_series(L);
    depth_.assign(static_cast<std::size_t>(n), 1);
    for (std::size_t j = 1; j < lcs.size(); ++j)
      for (int k = 0; k < n; ++k)
        if (lcs[j].contains(SparseVector::unit(k))) depth_[static_cast<std::size_t>(k)] = static_cast<int>(j) + 1;
    for (const Pair& p : flagged) {
      for (int k = 0; k < n; ++k) {
        if (!allowed(p, k)) continue;
        column_[{p.first, p.second, k}] = static_cast<int>(unknowns_.size());
        unknowns_.push_back({p.first, p.second, k});
      }
    }
    flagged_ = flagged;
  }

  int unknowns() const { return static_cast<int>(unknowns_.size()); }
  const std::vector<std::tuple<int, int, int>>& unknown_list() const { return unknowns_; }

  bool allowed(const Pair& p, int k) const {
    const auto d = [&](int i) { return depth_[static_cast<std::size_t>(i)]; };
    const int max_depth = *std::max_element(depth_.begin(), depth_.end());
    return weight_[static_cast<std::size_t>(k)] == weight_[static_cast<std::size_t>(p.first)] + weight_[static_cast<std::size_t>(p.second)] &&
           d(k) >= std::min(d(p.first) + d(p.second), max_depth);
  }

  bool touches(int g, int i, int j) const {
    if (flagged_.count({i, j})) return true;
    const Matrix& G = gens_[static_cast<std::size_t>(g)];
    for (const auto& [t, v] : G.column(i))
      if (t != j && flagged_.count(ordered(t, j))) return true;
    for (const auto& [t, v] : G.column(j))
      if (t != i && flagged_.count(ordered(i, t))) return true;
    return false;
  }

  // g[b_i,b_j] - [g b_i, b_j] - [b_i, g b_j]
  Residual equation(int g, int i, int j) const {
    Residual r;
    const Matrix& G = gens_[static_cast<std::size_t>(g)];
    add_bracket(r, i, j, 1, &G);
    for (const auto& [t, v] : G.column(i)) add_bracket(r, t, j, -v, nullptr);
    for (const auto& [t, v] : G.column(j)) add_bracket(r, i, t, -v, nullptr);
    return r;
  }

 private:
  void add_term(Residual& r, int target, const Rational& c, int column, const Matrix* G) const {
    auto put = [&](int row, const Rational& v) {
      if (column < 0)
        r.constant[row] += v;
      else
        r.linear[row].add_scaled(SparseVector::unit(column), v);
    };
    if (!G) {
      put(target, c);
      return;
    }
    for (const auto& [t, v] : G->column(target)) put(t, c * v);
  }

  void add_bracket(Residual& r, int a, int b, Rational c, const Matrix* G) const {
    if (a == b) return;
    if (a > b) {
      std::swap(a, b);
      c = -c;
    }
    const Pair p{a, b};
    const bool open = flagged_.count(p) > 0;
    for (const auto& [k, v] : L_.stored(a, b))
      if (!open || !allowed(p, k)) add_term(r, k, c * v, -1, G);
    if (!open) return;
    for (int k = 0; k < L_.dim(); ++k) {
      auto it = column_.find({a, b, k});
      if (it != column_.end()) add_term(r, k, c, it->second, G);
    }
  }

  const LieAlgebra& L_;
  std::vector<Matrix> gens_;
  std::vector<int> weight_, depth_;
  std::set<Pair> flagged_;
  std::map<std::tuple<int, int, int>, int> column_;
  std::vector<std::tuple<int, int, int>> unknowns_;
};

}  // namespace

EquivariantRepair repair_equivariant(const LieAlgebra& L, const Sl2Action& a) {
  if (a.dim() != L.dim()) throw DimensionMismatch("action and algebra dimensions differ");
  if (!a.H().is_diagonal()) throw PreconditionFailed("repair needs a diagonal H");
  EquivariantRepair out;
  out.repaired = L;
  out.violations = equivariance_violations(a, L);
  if (out.violations.empty()) {
    out.ok = true;
    out.message = "already equivariant";
    return out;
  }

  const auto gens = a.matrices();
  std::set<Pair> flagged;
  for (const auto& v : out.violations) {
    const int g = v.generator == 'H' ? 0 : v.generator == 'E' ? 1 : 2;
    flagged.insert({v.i, v.j});
    for (const auto& [t, c] : gens[static_cast<std::size_t>(g)].column(v.i))
      if (t != v.j) flagged.insert(ordered(t, v.j));
    for (const auto& [t, c] : gens[static_cast<std::size_t>(g)].column(v.j))
      if (t != v.i) flagged.insert(ordered(v.i, t));
  }
  out.flagged.assign(flagged.begin(), flagged.end());

  System sys(L, a, flagged);
  const int U = sys.unknowns();
  out.unknowns = U;
  std::vector<SparseVector> rows;
  Vector rhs;
  for (int g = 0; g < 3; ++g)
    for (int i = 0; i < L.dim(); ++i)
      for (int j = i + 1; j < L.dim(); ++j) {
        if (!sys.touches(g, i, j)) continue;
        Residual r = sys.equation(g, i, j);
        std::set<int> targets;
        for (const auto& [t, v] : r.linear) targets.insert(t);
        for (const auto& [t, v] : r.constant) targets.insert(t);
        for (int t : targets) {
          SparseVector lhs = r.linear.count(t) ? r.linear[t] : SparseVector{};
          const Rational c = r.constant.count(t) ? r.constant[t] : Rational(0);
          if (lhs.is_zero() && c == 0) continue;
          rows.push_back(std::move(lhs));
          rhs.push_back(-c);
        }
      }
  out.equations = static_cast<int>(rows.size());
  const Matrix A = Matrix::from_rows(U, rows);

  Vector old(static_cast<std::size_t>(U));
  for (int u = 0; u < U; ++u) {
    const auto [i, j, k] = sys.unknown_list()[static_cast<std::size_t>(u)];
    old[static_cast<std::size_t>(u)] = L.stored(i, j).at(k);
  }

  std::optional<Vector> solution;
  const auto particular = solve(A, rhs);
  if (!particular) {
    out.message = "no equivariant correction on the flagged entries";
    return out;
  }
  if (kernel(A).is_zero()) {
    solution = particular;
  } else {
    // Correct one entry, keep every other flagged entry as given.
    std::vector<Vector> candidates;
    for (int u = 0; u < U; ++u) {
      Vector b = rhs;
      Vector x = old;
      x[static_cast<std::size_t>(u)] = 0;
      const Vector Ax = A.apply(x);
      for (std::size_t r = 0; r < b.size(); ++r) b[r] -= Ax[r];
      Matrix col(A.rows(), 1);
      const SparseVector cu = A.column(u);
      for (const auto& [r, v] : cu) col.set(r, 0, v);
      const auto s = solve(col, b);
      if (!s || cu.is_zero()) continue;
      x[static_cast<std::size_t>(u)] = (*s)[0];
      if (x != old) candidates.push_back(x);
    }
    if (candidates.size() != 1) {
      out.message = "correction not unique (" + std::to_string(kernel(A).dim()) + "-dimensional family, " +
                    std::to_string(candidates.size()) + " single-entry candidates)";
      return out;
    }
    solution = candidates.front();
  }

  std::map<Pair, SparseVector> values;
  for (const Pair& p : flagged) {
    SparseVector v;
    for (const auto& [k, c] : L.stored(p.first, p.second))
      if (!sys.allowed(p, k)) v.add_scaled(SparseVector::unit(k), c);
    values[p] = v;
  }
  for (int u = 0; u < U; ++u) {
    const auto [i, j, k] = sys.unknown_list()[static_cast<std::size_t>(u)];
    const Rational& x = (*solution)[static_cast<std::size_t>(u)];
    values[{i, j}].add_scaled(SparseVector::unit(k), x);
    if (x != old[static_cast<std::size_t>(u)]) out.diff.push_back({i, j, k, old[static_cast<std::size_t>(u)], x});
  }
  LieAlgebra fixed = L;
  for (auto& [p, v] : values) fixed.set_bracket(p.first, p.second, std::move(v));
  if (!equivariance_violations(a, fixed).empty()) {
    out.message = "correction found but the result is still not equivariant";
    return out;
  }
  out.repaired = std::move(fixed);
  out.ok = true;
  out.message = std::to_string(out.diff.size()) + " entr" + (out.diff.size() == 1 ? "y" : "ies") + " changed";
  return out;
}

}  // namespace levi
