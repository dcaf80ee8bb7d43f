#include "levi/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "levi/error.hpp"
#include "levi/matrix.hpp"

namespace levi {

namespace {

using Gram = std::vector<std::vector<Rational>>;

Gram make_gram(char type, int n) {
  Gram g(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  auto set = [&](int i, int j, Rational v) {  // 1-based, symmetric
    g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
    g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
  };
  auto chain = [&](int from, int to, Rational v) {
    for (int i = from; i < to; ++i) set(i, i + 1, v);
  };
  for (int i = 1; i <= n; ++i) set(i, i, 2);
  switch (type) {
    case 'A':
      chain(1, n, -1);
      break;
    case 'B':  // α_n short
      chain(1, n, -1);
      set(n, n, 1);
      break;
    case 'C':  // α_n long
      for (int i = 1; i < n; ++i) set(i, i, 1);
      chain(1, n - 1, Rational(-1, 2));
      set(n - 1, n, -1);
      break;
    case 'D':
      chain(1, n - 1, -1);
      set(n - 2, n, -1);
      break;
    case 'E':  // chain 1-3-4-5-..., node 2 attached to 4
      set(1, 3, -1);
      chain(3, n, -1);
      set(2, 4, -1);
      break;
    case 'F':  // α_1, α_2 long
      set(3, 3, 1);
      set(4, 4, 1);
      set(1, 2, -1);
      set(2, 3, -1);
      set(3, 4, Rational(-1, 2));
      break;
    case 'G':  // α_1 short
      set(2, 2, 6);
      set(1, 2, -3);
      break;
    default:
      throw PreconditionFailed(std::string("unknown Cartan type ") + type);
  }
  return g;
}

void check_type(char type, int n) {
  bool ok = false;
  switch (type) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) throw PreconditionFailed(std::string("no simple Lie algebra of type ") + type + std::to_string(n));
}

Integer binom(const Integer& n, unsigned long k) {
  if (n < 0 || n < static_cast<long>(k)) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(' '), b = s.find_last_not_of(' ');
  return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
}

// Splits on '+' outside parentheses.
std::vector<std::string> split_plus(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Leading decimal coefficient (default 1) and the rest.
std::pair<int, std::string> split_coefficient(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  int c = i == 0 ? 1 : std::stoi(s.substr(0, i));
  return {c, s.substr(i)};
}

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  check_type(type, rank);
  gram_ = make_gram(type, rank);

  // Root strings: β + α_i is a root iff q = p − <β, α_i^∨> > 0, where p is the
  // length of the α_i-string below β.
  std::set<std::vector<int>> seen;
  std::vector<int> zero(static_cast<std::size_t>(rank), 0);
  for (int i = 0; i < rank; ++i) {
    auto a = zero;
    a[static_cast<std::size_t>(i)] = 1;
    positive_.push_back(a);
    seen.insert(a);
  }
  for (std::size_t next = 0; next < positive_.size(); ++next) {
    const std::vector<int> beta = positive_[next];
    for (int i = 0; i < rank; ++i) {
      int p = 0;
      auto down = beta;
      while (true) {
        --down[static_cast<std::size_t>(i)];
        if (!seen.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += beta[static_cast<std::size_t>(j)] * cartan(i, j);
      if (p - pairing > 0) {
        auto up = beta;
        ++up[static_cast<std::size_t>(i)];
        if (seen.insert(up).second) positive_.push_back(up);
      }
    }
  }
}

std::string RootSystem::name() const { return std::string(1, type_) + std::to_string(rank_); }

int RootSystem::cartan(int i, int j) const {
  Rational c = 2 * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  return static_cast<int>(c.get_num().get_si());
}

Rational RootSystem::inner(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += x[static_cast<std::size_t>(i)] * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
  return s;
}

std::vector<Rational> RootSystem::fundamental_weight(int j) const {
  Matrix a(rank_, rank_);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) a.set(r, c, cartan(r, c));
  Vector rhs(static_cast<std::size_t>(rank_));
  rhs[static_cast<std::size_t>(j)] = 1;
  auto x = solve(a, rhs);
  if (!x) throw Error("fundamental_weight: singular Cartan matrix");
  return *x;
}

std::vector<Rational> RootSystem::rho() const {
  std::vector<Rational> r(static_cast<std::size_t>(rank_));
  for (const auto& a : positive_)
    for (int i = 0; i < rank_; ++i) r[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)];
  for (auto& x : r) x /= 2;
  return r;
}

Integer RootSystem::weyl_dim(const std::vector<int>& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_) throw DimensionMismatch("weyl_dim: weight has the wrong rank");
  for (int x : lambda)
    if (x < 0) throw PreconditionFailed("weyl_dim: weight is not dominant");
  // With d_j = (α_j, α_j)/2 and α = Σ k_j α_j, the coroot pairing ratio is
  // Σ k_j d_j (λ_j + 1) / Σ k_j d_j.
  Rational prod = 1;
  for (const auto& a : positive_) {
    Rational num = 0, den = 0;
    for (int j = 0; j < rank_; ++j) {
      Rational dj = gram_[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] / 2;
      num += a[static_cast<std::size_t>(j)] * dj * (lambda[static_cast<std::size_t>(j)] + 1);
      den += a[static_cast<std::size_t>(j)] * dj;
    }
    prod *= num / den;
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw Error("weyl_dim: non-integral result");
  return prod.get_num();
}

std::vector<int> RootSystem::highest_root_weight() const {
  const auto& theta = positive_.back();
  std::vector<int> w(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[static_cast<std::size_t>(i)] += cartan(i, j) * theta[static_cast<std::size_t>(j)];
  return w;
}

ModuleSum parse_module_sum(const std::string& text, int rank) {
  ModuleSum out;
  const std::string body = trim(text);
  if (body == "0") return out;
  for (const auto& piece : split_plus(body)) {
    auto [mult, rest] = split_coefficient(piece);
    std::vector<int> weight(static_cast<std::size_t>(rank), 0);
    if (rest == "k") {
      out.terms.push_back({mult, weight});
      continue;
    }
    if (rest.size() < 4 || rest.rfind("V(", 0) != 0 || rest.back() != ')') throw ParseError("module term '" + piece + "'");
    for (const auto& part : split_plus(rest.substr(2, rest.size() - 3))) {
      auto [c, fw] = split_coefficient(part);
      if (fw.size() < 2 || fw[0] != 'l') throw ParseError("weight term '" + part + "'");
      int j = 0;
      try {
        j = std::stoi(fw.substr(1));
      } catch (const std::exception&) {
        throw ParseError("weight term '" + part + "'");
      }
      if (j < 1 || j > rank) throw ParseError("fundamental weight index out of range in '" + part + "'");
      weight[static_cast<std::size_t>(j - 1)] += c;
    }
    out.terms.push_back({mult, weight});
  }
  return out;
}

Integer module_sum_dim(const RootSystem& rs, const ModuleSum& m) {
  Integer d = 0;
  for (const auto& t : m.terms) d += t.multiplicity * rs.weyl_dim(t.weight);
  return d;
}

const std::vector<Table1Row>& table1_rows() {
  // ASCII transcription: l<j> is the fundamental weight λ_j, k the trivial module.
  static const std::vector<Table1Row> rows = {
      {'A', {1}, "V(l1)", "k", "0", "V(l1)"},
      {'A', {2}, "V(l1)", "V(l2)", "k", "V(l1+l2)"},
      {'A', {2}, "V(l2)", "V(l1)", "k", "V(l1+l2)"},
      {'A', {3, 4}, "V(l1)", "V(l2)", "V(l3)", "V(l1+l2)"},
      {'B', {3}, "V(l1)", "V(l2)", "V(2l3)", "V(l1+l2) + V(l1)"},
      {'B', {4, 5}, "V(l1)", "V(l2)", "V(l3)", "V(l1+l2) + V(l1)"},
      {'C', {2}, "V(l1)", "V(l2) + k", "V(l1)", "V(l1+l2) + V(l1)"},
      {'C', {2}, "V(l2)", "V(2l1)", "V(2l1)", "V(2l1+l2) + V(l2)"},
      {'C', {3, 4}, "V(l1)", "V(l2) + k", "V(l1) + V(l3)", "V(l1+l2) + V(l1)"},
      {'D', {4}, "V(l1)", "V(l2)", "V(l3+l4)", "V(l1+l2) + V(l1)"},
      {'D', {5, 6}, "V(l1)", "V(l2)", "V(l3)", "V(l1+l2) + V(l1)"},
      {'G', {2}, "V(l1)", "V(l1) + V(l2)", "V(2l1) + V(l1) + k", "V(l1+l2) + V(2l1) + V(l1) + V(l2)"},
      {'G', {2}, "V(l2)", "V(3l1) + V(l2)", "V(4l1) + V(3l1) + V(2l1) + V(2l2) + V(l2) + k",
       "V(3l1+l2) + V(2l1+l2) + V(l1+l2) + V(2l2) + V(l2) + V(3l1) + V(2l1)"},
      {'F', {4}, "V(l1)", "V(l1) + V(l2)", "V(2l1) + V(l2) + V(2l3) + V(2l4) + k",
       "V(2l1) + V(l1) + V(l2) + V(2l4) + V(l1+l2) + V(l1+2l4) + V(l3+l4)"},
      {'E', {6}, "V(l1)", "V(l3)", "V(l4)", "V(l1+l3) + V(l1+l6) + V(l2)"},
      {'E', {7}, "V(l1)", "V(l1) + V(l3)", "V(2l1) + V(l3) + V(l4) + V(l6) + k",
       "V(l1+l3) + V(l1+l6) + V(l2+l7) + V(2l1) + 2V(l1) + V(l3) + V(l6)"},
      {'E', {8}, "V(l1)", "V(l1+l8) + V(l3) + V(l7) + V(l8)",
       "V(2l1+l8) + V(l3+l8) + V(l1+l2) + V(l6+l8) + 2V(l1+l7) + 2V(l2+l8) + 2V(l7+l8) + 3V(l1+l8) + 2V(l1) + V(l2) "
       "+ 2V(l3) + V(l4) + V(l6) + 3V(l7) + 3V(l8) + V(l8)",
       // footnote
       "2V(l5) + 2V(l1+2l8) + 2V(2l1) + 3V(l7+l8) + 3V(l6) + 4V(l2) + 2V(2l8) + V(l1+l3) + V(l1+l6) + V(l2+l7) "
       "+ V(2l1+l8) + V(l3+l8) + 2V(l1+l2) + V(l6+l8) + 3V(l1+l7) + 3V(l2+l8) + 3V(l3) + 5V(l1+l8) + 3V(l1) + 3V(l7) "
       "+ 2V(l8)"},
  };
  return rows;
}

std::string Table1Line::format() const {
  return type + " " + row + " " + column + " computed=" + computed.get_str() + " listed=" + listed.get_str() + " " +
         (ok() ? "OK" : "MISMATCH");
}

std::vector<Table1Line> table1_check(const Table1Row& row) {
  std::vector<Table1Line> out;
  for (int n : row.ranks) {
    RootSystem rs(row.type, n);
    const Integer D = module_sum_dim(rs, parse_module_sum(row.m, n));
    const Integer w2 = binom(D, 2), w3 = binom(D, 3);
    const std::pair<const char*, std::pair<Integer, const std::string*>> cols[] = {
        {"wedge2", {w2, &row.wedge2}}, {"wedge3", {w3, &row.wedge3}}, {"s", {D * w2 - w3, &row.s}}};
    for (const auto& [name, data] : cols)
      out.push_back({rs.name(), "m=" + row.m, name, data.first, module_sum_dim(rs, parse_module_sum(*data.second, n))});
  }
  return out;
}

std::vector<Table1Line> table1_audit() {
  std::vector<Table1Line> out;
  for (const auto& row : table1_rows()) {
    auto lines = table1_check(row);
    out.insert(out.end(), lines.begin(), lines.end());
  }
  return out;
}

}  // namespace levi
