#pragma once

#include <string>
#include <vector>

#include "levi/rational.hpp"

namespace levi {

/// Root system of a simple Lie algebra in Bourbaki numbering. Everything is
/// expressed through the Gram matrix of the simple roots: roots are integer
/// vectors of simple-root coefficients, weights are given by their
/// coordinates on the fundamental weights.
class RootSystem {
 public:
  /// type is one of A, B, C, D, E, F, G; e.g. ('B', 4), ('E', 8), ('G', 2).
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// (α_i, α_j)
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  /// <α_i^∨, α_j> = 2 (α_i, α_j) / (α_i, α_i)
  int cartan(int i, int j) const;
  /// Simple-root coefficients of every positive root, by height.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }

  /// Inner product of two vectors given in simple-root coordinates.
  Rational inner(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  /// Fundamental weight λ_j in simple-root coordinates.
  std::vector<Rational> fundamental_weight(int j) const;
  /// Half the sum of the positive roots, in simple-root coordinates.
  std::vector<Rational> rho() const;

  /// Π_{α>0} <λ+ρ, α^∨> / <ρ, α^∨> for λ given on the fundamental weights.
  /// Throws PreconditionFailed for a non-dominant λ.
  Integer weyl_dim(const std::vector<int>& lambda) const;
  /// Highest weight of the adjoint module.
  std::vector<int> highest_root_weight() const;

 private:
  char type_;
  int rank_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> positive_;
};

/// A multiset of irreducible modules, e.g. "V(l1+l2) + 2V(l5) + k" or "0".
/// "k" is the trivial module.
struct ModuleSum {
  struct Term {
    int multiplicity;
    std::vector<int> weight;
  };
  std::vector<Term> terms;
};

/// Throws ParseError on malformed input or weights beyond the rank.
ModuleSum parse_module_sum(const std::string& text, int rank);
Integer module_sum_dim(const RootSystem& rs, const ModuleSum& m);

/// One row of the nilindex 2 and 3 table: m, then the listed ⋀²m, ⋀³m and
/// (m ⊗ ⋀²m)/⋀³m. Generic rows hold the ranks at which they are checked.
struct Table1Row {
  char type;
  std::vector<int> ranks;
  std::string m, wedge2, wedge3, s;
};

const std::vector<Table1Row>& table1_rows();

struct Table1Line {
  std::string type;    // e.g. "C3"
  std::string row;     // e.g. "m=V(l1)"
  std::string column;  // wedge2, wedge3 or s
  Integer computed, listed;
  bool ok() const { return computed == listed; }
  /// "TYPE row COLUMN computed=<n> listed=<n> OK|MISMATCH"
  std::string format() const;
};

/// With D = dim m: C(D,2), C(D,3) and D·C(D,2) − C(D,3) against the listed
/// columns, for each rank instance of the row.
std::vector<Table1Line> table1_check(const Table1Row& row);
std::vector<Table1Line> table1_audit();

}  // namespace levi
