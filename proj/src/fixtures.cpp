#include "levi/fixtures.hpp"

#include "levi/error.hpp"

namespace levi {

LieAlgebra heisenberg(int n) {
  if (n < 1) throw PreconditionFailed("heisenberg: n must be at least 1");
  LieAlgebra h(2 * n + 1, "heisenberg" + std::to_string(n));
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  h.set_labels(std::move(labels));
  for (int i = 0; i < n; ++i) h.add_structure_constant(i, n + i, 2 * n, 1);
  std::vector<int> grade(static_cast<std::size_t>(2 * n + 1), 1);
  grade.back() = 2;
  h.set_grade(std::move(grade));
  return h;
}

LieAlgebra standard_filiform(int n) {
  if (n < 3) throw PreconditionFailed("standard_filiform: n must be at least 3");
  LieAlgebra f(n, "filiform" + std::to_string(n));
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  f.set_labels(std::move(labels));
  for (int i = 1; i + 1 < n; ++i) f.add_structure_constant(0, i, i + 1, 1);
  return f;
}

LieAlgebra dl8() {
  LieAlgebra a(8, "Dl8");
  a.set_labels({"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"});
  // 1-based pairs as written for the algebra; antisymmetry fills the rest.
  const struct {
    int i, j, k, c;
  } products[] = {
      {1, 2, 5, 1},  {3, 4, 5, -1}, {1, 3, 6, 1},  {2, 4, 6, 1},  {1, 4, 7, 1},
      {2, 6, 7, -1}, {3, 5, 7, -1}, {1, 5, 8, -1}, {2, 3, 8, 1},  {4, 6, 8, -1},
  };
  for (const auto& p : products) a.add_structure_constant(p.i - 1, p.j - 1, p.k - 1, p.c);
  return a;
}

LieAlgebra glued_l0_h1() {
  LieAlgebra g(6, "L0(h1)");
  g.set_labels({"x", "y", "z", "h", "e", "f"});
  enum { x, y, z, h, e, f };
  g.add_structure_constant(x, y, z, 1);
  g.add_structure_constant(h, x, x, 1);
  g.add_structure_constant(h, y, y, -1);
  g.add_structure_constant(e, y, x, 1);
  g.add_structure_constant(f, x, y, 1);
  g.add_structure_constant(h, e, e, 2);
  g.add_structure_constant(h, f, f, -2);
  g.add_structure_constant(e, f, h, 1);
  return g;
}

}  // namespace levi
