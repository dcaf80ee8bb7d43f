#include "levi/table2.hpp"

#include <string>
#include <vector>

#include "levi/io.hpp"

namespace levi {

LieAlgebra table2() {
  LieAlgebra L = parse_lieconst(table2_source());
  std::vector<std::string> labels;
  for (auto [prefix, count] : {std::pair{'v', 11}, {'w', 19}, {'z', 7}, {'x', 15}})
    for (int i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(i));
  L.set_labels(std::move(labels));
  return L;
}

Sl2Action table2_action() { return block_sum({10, 18, 6, 14}); }

GeneratorKernel table2_kernel(const LieAlgebra& target) {
  GeneratorKernel out;
  out.free = free_nilpotent(11, 3);
  std::vector<SparseVector> G;
  for (int i = 0; i < 11; ++i) G.push_back(SparseVector::unit(i));
  out.theta = natural_hom(out.free, target, G);
  out.surjective = rank(out.theta) == target.dim();
  const Representation rho = extend_to_free(out.free, sl2_representation(irreducible(10)));
  out.kernel = make_s_ideal(out.free, rho, kernel(out.theta));
  out.homogeneous = is_homogeneous_ideal(out.free, out.kernel.subspace);
  return out;
}

}  // namespace levi
