// The (7,28) lattice: minimal vectors, eutaxy, perfection and density.

#include <iostream>

#include "etflat/geometry.hpp"
#include "etflat/lattice.hpp"

int main() {
  using namespace etflat;
  const auto [spec, cf] = frame_7_28();
  const auto model = LatticeModel::from_coordinate_frame(cf);
  const auto mv = minimal_vectors(model);
  const auto eut = strong_eutaxy_check(model, mv);
  const auto perf = perfection_rank(model, mv);

  std::cout << "basis Gram determinant  " << bareiss_determinant(model.gram) << '\n'
            << "minimal norm            " << mv.min_norm_sq << " (" << mv.count_with_signs() << " vectors)\n"
            << "strongly eutactic       " << (eut.is_strongly_eutactic ? "yes" : "no") << ", sum xx' = "
            << eut.parseval_constant << " Q^-1\n"
            << "perfection rank         " << perf.rank << " of " << perf.required << '\n'
            << "det of the 28x28 matrix " << bacher_det_728() << '\n'
            << "packing density         " << packing_density(model, mv) << '\n';
}
