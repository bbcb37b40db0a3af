// Walks through the (5,10) conference frames: search, N, coordinates and the
// lattice invariants of each of the four frames.

#include <iostream>

#include "etflat/circulant.hpp"
#include "etflat/frames.hpp"
#include "etflat/geometry.hpp"
#include "etflat/lattice.hpp"

int main() {
  using namespace etflat;
  const auto pairs = search_conference_pairs(5);
  std::cout << pairs.size() << " conference pairs of size 5\n\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const auto n_row = compute_N(p, 3, 0, 3);
    std::cout << "(t" << i + 1 << ")  A = (" << format_signs(p.a.values()) << ")  D = (" << format_signs(p.d.values())
              << ")\n      N = (" << format_signs(n_row) << ")\n";

    const auto [spec, cf] = conference_frame(p, Variant::Plus, i + 1);
    const auto model = LatticeModel::from_coordinate_frame(cf);
    const auto mv = minimal_vectors(model);
    std::cout << "      det = " << lattice_determinant(model).to_string() << ", minimal vectors: " << mv.count_with_signs()
              << (frame_vectors_are_minimal(model, mv) ? " (exactly ± the frame)" : "")
              << ", eutactic: " << (strong_eutaxy_check(model, mv).is_strongly_eutactic ? "yes" : "no")
              << ", perfection rank " << perfection_rank(model, mv).rank << "/15\n";
  }
}
