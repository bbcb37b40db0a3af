#include <random>

#include <gtest/gtest.h>

#include "etflat/geometry.hpp"
#include "etflat/reference_data.hpp"

using namespace etflat;

namespace {

LatticeModel model(const CoordinateFrame& cf) { return LatticeModel::from_coordinate_frame(cf); }

const std::vector<ConferencePair>& pairs(std::size_t k) {
  static std::map<std::size_t, std::vector<ConferencePair>> memo;
  auto it = memo.find(k);
  if (it == memo.end()) it = memo.emplace(k, search_conference_pairs(k)).first;
  return it->second;
}

// Σ_{±x} xx' computed directly over both signs, as a rational matrix.
RationalMatrix outer_sum(const std::vector<IntVector>& reps, std::size_t k) {
  RationalMatrix acc = RationalMatrix::zero(k, k);
  for (const auto& x : reps)
    for (int s : {1, -1}) {
      const auto col = RationalMatrix::generate(k, 1, [&](std::size_t i, std::size_t) { return BigRational(s * x[i]); });
      acc = acc + col * col.transpose();
    }
  return acc;
}

}  // namespace

TEST(Eutaxy, SimplexFamily) {
  for (std::size_t k = 2; k <= 9; ++k) {
    const auto m = model(simplex_frame(k).second);
    const auto r = strong_eutaxy_check(m, minimal_vectors(m));
    EXPECT_TRUE(r.is_strongly_eutactic) << k;
    EXPECT_TRUE(r.sum_is_zero);
    EXPECT_GT(r.parseval_constant, 0);
  }
}

TEST(Eutaxy, AgreesWithDirectOuterProductSum) {
  std::vector<LatticeModel> ms = {model(frame_6_16().second), model(frame_7_28().second)};
  for (std::size_t i = 0; i < 4; ++i) ms.push_back(model(conference_frame(pairs(5)[i], Variant::Plus, i + 1).second));
  for (const auto& m : ms) {
    const auto mv = minimal_vectors(m);
    const auto rep = strong_eutaxy_check(m, mv);
    ASSERT_TRUE(rep.is_strongly_eutactic);
    // Σ xx' = c·Q^{-1}
    EXPECT_EQ(outer_sum(mv.vectors, m.k), rep.parseval_constant * inverse(m.gram));
  }
}

TEST(Eutaxy, FrameLatticesFromThirteen) {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < pairs(13).size(); i += 4) {
    const auto n = compute_N(pairs(13)[i], 5, 0, 5);
    const Variant v = n.all_integer() ? Variant::Plus : Variant::Minus;
    const auto m = model(conference_frame(pairs(13)[i], v, i + 1).second);
    EXPECT_TRUE(strong_eutaxy_check(m, minimal_vectors(m)).is_strongly_eutactic) << i;
    ++checked;
  }
  EXPECT_EQ(checked, 3u);
}

TEST(Eutaxy, SquareLatticeConstant) {
  const auto z2 = LatticeModel::from_gram(RationalMatrix::identity(2));
  const auto r = strong_eutaxy_check(z2, minimal_vectors(z2));
  EXPECT_TRUE(r.is_strongly_eutactic);
  EXPECT_EQ(r.parseval_constant, 2);
}

TEST(Eutaxy, NonEutacticLattice) {
  // Rectangular: minimal vectors ±e1 only.
  const auto m = LatticeModel::from_gram(RationalMatrix{{1, 0}, {0, 3}});
  const auto r = strong_eutaxy_check(m, minimal_vectors(m));
  EXPECT_FALSE(r.is_strongly_eutactic);
  EXPECT_EQ(r.parseval_constant, 0);
}

TEST(Perfection, Examples) {
  const auto s5 = model(simplex_frame(5).second);
  const auto p5 = perfection_rank(s5, minimal_vectors(s5));
  EXPECT_EQ(p5.rank, 6u);
  EXPECT_EQ(p5.required, 15u);
  EXPECT_FALSE(p5.is_perfect);
  const auto hex = LatticeModel::from_gram(RationalMatrix{{2, 1}, {1, 2}});
  EXPECT_TRUE(perfection_rank(hex, minimal_vectors(hex)).is_perfect);
  const auto m = model(frame_7_28().second);
  const auto p = perfection_rank(m, minimal_vectors(m));
  EXPECT_EQ(p.rank, 28u);
  EXPECT_TRUE(p.is_perfect);
}

TEST(Perfection, RankBoundedByVectorCountAndDimension) {
  std::vector<LatticeModel> ms;
  for (std::size_t k = 2; k <= 8; ++k) ms.push_back(model(simplex_frame(k).second));
  ms.push_back(model(frame_6_16().second));
  for (const auto& m : ms) {
    const auto mv = minimal_vectors(m);
    const auto p = perfection_rank(m, mv);
    EXPECT_LE(p.rank, std::min(mv.vectors.size(), m.k * (m.k + 1) / 2));
  }
}

TEST(Perfection, UnimodularInvariance) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> mult(-1, 1);
  const auto base = model(simplex_frame(4).second);
  const auto want = perfection_rank(base, minimal_vectors(base)).rank;
  for (int t = 0; t < 10; ++t) {
    const std::size_t k = base.k;
    auto up = RationalMatrix::generate(k, k, [&](std::size_t i, std::size_t j) { return BigRational(i == j ? 1 : (i < j ? mult(rng) : 0)); });
    const auto m = LatticeModel::from_gram(up.transpose() * base.gram * up);
    EXPECT_EQ(perfection_rank(m, minimal_vectors(m)).rank, want);
  }
}

TEST(Perfection, LowerTriangleOrder) {
  EXPECT_EQ(lower_triangle_outer(std::vector<long>{1, 2, 3}), (std::vector<BigInt>{1, 2, 3, 4, 6, 9}));
}

TEST(Bacher, MatchesReferenceTable) {
  const auto d = bacher_matrix_728();
  for (std::size_t i = 0; i < 28; ++i)
    for (std::size_t j = 0; j < 28; ++j) ASSERT_EQ(d(i, j), kBacherTable728[i][j]) << i << "," << j;
}

TEST(Bacher, Determinant) {
  EXPECT_EQ(bacher_det_728(), BigInt(3) * pow(BigInt(2), 159));
  EXPECT_NE(bacher_det_728(BacherConvention::ScaledRows), 0);
}

TEST(Bacher, FirstColumnAndA0) {
  const auto a0 = bacher_a0(BacherConvention::TableRows);
  EXPECT_EQ(a0(0, 0), 1);
  EXPECT_EQ(a0(0, 1), -1);
  EXPECT_EQ(a0(6, 7), -1);
  EXPECT_EQ(bacher_a0(BacherConvention::ScaledRows)(6, 7), -7);
  // f_1 = (-3,-3,1,1,1,1,1,1): A0 f_1 = (0, -7, -6, -5, -4, -3, -2).
  const auto d = bacher_matrix_728();
  const std::vector<long> w{0, -7, -6, -5, -4, -3, -2};
  const auto col = lower_triangle_outer(w);
  for (std::size_t i = 0; i < 28; ++i) EXPECT_EQ(d(i, 0), col[i]);
}
