#include <gtest/gtest.h>

#include "etflat/frames.hpp"
#include "etflat/lattice.hpp"

using namespace etflat;

namespace {

const std::vector<ConferencePair>& pairs(std::size_t k) {
  static std::map<std::size_t, std::vector<ConferencePair>> memo;
  auto it = memo.find(k);
  if (it == memo.end()) it = memo.emplace(k, search_conference_pairs(k)).first;
  return it->second;
}

bool all_integer(const RationalMatrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](const BigRational& v) { return is_integer(v); });
}

}  // namespace

TEST(FrameSpec, AlphaAndGamma) {
  EXPECT_EQ(frame_alpha(3, 6).to_string(), "1*sqrt(5)");
  EXPECT_EQ(frame_alpha(5, 10).to_string(), "3");
  EXPECT_EQ(frame_alpha(9, 10).to_string(), "9");
  EXPECT_THROW(frame_alpha(3, 3), Error);
  EXPECT_EQ(simplex_frame(2).first.gamma, make_rational(3, 2));
}

TEST(Simplex, ThreeDimensional) {
  const auto [spec, cf] = simplex_frame(3);
  const auto g = spec.gram();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g(i, j), i == j ? BigRational(1) : make_rational(-1, 3));
  EXPECT_EQ(cf.coords, (RationalMatrix{{-1}, {-1}, {-1}}));
  EXPECT_EQ(cf.beta, 1);
  EXPECT_TRUE(cf.gram_consistent());
}

TEST(Simplex, NineDimensional) {
  const auto [spec, cf] = simplex_frame(9);
  EXPECT_EQ(spec.alpha.to_string(), "9");
  const auto v = validate_frame(spec);
  EXPECT_TRUE(v.gerzon_ok);
  EXPECT_TRUE(v.passed());
}

TEST(Simplex, ValidatesForManySizes) {
  for (std::size_t k = 2; k <= 15; ++k) EXPECT_TRUE(validate_frame(simplex_frame(k).first).passed()) << k;
}

TEST(Conference, PlusVariantOfFirstFiveTenPair) {
  const auto [spec, cf] = conference_frame(pairs(5)[0], Variant::Plus, 1);
  EXPECT_EQ(spec.label.str(), "conference:5:1:plus");
  EXPECT_TRUE(validate_frame(spec).passed());
  EXPECT_EQ(cf.beta, 1);
  EXPECT_TRUE(all_integer(cf.coords));
  const auto a = to_rational(pairs(5)[0].a.matrix());
  EXPECT_EQ(cf.basis_gram(), RationalMatrix::identity(5) + make_rational(1, 3) * a);
  EXPECT_TRUE(cf.gram_consistent());
}

TEST(Conference, MinusVariantForThirteen) {
  std::size_t minus_ok = 0;
  for (std::size_t i = 0; i < pairs(13).size(); ++i) {
    const auto& p = pairs(13)[i];
    const auto n = compute_N(p, 5, 0, 5);
    if (all_integer(n.matrix())) continue;
    const auto [spec, cf] = conference_frame(p, Variant::Minus, i + 1);
    EXPECT_EQ(cf.beta, 1);
    EXPECT_TRUE(cf.gram_consistent());
    EXPECT_EQ(cf.basis_gram(), RationalMatrix::identity(13) - make_rational(1, 5) * to_rational(p.a.matrix()));
    ++minus_ok;
  }
  EXPECT_EQ(minus_ok, 6u);
}

TEST(Conference, SevenFourteenIsIrrational) {
  const auto& p = pairs(7);
  ASSERT_FALSE(p.empty());
  try {
    conference_frame(p[0], Variant::Plus);
    FAIL() << "expected IrrationalAlpha";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IrrationalAlpha);
  }
  // The frame itself is still a tight equiangular frame.
  const auto spec = conference_frame_spec(p[0], {FrameKind::Conference, 7, 1, Variant::Plus});
  EXPECT_TRUE(validate_frame(spec).passed());
  EXPECT_THROW(spec.gram(), Error);
}

TEST(Conference, NineEighteenAndThreeSixAreTightButIrrational) {
  for (std::size_t k : {3u, 9u}) {
    ASSERT_FALSE(pairs(k).empty()) << k;
    const auto spec = conference_frame_spec(pairs(k)[0], {FrameKind::Conference, k, 1, Variant::Plus});
    EXPECT_TRUE(validate_frame(spec).passed()) << k;
    EXPECT_FALSE(spec.alpha.is_rational());
  }
}

TEST(TwoParameter, ReducesToPlusVariant) {
  const auto& p = pairs(5)[0];
  const auto plus = conference_frame(p, Variant::Plus).second;
  const auto ab = goethals_seidel_coordinates(p, 3, 0);
  EXPECT_EQ(ab.coords, plus.coords);
}

TEST(TwoParameter, ZeroThreeGivesConsistentCoordinates) {
  const auto& p = pairs(5)[0];
  const auto cf = goethals_seidel_coordinates(p, 0, 3);
  EXPECT_TRUE(cf.gram_consistent());
}

TEST(TwoParameter, AnyAdmissiblePairGivesTheSameLattice) {
  // (a, b) on the circle a² + b² = 25 for the (13,26) pairs.
  const std::vector<std::pair<BigRational, BigRational>> ab = {{5, 0}, {3, 4}, {4, 3}, {-3, 4}, {0, 5}, {3, -4}};
  for (std::size_t i = 0; i < pairs(13).size(); i += 3) {
    const auto& p = pairs(13)[i];
    const auto reference = conference_frame(p, Variant::Plus).second;
    const auto ref_model = LatticeModel::from_coordinate_frame(reference);
    for (const auto& [a, b] : ab) {
      CoordinateFrame cf;
      try {
        cf = goethals_seidel_coordinates(p, a, b);
      } catch (const Error& e) {
        // D + bI and A singular together, or the lead block singular.
        EXPECT_TRUE(e.code() == ErrorCode::SingularLeadBlock || e.code() == ErrorCode::BothSingular);
        continue;
      }
      ASSERT_TRUE(cf.gram_consistent());
      EXPECT_EQ(cf.coords, reference.coords);
      const auto m = LatticeModel::from_coordinate_frame(cf);
      EXPECT_EQ(lattice_determinant(m), lattice_determinant(ref_model));
    }
  }
}

TEST(SixSixteen, Structure) {
  const auto [spec, cf] = frame_6_16();
  const auto g = spec.gram();
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      EXPECT_EQ(i == j ? g(i, j) : BigRational(abs(g(i, j))), i == j ? BigRational(1) : make_rational(1, 3));
    }
  EXPECT_EQ(cf.basis, (std::vector<std::size_t>{0, 1, 2, 3, 4, 8}));
  EXPECT_EQ(cf.coords.cols(), 10u);
  EXPECT_TRUE(all_integer(cf.coords));
  EXPECT_EQ(bareiss_determinant(cf.basis_gram()), make_rational(64, 729));
  EXPECT_TRUE(validate_frame(spec).passed());
}

TEST(SixSixteen, FlippedSignFailsTightness) {
  auto spec = frame_6_16().first;
  spec.seidel = spec.seidel.with(0, 1, -spec.seidel(0, 1)).with(1, 0, -spec.seidel(1, 0));
  const auto v = validate_frame(spec);
  EXPECT_TRUE(v.seidel_ok);
  EXPECT_FALSE(v.tight_ok);
}

TEST(SevenTwentyEight, Structure) {
  const auto [spec, cf] = frame_7_28();
  const auto g = spec.gram();
  for (std::size_t i = 0; i < 28; ++i)
    for (std::size_t j = 0; j < 28; ++j)
      if (i != j) {
        EXPECT_EQ(abs(g(i, j)), make_rational(1, 3));
      }
  EXPECT_EQ(spec.gamma, 4);
  EXPECT_TRUE(validate_frame(spec).passed());
  EXPECT_EQ(bareiss_determinant(cf.basis_gram()), make_rational(64, 2187));
  EXPECT_TRUE(cf.gram_consistent());
  EXPECT_EQ(spec.n * 2, spec.k * (spec.k + 1));  // meets the Gerzon bound
}

TEST(Validation, RejectsBadSeidelMatrices) {
  auto spec = simplex_frame(3).first;
  spec.seidel = spec.seidel.with(0, 0, 1);
  EXPECT_FALSE(validate_frame(spec).seidel_ok);
  spec = simplex_frame(3).first;
  spec.seidel = spec.seidel.with(0, 1, 1);  // no longer symmetric
  EXPECT_FALSE(is_seidel(spec.seidel));
}

TEST(Basis, GreedyAndExplicitChoices) {
  const auto [spec, cf] = frame_7_28();
  EXPECT_EQ(default_basis(spec), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 15}));
  const auto greedy = greedy_basis(spec);
  EXPECT_EQ(greedy.size(), 7u);
  EXPECT_NE(bareiss_determinant(spec.gram().submatrix(greedy, greedy)), 0);
  const auto minus = conference_frame(pairs(13)[4], Variant::Minus).first;
  EXPECT_EQ(default_basis(minus).front(), 13u);
  EXPECT_THROW(coordinates_for_basis(spec, {0, 1}), Error);
}

TEST(CoordinateFrames, PropertiesForEveryConferenceLattice) {
  for (std::size_t k : {5u, 13u}) {
    for (std::size_t i = 0; i < pairs(k).size(); ++i) {
      for (auto v : {Variant::Plus, Variant::Minus}) {
        const auto [spec, cf] = conference_frame(pairs(k)[i], v, i + 1);
        EXPECT_TRUE(cf.gram_consistent());
        const BigRational beta(cf.beta);
        for (const auto& x : cf.coords.entries()) EXPECT_TRUE(is_integer(x * beta));
        EXPECT_NE(bareiss_determinant(cf.basis_gram()), 0);
      }
    }
  }
}
