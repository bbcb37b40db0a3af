#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "etflat/lattice.hpp"

using namespace etflat;

namespace {

const std::vector<ConferencePair>& pairs(std::size_t k) {
  static std::map<std::size_t, std::vector<ConferencePair>> memo;
  auto it = memo.find(k);
  if (it == memo.end()) it = memo.emplace(k, search_conference_pairs(k)).first;
  return it->second;
}

LatticeModel five_ten(std::size_t i, Variant v = Variant::Plus) {
  return LatticeModel::from_coordinate_frame(conference_frame(pairs(5)[i], v, i + 1).second);
}

LatticeModel seven_28() { return LatticeModel::from_coordinate_frame(frame_7_28().second); }

// Plain box search; the radius comes from an eigenvalue-free bound:
// x_i² <= bound·(Q^{-1})_ii.
std::set<IntVector> box_search(const RationalMatrix& q, const BigRational& bound) {
  const auto qi = inverse(q);
  const std::size_t k = q.rows();
  std::vector<long> r(k);
  for (std::size_t i = 0; i < k; ++i) {
    long v = 0;
    while (BigRational((v + 1) * (v + 1)) <= bound * qi(i, i)) ++v;
    r[i] = v;
  }
  std::set<IntVector> out;
  IntVector x(k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      if (std::any_of(x.begin(), x.end(), [](long v) { return v != 0; }) && quadratic_form(q, std::span<const long>(x)) <= bound) {
        auto y = x;
        for (auto& v : y)
          if (v != 0) {
            if (v < 0)
              for (auto& w : y) w = -w;
            break;
          }
        out.insert(y);
      }
      return;
    }
    for (long v = -r[i]; v <= r[i]; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

RationalMatrix random_gram(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<int> entry(-3, 3), den(1, 4);
  while (true) {
    auto b = RationalMatrix::generate(k, k, [&](std::size_t, std::size_t) { return make_rational(entry(rng), den(rng)); });
    if (bareiss_determinant(b) != 0) return b.transpose() * b;
  }
}

RationalMatrix hexagonal() { return RationalMatrix{{2, 1}, {1, 2}}; }

}  // namespace

TEST(AlphaGate, Examples) {
  EXPECT_FALSE(alpha_gate(3, 6).is_lattice);
  EXPECT_EQ(alpha_gate(3, 6).reason, AlphaReason::IrrationalAlpha);
  EXPECT_EQ(alpha_gate(3, 6).alpha.to_string(), "1*sqrt(5)");
  EXPECT_FALSE(alpha_gate(7, 14).is_lattice);
  EXPECT_FALSE(alpha_gate(9, 18).is_lattice);
  for (auto [k, n, a] : std::vector<std::tuple<std::size_t, std::size_t, long>>{
           {5, 10, 3}, {6, 16, 3}, {7, 28, 3}, {13, 26, 5}, {25, 50, 7}, {4, 5, 4}}) {
    const auto v = alpha_gate(k, n);
    EXPECT_TRUE(v.is_lattice) << k << "," << n;
    EXPECT_EQ(v.reason, AlphaReason::RationalAlpha);
    EXPECT_EQ(v.alpha.coeff(), a);
  }
  EXPECT_EQ(to_string(AlphaReason::IrrationalAlpha), "IrrationalAlpha");
}

TEST(AlphaGate, LatticeTestRefusesIrrationalFrames) {
  const auto spec = conference_frame_spec(pairs(3)[0], {FrameKind::Conference, 3, 1, Variant::Plus});
  try {
    lattice_test(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IrrationalAlpha);
  }
  const auto cf = lattice_test(frame_6_16().first);
  EXPECT_EQ(cf.basis, (std::vector<std::size_t>{0, 1, 2, 3, 4, 8}));
}

TEST(Enumeration, IdentityGivesUnitVectors) {
  const auto m = LatticeModel::from_gram(RationalMatrix::identity(3));
  const auto v = enumerate_short_vectors(m, 1);
  EXPECT_EQ(v, (std::vector<IntVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(enumerate_short_vectors(m, 2).size(), 9u);  // 3 units + 6 of the form e_i ± e_j
  EXPECT_TRUE(enumerate_short_vectors(m, make_rational(1, 2)).empty());
}

TEST(Enumeration, FrameLattices) {
  EXPECT_EQ(enumerate_short_vectors(five_ten(0), 1).size(), 10u);
  EXPECT_EQ(enumerate_short_vectors(seven_28(), 1).size(), 28u);
}

TEST(Enumeration, CanonicalSign) {
  EXPECT_EQ(canonical_sign({0, -1, 2}), (IntVector{0, 1, -2}));
  EXPECT_EQ(canonical_sign({0, 1, -2}), (IntVector{0, 1, -2}));
  EXPECT_EQ(canonical_sign({0, 0}), (IntVector{0, 0}));
}

TEST(Enumeration, AgreesWithBoxSearchOnRandomForms) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 60; ++t) {
    const std::size_t k = 2 + t % 3;
    const auto q = random_gram(rng, k);
    BigRational bound = q(0, 0);
    for (std::size_t i = 1; i < k; ++i) bound = std::max(bound, q(i, i));
    // Skip badly skewed forms whose box is too large to scan.
    const auto qi = inverse(q);
    double cells = 1;
    for (std::size_t i = 0; i < k; ++i) cells *= 2 * std::sqrt(BigRational(bound * qi(i, i)).get_d()) + 1;
    if (cells > 2e5) continue;
    const auto m = LatticeModel::from_gram(q);
    const auto fp = enumerate_short_vectors(m, bound);
    ASSERT_EQ(std::set<IntVector>(fp.begin(), fp.end()), box_search(q, bound)) << "trial " << t;
    ASSERT_TRUE(std::is_sorted(fp.begin(), fp.end()));
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

TEST(Enumeration, AgreesWithBoxSearchOnFrameLattices) {
  std::vector<LatticeModel> ms;
  for (std::size_t k = 2; k <= 6; ++k) ms.push_back(LatticeModel::from_coordinate_frame(simplex_frame(k).second));
  for (std::size_t i = 0; i < 4; ++i) ms.push_back(five_ten(i, i % 2 ? Variant::Minus : Variant::Plus));
  ms.push_back(LatticeModel::from_coordinate_frame(frame_6_16().second));
  for (const auto& m : ms) {
    const auto fp = enumerate_short_vectors(m, make_rational(3, 2));
    EXPECT_EQ(std::set<IntVector>(fp.begin(), fp.end()), box_search(m.gram, make_rational(3, 2)));
  }
}

TEST(Enumeration, NodeBudget) {
  const auto m = seven_28();
  try {
    enumerate_short_vectors(m, 3, {10});
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Enumeration, RejectsIndefiniteForms) {
  const auto m = LatticeModel::from_gram(RationalMatrix{{1, 2}, {2, 1}});
  EXPECT_THROW(enumerate_short_vectors(m, 1), Error);
  EXPECT_THROW(lattice_determinant(m), Error);
}

TEST(MinimalVectors, Examples) {
  const auto z2 = minimal_vectors(LatticeModel::from_gram(RationalMatrix::identity(2)));
  EXPECT_EQ(z2.min_norm_sq, 1);
  EXPECT_EQ(z2.count_with_signs(), 4u);
  const auto hex = minimal_vectors(LatticeModel::from_gram(hexagonal()));
  EXPECT_EQ(hex.min_norm_sq, 2);
  EXPECT_EQ(hex.count_with_signs(), 6u);
  // Minimum below every diagonal entry.
  const auto skew = minimal_vectors(LatticeModel::from_gram(RationalMatrix{{4, 3}, {3, 4}}));
  EXPECT_EQ(skew.min_norm_sq, 2);
  EXPECT_EQ(skew.vectors, (std::vector<IntVector>{{1, -1}}));
  const auto m = five_ten(0);
  const auto r = minimal_vectors(m);
  EXPECT_EQ(r.count_with_signs(), 20u);
  for (const auto& x : r.vectors) EXPECT_EQ(norm_sq(m, x), 1);
}

TEST(MinimalVectors, FrameVectorsAreMinimal) {
  const auto i2 = LatticeModel::from_gram(RationalMatrix::identity(2));
  EXPECT_TRUE(frame_vectors_are_minimal(i2, minimal_vectors(i2)));
  const auto hex = LatticeModel::from_gram(hexagonal());
  EXPECT_FALSE(frame_vectors_are_minimal(hex, minimal_vectors(hex)));
  for (std::size_t i = 0; i < 4; ++i) {
    const auto m = five_ten(i);
    EXPECT_TRUE(frame_vectors_are_minimal(m, minimal_vectors(m)));
  }
  const auto m = seven_28();
  const auto r = minimal_vectors(m);
  EXPECT_EQ(r.count_with_signs(), 56u);
  EXPECT_TRUE(frame_vectors_are_minimal(m, r));
}

TEST(MinimalVectors, SimplexInequalityOnTheBox) {
  // Q = (1+1/k)I - J/k: x'Qx >= 1 on nonzero integer x, with equality exactly
  // on the frame vectors.
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto m = LatticeModel::from_coordinate_frame(simplex_frame(k).second);
    const auto frame = frame_representatives(m);
    const auto all = box_search(m.gram, 3);
    for (const auto& x : all) {
      const auto v = norm_sq(m, x);
      ASSERT_GE(v, 1);
      EXPECT_EQ(v == 1, frame.count(x) > 0);
    }
    EXPECT_EQ(frame.size(), k + 1);
  }
}

TEST(Basis, MinimalVectorBases) {
  const auto i3 = LatticeModel::from_gram(RationalMatrix::identity(3));
  EXPECT_EQ(has_basis_of_minimal_vectors(i3, minimal_vectors(i3)), BasisStatus::Yes);
  const auto m616 = LatticeModel::from_coordinate_frame(frame_6_16().second);
  EXPECT_EQ(has_basis_of_minimal_vectors(m616, minimal_vectors(m616)), BasisStatus::Yes);
  // Only ±e1 is minimal.
  const auto thin = LatticeModel::from_gram(RationalMatrix{{1, 0}, {0, 4}});
  EXPECT_EQ(has_basis_of_minimal_vectors(thin, minimal_vectors(thin)), BasisStatus::No);
  // Z^5 with the glue vector (1/2)^5 of norm 5/4: the ten unit vectors span
  // only an index-2 sublattice.
  RationalMatrix glued = RationalMatrix::generate(5, 5, [](std::size_t i, std::size_t j) {
    if (i == 4 && j == 4) return make_rational(5, 4);
    if (i == 4 || j == 4) return make_rational(1, 2);
    return BigRational(i == j ? 1 : 0);
  });
  const auto g = LatticeModel::from_gram(glued);
  const auto r = minimal_vectors(g);
  EXPECT_EQ(r.count_with_signs(), 10u);
  EXPECT_EQ(has_basis_of_minimal_vectors(g, r), BasisStatus::No);
  EXPECT_EQ(to_string(BasisStatus::Indeterminate), "indeterminate");
}

TEST(Basis, SearchCapGivesIndeterminate) {
  // Hexagonal basis rotated so the identity shortcut does not apply.
  const RationalMatrix u{{1, 1}, {0, 1}};
  const auto q = u.transpose() * hexagonal() * u;
  const auto m = LatticeModel::from_gram(q);
  const auto r = minimal_vectors(m);
  EXPECT_EQ(has_basis_of_minimal_vectors(m, r), BasisStatus::Yes);
  EXPECT_EQ(has_basis_of_minimal_vectors(m, r, 0), BasisStatus::Indeterminate);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(lattice_determinant(five_ten(0)), SurdValue(make_rational(4, 9)));
  const auto d728 = lattice_determinant(seven_28());
  EXPECT_EQ(d728.coeff(), make_rational(8, 81));
  EXPECT_EQ(d728.radicand(), 3);
  EXPECT_EQ(lattice_determinant(LatticeModel::from_gram(hexagonal())).radicand(), 3);
}

TEST(Determinant, UnimodularInvariance) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> m(-2, 2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 2 + t % 4;
    const auto q = random_gram(rng, k);
    // Upper unitriangular times a permutation-free lower unitriangular.
    auto up = RationalMatrix::generate(k, k, [&](std::size_t i, std::size_t j) { return BigRational(i == j ? 1 : (i < j ? m(rng) : 0)); });
    auto lo = RationalMatrix::generate(k, k, [&](std::size_t i, std::size_t j) { return BigRational(i == j ? 1 : (i > j ? m(rng) : 0)); });
    const auto u = up * lo;
    ASSERT_EQ(abs(bareiss_determinant(u)), 1);
    EXPECT_EQ(lattice_determinant(LatticeModel::from_gram(u.transpose() * q * u)), lattice_determinant(LatticeModel::from_gram(q)));
  }
}

TEST(Density, Examples) {
  const auto one = LatticeModel::from_gram(RationalMatrix{{1}});
  EXPECT_NEAR(packing_density(one, minimal_vectors(one)), 1.0, 1e-15);
  const auto hex = LatticeModel::from_gram(hexagonal());
  EXPECT_NEAR(packing_density(hex, minimal_vectors(hex)), std::numbers::pi / std::sqrt(12.0), 1e-12);
  const auto m = seven_28();
  EXPECT_NEAR(packing_density(m, minimal_vectors(m)), 0.2157, 1e-4);
  EXPECT_NEAR(static_cast<double>(unit_ball_volume(3)), 4 * std::numbers::pi / 3, 1e-12);
}

TEST(Density, ScaleInvariance) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> s(1, 30);
  for (int t = 0; t < 30; ++t) {
    const auto q = random_gram(rng, 2 + t % 3);
    const auto c = make_rational(s(rng), s(rng));
    const auto a = LatticeModel::from_gram(q), b = LatticeModel::from_gram(c * c * q);
    EXPECT_NEAR(packing_density(a, minimal_vectors(a)), packing_density(b, minimal_vectors(b)), 1e-12);
  }
}

TEST(Equivalence, ScalarMultiples) {
  const auto q = hexagonal();
  EXPECT_EQ(scalar_orthogonal_equivalence(q, q), BigRational(1));
  EXPECT_EQ(scalar_orthogonal_equivalence(make_rational(9, 4) * q, q), make_rational(9, 4));
  EXPECT_FALSE(scalar_orthogonal_equivalence(-q, q).has_value());
  EXPECT_FALSE(scalar_orthogonal_equivalence(RationalMatrix::identity(2), q).has_value());
  EXPECT_THROW(scalar_orthogonal_equivalence(q, RationalMatrix::identity(3)), Error);
}

TEST(Equivalence, FiveTenLattices) {
  EXPECT_FALSE(scalar_orthogonal_equivalence(five_ten(0).gram, five_ten(2).gram).has_value());
  std::vector<RationalMatrix> grams;
  for (std::size_t i = 0; i < 4; ++i) grams.push_back(five_ten(i).gram);
  const auto classes = equivalence_classes(grams);
  std::size_t members = 0;
  for (const auto& c : classes) {
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    members += c.size();
  }
  EXPECT_EQ(members, 4u);
  EXPECT_EQ(classes.front().front(), 0u);
}

TEST(HnfPath, BetaAboveOne) {
  // Plus coordinates for a (13,26) pair whose N is not integral.
  std::size_t seen = 0;
  for (std::size_t i = 0; i < pairs(13).size(); ++i) {
    const auto cf = conference_frame(pairs(13)[i], Variant::Plus, i + 1).second;
    if (cf.beta == 1) continue;
    ++seen;
    const auto m = LatticeModel::from_coordinate_frame(cf);
    EXPECT_EQ(m.frame_size(), 26u);
    for (std::size_t j = 0; j < 26; ++j) {
      IntVector x(13);
      for (std::size_t r = 0; r < 13; ++r) x[r] = to_long(m.frame_coords(r, j));
      EXPECT_EQ(norm_sq(m, x), 1);
    }
    // The frame generates the lattice.
    EXPECT_EQ(abs(bareiss_determinant(integer_column_basis(m.frame_coords))), 1);
    // Same lattice as the minus description up to an orthogonal map.
    const auto minus = LatticeModel::from_coordinate_frame(conference_frame(pairs(13)[i], Variant::Minus, i + 1).second);
    EXPECT_EQ(lattice_determinant(m), lattice_determinant(minus));
  }
  EXPECT_EQ(seen, 6u);
}

TEST(HnfPath, SyntheticHalfIntegralFrame) {
  // Basis e1, e2 of Z² with a third vector (1/2, 1/2): lattice index 2 over Z².
  FrameSpec f;
  f.k = 2;
  f.n = 3;
  f.gamma = make_rational(3, 2);
  f.alpha = SurdValue(BigRational(2));
  f.seidel = SignMatrix::generate(3, 3, [](std::size_t i, std::size_t j) { return i == j ? 0 : -1; });
  CoordinateFrame cf;
  cf.frame = f;
  cf.basis = {0, 1};
  cf.nonbasis = {2};
  cf.coords = RationalMatrix{{make_rational(1, 2)}, {make_rational(1, 2)}};
  cf.beta = 2;
  const auto m = LatticeModel::from_coordinate_frame(cf);
  // det of the generated lattice is half that of the basis lattice.
  const auto d0 = lattice_determinant(LatticeModel::from_gram(cf.basis_gram()));
  EXPECT_EQ(lattice_determinant(m).square() * 4, d0.square());
}

TEST(Witness, ThreeSixFrameIsNotDiscrete) {
  const auto w = non_lattice_witness_3_6(20);
  ASSERT_EQ(w.size(), 20u);
  EXPECT_EQ(w[0].x, -1);
  EXPECT_EQ(w[0].y, 1);
  EXPECT_EQ(w[1].x, -2);
  EXPECT_EQ(w[1].y, 1);
  EXPECT_EQ(w[4].x, -8);
  EXPECT_EQ(w[4].y, 5);
  for (std::size_t i = 0; i < w.size(); ++i) {
    EXPECT_GT(w[i].norm_sq, 0);
    if (i > 0) {
      EXPECT_LT(w[i].norm_sq, w[i - 1].norm_sq);
    }
    const auto& c = w[i].coefficients;
    EXPECT_EQ(c[0], w[i].x + w[i].y);
    EXPECT_EQ(c[5], -w[i].x);
  }
  // The explicit combination agrees with the closed form while cancellation is mild.
  for (std::size_t i = 0; i < 12; ++i) {
    const auto& v = w[i].combination;
    const double direct = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    EXPECT_NEAR(direct, w[i].norm_sq, 1e-9 * std::max(1.0, w[i].norm_sq) + 1e-12);
  }
  EXPECT_LT(w[14].norm_sq, 1e-5);
  EXPECT_THROW(non_lattice_witness_3_6(0), Error);
  EXPECT_THROW(non_lattice_witness_3_6(kMaxWitnessSteps + 1), Error);
  EXPECT_EQ(non_lattice_witness_3_6(kMaxWitnessSteps).size(), kMaxWitnessSteps);
}
