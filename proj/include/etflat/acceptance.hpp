#pragma once

// The acceptance suite: ten numbered criteria, each a list of exact checks.
// Shared by the `verify-all` command and the acceptance test binary.

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "etflat/analysis.hpp"
#include "etflat/cache.hpp"
#include "etflat/circulant.hpp"
#include "etflat/frames.hpp"
#include "etflat/geometry.hpp"
#include "etflat/lattice.hpp"
#include "etflat/reference_data.hpp"

namespace etflat {

// ---------------------------------------------------------------------------
// Oracles and random instances
// ---------------------------------------------------------------------------

namespace oracle {

/// Exact per-coordinate radius: x'Qx <= b forces x_i² <= b·(Q^{-1})_ii.
inline std::vector<long> certified_box(const RationalMatrix& q, const BigRational& bound) {
  const auto qi = inverse(q);
  std::vector<long> r;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    const BigRational lim = bound * qi(i, i);
    long v = static_cast<long>(std::floor(std::sqrt(lim.get_d()))) + 1;
    while (v > 0 && BigRational(v * v) > lim) --v;
    r.push_back(v);
  }
  return r;
}

/// Every canonical nonzero x in the certified box with x'Qx <= bound.
inline std::set<IntVector> brute_force_short_vectors(const RationalMatrix& q, const BigRational& bound) {
  const auto box = certified_box(q, bound);
  const std::size_t k = q.rows();
  std::set<IntVector> out;
  IntVector x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = -box[i];
  while (true) {
    if (std::any_of(x.begin(), x.end(), [](long v) { return v != 0; }) &&
        quadratic_form(q, std::span<const long>(x)) <= bound)
      out.insert(canonical_sign(x));
    std::size_t i = 0;
    while (i < k && x[i] == box[i]) x[i] = -box[i], ++i;
    if (i == k) break;
    ++x[i];
  }
  return out;
}

inline RationalMatrix random_pd_gram(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<int> entry(-3, 3), den(1, 6);
  while (true) {
    auto b = RationalMatrix::generate(k, k, [&](std::size_t, std::size_t) { return make_rational(entry(rng), den(rng)); });
    if (bareiss_determinant(b) != 0) return b.transpose() * b;
  }
}

/// Product of random elementary integer column operations.
inline IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t k, int steps = 12) {
  std::vector<std::vector<BigInt>> u(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, k - 1);
  std::uniform_int_distribution<int> mult(-2, 2), kind(0, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng), b = idx(rng);
    const int op = kind(rng);
    if (op == 0 && a != b) {
      const int m = mult(rng);
      for (std::size_t r = 0; r < k; ++r) u[r][a] += m * u[r][b];
    } else if (op == 1) {
      for (std::size_t r = 0; r < k; ++r) std::swap(u[r][a], u[r][b]);
    } else {
      for (std::size_t r = 0; r < k; ++r) u[r][a] = -u[r][a];
    }
  }
  return IntegerMatrix::generate(k, k, [&](std::size_t i, std::size_t j) { return u[i][j]; });
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

enum class CriterionStatus { Pass, Fail, Skip };

struct CriterionResult {
  int id = 0;
  std::string title;
  CriterionStatus status = CriterionStatus::Pass;
  std::vector<std::string> failures;
  std::size_t checks = 0;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::set<std::string> skip;  // criterion numbers ("6") or tags ("25x50")
  unsigned threads = 1;
  std::size_t property_instances = 100;
  std::uint64_t seed = 20240611;
};

namespace detail {

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}
  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) r_.failures.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    ++r_.checks;
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", expected " << want;
      r_.failures.push_back(s.str());
    }
  }
  void expect_near(double got, double want, double tol, const std::string& what) {
    ++r_.checks;
    if (!(std::abs(got - want) <= tol)) {
      std::ostringstream s;
      s.precision(10);
      s << what << ": got " << got << ", expected " << want << " ± " << tol;
      r_.failures.push_back(s.str());
    }
  }
  void within(double seconds, double budget) {
    expect(seconds <= budget, "runtime " + format_decimal(seconds, 3) + " s exceeds " + format_decimal(budget, 3) + " s");
  }

 private:
  CriterionResult& r_;
};

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

struct LatticeCase {
  std::string name;
  CoordinateFrame frame;
};

inline std::vector<LatticeCase> small_lattices(PairProvider& provider) {
  std::vector<LatticeCase> out;
  for (std::size_t k = 2; k <= 7; ++k) out.push_back({"simplex:" + std::to_string(k), simplex_frame(k).second});
  const auto& p5 = provider.pairs(5);
  for (std::size_t i = 0; i < p5.size(); ++i)
    for (auto v : {Variant::Plus, Variant::Minus})
      out.push_back({"conference:5:" + std::to_string(i + 1) + (v == Variant::Plus ? ":plus" : ":minus"),
                     conference_frame(p5[i], v, i + 1).second});
  out.push_back({"explicit:6x16", frame_6_16().second});
  out.push_back({"explicit:7x28", frame_7_28().second});
  return out;
}

// 1. Rationality gate
inline void criterion_alpha_gate(Checker& c, PairProvider&, const AcceptanceOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 6}, {7, 14}, {9, 18}})
    c.expect(!alpha_gate(k, n).is_lattice, "(" + std::to_string(k) + "," + std::to_string(n) + ") should be irrational");
  for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 10}, {6, 16}, {7, 28}, {13, 26}, {25, 50}})
    c.expect(alpha_gate(k, n).is_lattice, "(" + std::to_string(k) + "," + std::to_string(n) + ") should be rational");
  c.expect_eq(alpha_gate(3, 6).alpha.to_string(), std::string("1*sqrt(5)"), "alpha(3,6)");
  c.expect_eq(alpha_gate(9, 18).alpha.to_string(), std::string("1*sqrt(17)"), "alpha(9,18)");
  c.expect_eq(alpha_gate(7, 28).alpha.to_string(), std::string("3"), "alpha(7,28)");
  c.within(seconds_since(t0), 0.001);
}

// 2. Simplex family
inline void criterion_simplex(Checker& c, PairProvider&, const AcceptanceOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t k = 2; k <= 12; ++k) {
    const std::string tag = "simplex k=" + std::to_string(k);
    const auto [spec, cf] = simplex_frame(k);
    c.expect(validate_frame(spec).passed(), tag + " tightness");
    const auto m = LatticeModel::from_coordinate_frame(cf);
    const BigRational want = make_rational(1, static_cast<long>(k + 1)) * pow(1 + make_rational(1, static_cast<long>(k)), k);
    c.expect_eq(bareiss_determinant(m.gram), want, tag + " det Gram");
    const auto mv = minimal_vectors(m);
    c.expect_eq(mv.min_norm_sq, BigRational(1), tag + " min norm");
    c.expect_eq(mv.count_with_signs(), 2 * (k + 1), tag + " signed minimal vectors");
    c.expect(frame_vectors_are_minimal(m, mv), tag + " S = ±frame");
    c.expect(strong_eutaxy_check(m, mv).is_strongly_eutactic, tag + " strongly eutactic");
    const auto perf = perfection_rank(m, mv);
    c.expect_eq(perf.rank, k + 1, tag + " perfection rank");
    // k = 2 is the hexagonal lattice: rank 3 = k(k+1)/2, perfect (edge case).
    c.expect_eq(perf.is_perfect, k == 2, tag + " perfect flag");
  }
  c.within(seconds_since(t0), 1.0);
}

// 3. Search counts
inline void criterion_search(Checker& c, PairProvider& provider, const AcceptanceOptions& opts) {
  c.expect_eq(std::uint64_t{1} << (a_free_signs(5) + d_free_signs(5)), std::uint64_t{32}, "k=5 tuples");
  c.expect_eq(std::uint64_t{1} << (a_free_signs(13) + d_free_signs(13)), std::uint64_t{8192}, "k=13 tuples");
  c.expect_eq(std::uint64_t{1} << (a_free_signs(25) + d_free_signs(25)), std::uint64_t{1} << 25, "k=25 tuples");
  for (auto [k, want] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 4}, {13, 12}}) {
    const auto mitm = search_conference_pairs(k, {opts.threads, false});
    const auto brute = search_conference_pairs(k, {1, true});
    c.expect_eq(mitm.size(), want, "k=" + std::to_string(k) + " pair count");
    c.expect(mitm == brute, "k=" + std::to_string(k) + " meet-in-the-middle == brute force");
    c.expect(provider.pairs(k) == mitm, "k=" + std::to_string(k) + " cached pairs == fresh search");
  }
  if (!opts.skip.count("25x50")) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto p25 = search_conference_pairs(25, {opts.threads, false});
    c.within(seconds_since(t0), 60.0);
    c.expect_eq(p25.size(), std::size_t{20}, "k=25 pair count");
    c.expect(provider.pairs(25) == p25, "k=25 cached pairs == fresh search");
  }
}

// 4. (5,10)
inline void criterion_5_10(Checker& c, PairProvider& provider, const AcceptanceOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& pairs = provider.pairs(5);
  c.expect_eq(pairs.size(), std::size_t{4}, "pair count");
  if (pairs.size() != 4) return;
  const std::vector<std::string> n_rows = {"+, 0, -, -, 0", "-, 0, +, +, 0", "+, -, 0, 0, -", "-, +, 0, 0, +"};
  std::vector<RationalMatrix> grams;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string tag = "(t" + std::to_string(i + 1) + ")";
    const auto n_row = compute_N(pairs[i], 3, 0, 3);
    c.expect_eq(format_signs(n_row), n_rows[i], tag + " N row");
    c.expect_eq(abs(circulant_det(pairs[i].d)), BigInt(48), tag + " |det D|");
    c.expect_eq(circulant_det(pairs[i].a, 3), BigInt(48), tag + " det(3I+A)");
    const auto [spec, cf] = conference_frame(pairs[i], Variant::Plus, i + 1);
    c.expect(validate_frame(spec).passed(), tag + " tightness");
    c.expect_eq(cf.beta, BigInt(1), tag + " beta");
    const auto m = LatticeModel::from_coordinate_frame(cf);
    c.expect(lattice_determinant(m) == make_rational(4, 9), tag + " lattice determinant 4/9");
    const auto mv = minimal_vectors(m);
    c.expect_eq(mv.count_with_signs(), std::size_t{20}, tag + " signed minimal vectors");
    c.expect(frame_vectors_are_minimal(m, mv), tag + " S = ±frame");
    grams.push_back(m.gram);
  }
  c.expect(!scalar_orthogonal_equivalence(grams[0], grams[2]).has_value(), "B1 !~ B3");
  c.within(seconds_since(t0), 1.0);
}

inline std::vector<int> parse_sign_row(const std::string& s) {
  std::vector<int> out;
  for (char ch : s) {
    if (ch == '+') out.push_back(1);
    else if (ch == '-') out.push_back(-1);
    else if (ch == '0') out.push_back(0);
  }
  return out;
}

// 5. (13,26)
inline void criterion_13_26(Checker& c, PairProvider& provider, const AcceptanceOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& pairs = provider.pairs(13);
  c.expect_eq(pairs.size(), std::size_t{12}, "pair count");
  std::size_t n_int = 0, n_inv_int = 0;
  std::vector<RationalMatrix> grams;
  std::vector<Variant> variants;
  const SurdValue want_det(make_rational(64, 625) * make_rational(1, 5), 5);  // (2^6/5^4)·√(1/5)
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string tag = "pair " + std::to_string(i + 1);
    // 2^12·3·5^4; the reference numeral 768 000 is missing a zero.
    c.expect_eq(abs(circulant_det(pairs[i].d)), BigInt(7680000), tag + " |det D|");
    const auto n_row = compute_N(pairs[i], 5, 0, 5);
    const bool ni = n_row.all_integer(), nii = circulant_inverse(n_row).all_integer();
    n_int += ni;
    n_inv_int += nii;
    c.expect(ni != nii, tag + " exactly one of N, N^{-1} integral");
    const Variant v = ni ? Variant::Plus : Variant::Minus;
    // Only the sign matching the basis Gram is claimed: I + A/5 or I - A/5.
    if (v == Variant::Plus) c.expect_eq(circulant_det(pairs[i].a, 5), BigInt(2560000), tag + " det(5I+A)");
    else c.expect_eq(circulant_det(-pairs[i].a, 5), BigInt(2560000), tag + " det(5I-A)");
    const auto [spec, cf] = conference_frame(pairs[i], v, i + 1);
    c.expect(validate_frame(spec).passed(), tag + " tightness");
    c.expect_eq(cf.beta, BigInt(1), tag + " beta");
    const auto m = LatticeModel::from_coordinate_frame(cf);
    const auto det = lattice_determinant(m);
    c.expect(det == want_det, tag + " lattice determinant (2^6/5^4)√(1/5), got " + det.to_string());
    c.expect_near(det.to_double(), 0.0458, 1e-4, tag + " lattice determinant decimal");
    const auto mv = minimal_vectors(m);
    c.expect_eq(mv.count_with_signs(), std::size_t{52}, tag + " signed minimal vectors");
    c.expect(frame_vectors_are_minimal(m, mv), tag + " S = ±frame");
    grams.push_back(m.gram);
    variants.push_back(v);
  }
  c.expect_eq(n_int, std::size_t{6}, "pairs with N integral");
  c.expect_eq(n_inv_int, std::size_t{6}, "pairs with N^{-1} integral");
  if (pairs.size() != 12) return;

  const auto classes = equivalence_classes(grams);
  c.expect_eq(classes.size(), std::size_t{3}, "equivalence class count");
  for (const auto& cls : classes) {
    c.expect_eq(cls.size(), std::size_t{4}, "class size");
    std::size_t plus = 0;
    for (auto i : cls) plus += variants[i] == Variant::Plus;
    c.expect_eq(plus, std::size_t{2}, "plus lattices per class");
  }
  // The three listed (A, D) rows fall in three different classes.
  const std::vector<std::pair<std::string, std::string>> listed = {
      {"0,-,-,-,+,-,+,+,-,+,-,-,-", "-,-,+,+,+,-,+,+,-,+,+,+,-"},
      {"0,-,+,+,-,-,-,-,-,-,+,+,-", "+,-,-,-,+,-,+,+,-,+,-,-,-"},
      {"0,+,-,-,-,+,-,-,+,-,-,-,+", "+,-,+,+,-,-,-,-,-,-,+,+,-"},
  };
  std::set<std::size_t> hit_classes;
  for (const auto& [a, d] : listed) {
    const SymCirculantRow<int> ar(parse_sign_row(a)), dr(parse_sign_row(d));
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].a == ar && pairs[i].d == dr) at = i;
    c.expect(at.has_value(), "listed pair " + a + " | " + d + " found by the search");
    if (!at) continue;
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
      if (std::find(classes[ci].begin(), classes[ci].end(), *at) != classes[ci].end()) hit_classes.insert(ci);
  }
  c.expect_eq(hit_classes.size(), std::size_t{3}, "listed pairs span the three classes");

  // Gram I + A_1/5 against Gram I - A_11/5 (A_11 = -A_1).
  const auto a1 = to_rational(pairs[0].a.matrix()), a11 = to_rational(pairs[10].a.matrix());
  const auto id = RationalMatrix::identity(13);
  const auto c2 = scalar_orthogonal_equivalence(id + make_rational(1, 5) * a1, id - make_rational(1, 5) * a11);
  c.expect(c2 && *c2 == 1, "I + A1/5 ~ I - A11/5 with c^2 = 1");
  c.within(seconds_since(t0), 10.0);
}

// 6. (25,50)
inline void criterion_25_50(Checker& c, PairProvider& provider, const AcceptanceOptions&) {
  const auto& pairs = provider.pairs(25);
  c.expect_eq(pairs.size(), std::size_t{20}, "pair count");
  // 2^22·3²·5²·7²·11^4
  const BigInt stated = pow(BigInt(2), 22) * 9 * 25 * 49 * pow(BigInt(11), 4);
  std::vector<RationalMatrix> plus_grams;
  std::vector<const ConferencePair*> d_minus, d_plus;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string tag = "pair " + std::to_string(i + 1);
    c.expect_eq(circulant_det(pairs[i].a, 7), stated, tag + " det(7I+A)");
    c.expect_eq(circulant_det(-pairs[i].a, 7), stated, tag + " det(7I-A)");
    const auto n_row = compute_N(pairs[i], 7, 0, 7);
    c.expect(n_row.all_integer() && circulant_inverse(n_row).all_integer(), tag + " N and N^{-1} integral");
    const auto cf = conference_frame(pairs[i], Variant::Plus, i + 1).second;
    c.expect_eq(cf.beta, BigInt(1), tag + " beta");
    const auto m = LatticeModel::from_coordinate_frame(cf);
    c.expect_near(lattice_determinant(m).to_double(), 0.00071052, 1e-8, tag + " lattice determinant decimal");
    (pairs[i].d[0] < 0 ? d_minus : d_plus).push_back(&pairs[i]);
    plus_grams.push_back(m.gram);
  }
  if (pairs.size() != 20) return;
  // B_j = B_{j+10}: the d0 = -1 half and the d0 = +1 half share A rows in order.
  c.expect(d_minus.size() == 10 && d_plus.size() == 10, "halves by d0 sign have 10 pairs each");
  for (std::size_t j = 0; j < std::min(d_minus.size(), d_plus.size()); ++j)
    c.expect(d_minus[j]->a == d_plus[j]->a, "B_" + std::to_string(j + 1) + " = B_" + std::to_string(j + 11));
  std::vector<RationalMatrix> distinct;
  for (const auto& g : plus_grams)
    if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) distinct.push_back(g);
  c.expect_eq(distinct.size(), std::size_t{10}, "distinct Grams");
  c.expect_eq(equivalence_classes(distinct).size(), std::size_t{10}, "singleton classes among the distinct Grams");
}

// 7. (6,16)
inline void criterion_6_16(Checker& c, PairProvider&, const AcceptanceOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [spec, cf] = frame_6_16();
  c.expect(validate_frame(spec).passed(), "tightness");
  c.expect(cf.basis == std::vector<std::size_t>{0, 1, 2, 3, 4, 8}, "basis {1,2,3,4,5,9}");
  c.expect_eq(cf.beta, BigInt(1), "beta");
  c.expect(cf.gram_consistent(), "F'QF reproduces the Gram");
  const auto m = LatticeModel::from_coordinate_frame(cf);
  c.expect_eq(bareiss_determinant(m.gram), make_rational(64, 729), "det(B'B)");
  const auto mv = minimal_vectors(m);
  c.expect_eq(mv.count_with_signs(), std::size_t{32}, "signed minimal vectors");
  c.expect(frame_vectors_are_minimal(m, mv), "S = ±frame");
  c.expect(has_basis_of_minimal_vectors(m, mv) == BasisStatus::Yes, "basis of minimal vectors");
  c.within(seconds_since(t0), 1.0);
}

// 8. (7,28)
inline void criterion_7_28(Checker& c, PairProvider&, const AcceptanceOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [spec, cf] = frame_7_28();
  c.expect(validate_frame(spec).passed(), "tightness");
  const auto m = LatticeModel::from_coordinate_frame(cf);
  c.expect_eq(bareiss_determinant(m.gram), make_rational(64, 2187), "det(B'B)");
  const auto mv = minimal_vectors(m);
  c.expect_eq(mv.count_with_signs(), std::size_t{56}, "signed minimal vectors");
  c.expect(frame_vectors_are_minimal(m, mv), "S = ±frame");
  c.expect(strong_eutaxy_check(m, mv).is_strongly_eutactic, "strongly eutactic");
  c.expect_eq(perfection_rank(m, mv).rank, std::size_t{28}, "perfection rank");
  const auto d = bacher_matrix_728();
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < 28; ++i)
    for (std::size_t j = 0; j < 28; ++j) mismatches += d(i, j) != kBacherTable728[i][j];
  c.expect_eq(mismatches, std::size_t{0}, "entries differing from the reference matrix");
  c.expect_eq(bareiss_determinant(d), BigInt(3) * pow(BigInt(2), 159), "det D");
  c.expect_near(packing_density(m, mv), 0.2157, 1e-4, "packing density");
  c.within(seconds_since(t0), 5.0);
}

// 9. Fincke–Pohst against the certified box
inline void criterion_oracle(Checker& c, PairProvider& provider, const AcceptanceOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& lc : small_lattices(provider)) {
    const auto m = LatticeModel::from_coordinate_frame(lc.frame);
    const auto fp = as_set(enumerate_short_vectors(m, 1));
    c.expect(fp == oracle::brute_force_short_vectors(m.gram, 1), lc.name + " enumeration == brute force");
  }
  c.within(seconds_since(t0), 5.0);
}

// 10. Randomized properties
inline void criterion_properties(Checker& c, PairProvider&, const AcceptanceOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> dim(2, 5);
  std::uniform_int_distribution<long> small(1, 40);
  std::size_t ldl_fail = 0, surd_fail = 0, det_fail = 0, equiv_fail = 0, density_fail = 0;
  for (std::size_t t = 0; t < opts.property_instances; ++t) {
    const std::size_t k = dim(rng);
    const auto q = oracle::random_pd_gram(rng, k);

    const auto ldl = ldl_decompose(q);
    ldl_fail += !(ldl.reconstruct() == q && ldl.positive_definite());

    const auto r = make_rational(small(rng) * small(rng), small(rng));
    const auto s = sqrt_rational(r);
    const SurdValue again(s.coeff(), s.radicand());
    surd_fail += !(again == s && s.square() == r && sqrt_rational(s.square()) == s);

    const auto u = to_rational(oracle::random_unimodular(rng, k));
    const auto qu = u.transpose() * q * u;
    det_fail += !(lattice_determinant(LatticeModel::from_gram(qu)) == lattice_determinant(LatticeModel::from_gram(q)));

    const auto c1 = make_rational(small(rng), small(rng)), c2 = make_rational(small(rng), small(rng));
    const auto q2 = c1 * qu, q3 = c2 * q2;
    const auto e12 = scalar_orthogonal_equivalence(q2, qu), e21 = scalar_orthogonal_equivalence(qu, q2);
    const auto e23 = scalar_orthogonal_equivalence(q3, q2), e13 = scalar_orthogonal_equivalence(q3, qu);
    const auto refl = scalar_orthogonal_equivalence(q, q);
    const bool equiv_ok = refl && *refl == 1 && e12 && e21 && *e12 * *e21 == 1 && e23 && e13 && *e13 == *e12 * *e23;
    equiv_fail += !equiv_ok;

    const auto tq = make_rational(small(rng), small(rng));
    const auto m1 = LatticeModel::from_gram(q), m2 = LatticeModel::from_gram(tq * tq * q);
    const double d1 = packing_density(m1, minimal_vectors(m1)), d2 = packing_density(m2, minimal_vectors(m2));
    density_fail += !(std::abs(d1 - d2) <= 1e-12 * std::max(1.0, d1));
  }
  const std::string n = std::to_string(opts.property_instances);
  c.expect(opts.property_instances >= 100, "at least 100 instances per property");
  c.expect_eq(ldl_fail, std::size_t{0}, "LDL reconstruction failures of " + n);
  c.expect_eq(surd_fail, std::size_t{0}, "surd normalization failures of " + n);
  c.expect_eq(det_fail, std::size_t{0}, "unimodular determinant invariance failures of " + n);
  c.expect_eq(equiv_fail, std::size_t{0}, "equivalence relation failures of " + n);
  c.expect_eq(density_fail, std::size_t{0}, "density scale invariance failures of " + n);
}

}  // namespace detail

struct CriterionDef {
  int id;
  std::string title;
  std::vector<std::string> tags;
  std::function<void(detail::Checker&, PairProvider&, const AcceptanceOptions&)> run;
};

inline std::vector<CriterionDef> acceptance_criteria() {
  return {
      {1, "rationality gate", {}, detail::criterion_alpha_gate},
      {2, "simplex family k = 2..12", {"simplex"}, detail::criterion_simplex},
      {3, "conference search counts", {"search"}, detail::criterion_search},
      {4, "(5,10) lattices", {"5x10"}, detail::criterion_5_10},
      {5, "(13,26) lattices", {"13x26"}, detail::criterion_13_26},
      {6, "(25,50) lattices", {"25x50"}, detail::criterion_25_50},
      {7, "(6,16) lattice", {"6x16"}, detail::criterion_6_16},
      {8, "(7,28) lattice", {"7x28"}, detail::criterion_7_28},
      {9, "enumeration vs brute force", {"oracle"}, detail::criterion_oracle},
      {10, "randomized properties", {"properties"}, detail::criterion_properties},
  };
}

/// Runs every criterion not skipped. CacheCorrupt is not caught here.
inline std::vector<CriterionResult> run_acceptance(PairProvider& provider, const AcceptanceOptions& opts = {}) {
  std::vector<CriterionResult> out;
  for (const auto& def : acceptance_criteria()) {
    CriterionResult r;
    r.id = def.id;
    r.title = def.title;
    bool skipped = opts.skip.count(std::to_string(def.id)) > 0;
    for (const auto& t : def.tags) skipped = skipped || opts.skip.count(t) > 0;
    if (skipped) {
      r.status = CriterionStatus::Skip;
      out.push_back(std::move(r));
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    detail::Checker checker(r);
    try {
      def.run(checker, provider, opts);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CacheCorrupt) throw;
      r.failures.push_back(std::string("error: ") + e.what());
    }
    r.seconds = detail::seconds_since(t0);
    r.status = r.failures.empty() ? CriterionStatus::Pass : CriterionStatus::Fail;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  const char* tag = r.status == CriterionStatus::Pass ? "PASS" : r.status == CriterionStatus::Fail ? "FAIL" : "SKIP";
  s << "[" << tag << "] " << r.id << ". " << r.title;
  if (r.status != CriterionStatus::Skip) s << " (" << r.checks << " checks, " << format_decimal(r.seconds, 3) << " s)";
  for (const auto& f : r.failures) s << "\n         - " << f;
  return s.str();
}

inline bool all_passed(const std::vector<CriterionResult>& rs) {
  return std::none_of(rs.begin(), rs.end(), [](const CriterionResult& r) { return r.status == CriterionStatus::Fail; });
}

}  // namespace etflat
