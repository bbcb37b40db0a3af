#pragma once

// Lattices generated by frames: the rationality gate, lattice models in an
// integral basis, exact short-vector enumeration and the derived invariants.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "etflat/error.hpp"
#include "etflat/exact.hpp"
#include "etflat/frames.hpp"

namespace etflat {

using IntVector = std::vector<long>;

enum class AlphaReason { RationalAlpha, IrrationalAlpha };

inline std::string to_string(AlphaReason r) {
  return r == AlphaReason::RationalAlpha ? "RationalAlpha" : "IrrationalAlpha";
}

struct LatticeVerdict {
  bool is_lattice = false;
  AlphaReason reason = AlphaReason::IrrationalAlpha;
  SurdValue alpha;
};

/// A frame lattice can only exist when alpha is rational; conversely a
/// rational alpha gives a rational Gram and hence rational coordinates.
inline LatticeVerdict alpha_gate(std::size_t k, std::size_t n) {
  LatticeVerdict v;
  v.alpha = frame_alpha(k, n);
  v.is_lattice = v.alpha.is_rational();
  v.reason = v.is_lattice ? AlphaReason::RationalAlpha : AlphaReason::IrrationalAlpha;
  return v;
}

/// Coordinates of the frame in its default basis. A rational solution X
/// certifies that the frame vectors generate a full-rank lattice.
inline CoordinateFrame lattice_test(const FrameSpec& f) {
  const auto verdict = alpha_gate(f.k, f.n);
  if (!verdict.is_lattice)
    throw Error(ErrorCode::IrrationalAlpha, "alpha = " + verdict.alpha.to_string() + " is irrational");
  return coordinates_for_basis(f, default_basis(f));
}

/// Lattice in a chosen integral basis. When the model comes from a frame,
/// frame_coords holds the integer coordinates of all n frame vectors.
struct LatticeModel {
  std::size_t k = 0;
  RationalMatrix gram;
  IntegerMatrix frame_coords;  // k × n
  std::optional<CoordinateFrame> source;

  /// Bare Gram; the "frame" is taken to be the basis itself.
  static LatticeModel from_gram(RationalMatrix gram) {
    if (!gram.is_symmetric()) throw Error(ErrorCode::InvalidArgument, "Gram must be symmetric");
    LatticeModel m;
    m.k = gram.rows();
    m.frame_coords = IntegerMatrix::identity(m.k);
    m.gram = std::move(gram);
    return m;
  }

  /// With beta = 1 the frame basis is a lattice basis. Otherwise the lattice
  /// basis H/beta comes from the integer column basis of beta·[I | X].
  static LatticeModel from_coordinate_frame(const CoordinateFrame& cf) {
    LatticeModel m;
    m.k = cf.frame.k;
    m.source = cf;
    const auto full = cf.full_coordinates();
    const auto q0 = cf.basis_gram();
    if (cf.beta == 1) {
      m.gram = q0;
      m.frame_coords = full.map<BigInt>([](const BigRational& v) { return v.get_num(); });
      return m;
    }
    const BigRational beta(cf.beta);
    const auto scaled = full.map<BigInt>([&](const BigRational& v) {
      const BigRational s = v * beta;
      return s.get_num();
    });
    const auto h = integer_column_basis(scaled);
    const auto hb = to_rational(h).map<BigRational>([&](const BigRational& v) { return BigRational(v / beta); });
    m.gram = hb.transpose() * q0 * hb;
    const auto coords = solve_linear(to_rational(h), to_rational(scaled));
    m.frame_coords = coords.map<BigInt>([](const BigRational& v) {
      if (v.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "frame vector outside the computed lattice");
      return v.get_num();
    });
    return m;
  }

  std::size_t frame_size() const { return frame_coords.cols(); }
};

/// √det(gram).
inline SurdValue lattice_determinant(const LatticeModel& m) {
  LDLDecomposition ldl;
  try {
    ldl = ldl_decompose(m.gram);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PivotBreakdown) throw Error(ErrorCode::NotPositiveDefinite, "Gram is not positive definite");
    throw;
  }
  if (!ldl.positive_definite()) throw Error(ErrorCode::NotPositiveDefinite, "Gram is not positive definite");
  BigRational det = 1;
  for (const auto& d : ldl.diag) det *= d;
  return sqrt_rational(det);
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct EnumerationOptions {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
};

/// First nonzero entry positive.
inline IntVector canonical_sign(IntVector x) {
  for (long v : x) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& e : x) e = -e;
    break;
  }
  return x;
}

namespace detail {

// Fincke–Pohst on the index-reversed Gram, so that the outermost level is
// the first coordinate and the canonical sign can be imposed while
// descending. All comparisons are exact; doubles only seed the interval.
class ShortVectorEnumerator {
 public:
  ShortVectorEnumerator(const RationalMatrix& gram, BigRational bound, EnumerationOptions opts)
      : k_(gram.rows()), bound_(std::move(bound)), opts_(opts) {
    std::vector<std::size_t> rev(k_);
    for (std::size_t i = 0; i < k_; ++i) rev[i] = k_ - 1 - i;
    LDLDecomposition ldl;
    try {
      ldl = ldl_decompose(gram.submatrix(rev, rev));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PivotBreakdown) throw Error(ErrorCode::NotPositiveDefinite, "Gram is not positive definite");
      throw;
    }
    if (!ldl.positive_definite()) throw Error(ErrorCode::NotPositiveDefinite, "Gram is not positive definite");
    d_ = ldl.diag;
    mu_.assign(k_, std::vector<BigRational>(k_));
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = i + 1; j < k_; ++j) mu_[i][j] = ldl.unit_lower(j, i);
    y_.assign(k_, 0);
  }

  std::vector<IntVector> run() {
    if (k_ == 0 || bound_ <= 0) return {};
    descend(k_ - 1, bound_, true);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // center c_i = -Σ_{j>i} mu[i][j]·y_j
  BigRational center(std::size_t i) const {
    BigRational c = 0;
    for (std::size_t j = i + 1; j < k_; ++j)
      if (y_[j] != 0) c -= mu_[i][j] * y_[j];
    return c;
  }

  static bool fits(long v, const BigRational& c, const BigRational& t) {
    BigRational diff = BigRational(v) - c;
    return diff * diff <= t;
  }

  void descend(std::size_t i, const BigRational& budget, bool higher_zero) {
    if (opts_.max_nodes != 0 && ++nodes_ > opts_.max_nodes)
      throw Error(ErrorCode::BudgetExceeded, "enumeration node budget exceeded");
    const BigRational c = center(i);
    const BigRational t = budget / d_[i];
    const double cd = c.get_d(), r = std::sqrt(std::max(0.0, t.get_d()));
    long lo = static_cast<long>(std::ceil(cd - r)), hi = static_cast<long>(std::floor(cd + r));
    while (fits(lo - 1, c, t)) --lo;
    while (lo <= hi && !fits(lo, c, t)) ++lo;
    while (fits(hi + 1, c, t)) ++hi;
    while (hi >= lo && !fits(hi, c, t)) --hi;
    if (higher_zero) lo = std::max(lo, 0L);
    for (long v = lo; v <= hi; ++v) {
      y_[i] = v;
      BigRational diff = BigRational(v) - c;
      BigRational rest = budget - d_[i] * diff * diff;
      const bool zero_so_far = higher_zero && v == 0;
      if (i == 0) {
        if (!zero_so_far) {
          IntVector x(k_);
          for (std::size_t j = 0; j < k_; ++j) x[j] = y_[k_ - 1 - j];
          out_.push_back(std::move(x));
        }
      } else {
        descend(i - 1, rest, zero_so_far);
      }
    }
    y_[i] = 0;
  }

  std::size_t k_;
  BigRational bound_;
  EnumerationOptions opts_;
  std::vector<BigRational> d_;
  std::vector<std::vector<BigRational>> mu_;
  std::vector<long> y_;
  std::vector<IntVector> out_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// All nonzero x with x'·gram·x <= bound, one per ± pair (first nonzero
/// entry positive), sorted lexicographically.
inline std::vector<IntVector> enumerate_short_vectors(const LatticeModel& m, const BigRational& bound,
                                                      EnumerationOptions opts = {}) {
  return detail::ShortVectorEnumerator(m.gram, bound, opts).run();
}

inline BigRational norm_sq(const LatticeModel& m, const IntVector& x) {
  return quadratic_form(m.gram, std::span<const long>(x));
}

struct MinVecReport {
  BigRational min_norm_sq;
  std::vector<IntVector> vectors;
  std::size_t count_with_signs() const { return 2 * vectors.size(); }
};

/// Minimal vectors, enumerated up to the smallest Gram diagonal entry.
inline MinVecReport minimal_vectors(const LatticeModel& m, EnumerationOptions opts = {}) {
  if (m.k == 0) throw Error(ErrorCode::InvalidArgument, "empty lattice");
  BigRational bound = m.gram(0, 0);
  for (std::size_t i = 1; i < m.k; ++i) bound = std::min(bound, m.gram(i, i));
  auto all = enumerate_short_vectors(m, bound, opts);
  MinVecReport r;
  if (all.empty()) throw Error(ErrorCode::NotPositiveDefinite, "no vector within the diagonal bound");
  std::vector<BigRational> norms;
  norms.reserve(all.size());
  for (const auto& x : all) norms.push_back(norm_sq(m, x));
  r.min_norm_sq = *std::min_element(norms.begin(), norms.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (norms[i] == r.min_norm_sq) r.vectors.push_back(std::move(all[i]));
  return r;
}

/// Canonical ± representatives of the frame vectors in lattice coordinates.
inline std::set<IntVector> frame_representatives(const LatticeModel& m) {
  std::set<IntVector> s;
  for (std::size_t j = 0; j < m.frame_coords.cols(); ++j) {
    IntVector x(m.k);
    for (std::size_t i = 0; i < m.k; ++i) x[i] = to_long(m.frame_coords(i, j));
    s.insert(canonical_sign(std::move(x)));
  }
  return s;
}

/// S(L) = {±f_1, ..., ±f_n} as sets.
inline bool frame_vectors_are_minimal(const LatticeModel& m, const MinVecReport& r) {
  const std::set<IntVector> minimal(r.vectors.begin(), r.vectors.end());
  return minimal == frame_representatives(m);
}

enum class BasisStatus { Yes, No, Indeterminate };

inline std::string to_string(BasisStatus s) {
  switch (s) {
    case BasisStatus::Yes: return "yes";
    case BasisStatus::No: return "no";
    case BasisStatus::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

inline constexpr std::uint64_t kDefaultBasisSearchCap = 1'000'000;

namespace detail {

inline IntegerMatrix vectors_as_columns(const std::vector<IntVector>& vs, std::size_t k) {
  return IntegerMatrix::generate(k, vs.size(), [&](std::size_t i, std::size_t j) { return BigInt(vs[j][i]); });
}

}  // namespace detail

/// Does some set of k minimal vectors have determinant ±1?
inline BasisStatus has_basis_of_minimal_vectors(const LatticeModel& m, const MinVecReport& r,
                                                std::uint64_t cap = kDefaultBasisSearchCap) {
  const std::size_t k = m.k;
  const std::set<IntVector> minimal(r.vectors.begin(), r.vectors.end());
  bool identity = true;
  for (std::size_t i = 0; i < k && identity; ++i) {
    IntVector e(k, 0);
    e[i] = 1;
    identity = minimal.count(e) > 0;
  }
  if (identity) return BasisStatus::Yes;
  if (r.vectors.size() < k) return BasisStatus::No;

  // A basis of minimal vectors exists only if they generate the lattice.
  const auto gens = detail::vectors_as_columns(r.vectors, k);
  if (matrix_rank(to_rational(gens)) < k) return BasisStatus::No;
  if (abs(bareiss_determinant(integer_column_basis(gens))) != 1) return BasisStatus::No;

  std::uint64_t evaluations = 0;
  std::vector<std::size_t> chosen;
  bool found = false, exhausted = false;
  // Depth-first over index-increasing subsets; independence is checked by
  // rank before descending so only full-rank candidates reach the det test.
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (found || exhausted) return;
    if (chosen.size() == k) {
      if (++evaluations > cap) {
        exhausted = true;
        return;
      }
      std::vector<IntVector> pick;
      for (auto idx : chosen) pick.push_back(r.vectors[idx]);
      if (abs(bareiss_determinant(detail::vectors_as_columns(pick, k))) == 1) found = true;
      return;
    }
    for (std::size_t i = start; i + (k - chosen.size()) <= r.vectors.size(); ++i) {
      chosen.push_back(i);
      std::vector<IntVector> pick;
      for (auto idx : chosen) pick.push_back(r.vectors[idx]);
      if (matrix_rank(to_rational(detail::vectors_as_columns(pick, k))) == chosen.size()) self(self, i + 1);
      chosen.pop_back();
      if (found || exhausted) return;
    }
  };
  dfs(dfs, 0);
  if (found) return BasisStatus::Yes;
  return exhausted ? BasisStatus::Indeterminate : BasisStatus::No;
}

/// Volume of the unit ball in R^k.
inline long double unit_ball_volume(std::size_t k) {
  const long double half = static_cast<long double>(k) / 2;
  return std::pow(std::numbers::pi_v<long double>, half) / std::tgamma(half + 1);
}

/// ω_k d^k / (2^k det L), evaluated in floating point from exact inputs.
inline double packing_density(const LatticeModel& m, const MinVecReport& r) {
  const auto det = lattice_determinant(m);
  const std::size_t k = m.k;
  const long double d = std::sqrt(static_cast<long double>(r.min_norm_sq.get_d()));
  const long double det_f = static_cast<long double>(det.coeff().get_d()) * std::sqrt(static_cast<long double>(det.radicand().get_d()));
  const long double v = unit_ball_volume(k) * std::pow(d / 2, static_cast<long double>(k)) / det_f;
  return static_cast<double>(v);
}

/// c² with Q1 = c²·Q2, if it exists.
inline std::optional<BigRational> scalar_orthogonal_equivalence(const RationalMatrix& q1, const RationalMatrix& q2) {
  if (q1.rows() != q2.rows() || q1.cols() != q2.cols()) throw Error(ErrorCode::SizeMismatch, "Gram sizes differ");
  std::optional<BigRational> c2;
  for (std::size_t i = 0; i < q1.rows(); ++i)
    for (std::size_t j = 0; j < q1.cols(); ++j) {
      if (q2(i, j) == 0) {
        if (q1(i, j) != 0) return std::nullopt;
        continue;
      }
      BigRational ratio = q1(i, j) / q2(i, j);
      if (!c2) {
        if (ratio <= 0) return std::nullopt;
        c2 = ratio;
      } else if (*c2 != ratio) {
        return std::nullopt;
      }
    }
  return c2;
}

/// Classes ordered by smallest member; members ascending.
inline std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<RationalMatrix>& grams) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < grams.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes)
      if (scalar_orthogonal_equivalence(grams[i], grams[cls.front()])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

// ---------------------------------------------------------------------------
// The (3,6) icosahedral frame is not discrete
// ---------------------------------------------------------------------------

struct WitnessStep {
  long x = 0;
  long y = 0;
  std::array<long, 6> coefficients{};
  std::array<double, 3> combination{};  // Σ c_j g_j from the icosahedral columns
  double norm_sq = 0;
};

inline constexpr std::size_t kMaxWitnessSteps = 80;

/// x/y runs through -F_{n+1}/F_n, so x + p·y -> 0 for the golden ratio p.
inline std::vector<WitnessStep> non_lattice_witness_3_6(std::size_t steps) {
  if (steps < 1 || steps > kMaxWitnessSteps)
    throw Error(ErrorCode::InvalidArgument, "steps must be in 1.." + std::to_string(kMaxWitnessSteps));
  const long double s5 = std::sqrt(5.0L), p = (1 + s5) / 2, scale = 1 / std::sqrt(1 + p * p);
  const long double g[3][6] = {{0, 0, 1, -1, p, p}, {1, -1, p, p, 0, 0}, {p, p, 0, 0, 1, -1}};
  std::vector<WitnessStep> out;
  long f_prev = 1, f_cur = 1;  // F_n, F_{n+1}
  for (std::size_t n = 1; n <= steps; ++n) {
    WitnessStep w;
    w.x = -f_cur;
    w.y = f_prev;
    w.coefficients = {w.x + w.y, w.y - w.x, w.y, w.y, w.x, -w.x};
    for (std::size_t r = 0; r < 3; ++r) {
      long double acc = 0;
      for (std::size_t c = 0; c < 6; ++c) acc += g[r][c] * static_cast<long double>(w.coefficients[c]);
      w.combination[r] = static_cast<double>(acc * scale);
    }
    // x + p·y = (a + b√5)/2 with a = 2x + y, b = y; use the conjugate to
    // avoid cancellation: a + b√5 = (a² - 5b²)/(a - b√5).
    const BigInt a = BigInt(2) * w.x + w.y, b = w.y;
    const BigInt num = a * a - 5 * b * b;
    const long double t = (num.get_d() / (a.get_d() - b.get_d() * s5)) / 2;
    w.norm_sq = static_cast<double>(4 * t * t * 2 / (1 + p * p));
    out.push_back(w);
    const long next = f_prev + f_cur;
    f_prev = f_cur;
    f_cur = next;
  }
  return out;
}

}  // namespace etflat
