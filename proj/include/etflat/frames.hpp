#pragma once

// Unit tight equiangular frames in Gram-first form: a frame is its Seidel
// sign matrix C together with alpha, and its Gram matrix is I + C/alpha.
// No Cartesian coordinates are ever formed.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "etflat/circulant.hpp"
#include "etflat/error.hpp"
#include "etflat/exact.hpp"

namespace etflat {

enum class FrameKind { Simplex, Conference, GoethalsSeidel, Explicit6x16, Explicit7x28, Custom };
enum class Variant { Plus, Minus };

struct FrameLabel {
  FrameKind kind = FrameKind::Custom;
  std::size_t k = 0;
  std::size_t pair_index = 0;  // 1-based position in the search output
  Variant variant = Variant::Plus;

  std::string str() const {
    switch (kind) {
      case FrameKind::Simplex: return "simplex:" + std::to_string(k);
      case FrameKind::Conference:
        return "conference:" + std::to_string(k) + ":" + std::to_string(pair_index) + ":" +
               (variant == Variant::Plus ? "plus" : "minus");
      case FrameKind::GoethalsSeidel:
        return "conference:" + std::to_string(k) + ":" + std::to_string(pair_index) + ":ab";
      case FrameKind::Explicit6x16: return "explicit:6x16";
      case FrameKind::Explicit7x28: return "explicit:7x28";
      case FrameKind::Custom: return "custom";
    }
    return "custom";
  }

  friend bool operator==(const FrameLabel&, const FrameLabel&) = default;
};

/// alpha = √(k(n-1)/(n-k)).
inline SurdValue frame_alpha(std::size_t k, std::size_t n) {
  if (k < 2 || n <= k) throw Error(ErrorCode::InvalidArgument, "need 2 <= k < n");
  return sqrt_rational(make_rational(static_cast<long>(k * (n - 1)), static_cast<long>(n - k)));
}

struct FrameSpec {
  std::size_t k = 0;
  std::size_t n = 0;
  BigRational gamma;
  SurdValue alpha;
  SignMatrix seidel;
  FrameLabel label;

  static FrameSpec make(std::size_t k, std::size_t n, SignMatrix seidel, FrameLabel label) {
    FrameSpec f;
    f.k = k;
    f.n = n;
    f.gamma = make_rational(static_cast<long>(n), static_cast<long>(k));
    f.alpha = frame_alpha(k, n);
    f.seidel = std::move(seidel);
    f.label = label;
    return f;
  }

  /// I + C/alpha; defined only for rational alpha.
  RationalMatrix gram() const {
    if (!alpha.is_rational())
      throw Error(ErrorCode::IrrationalAlpha, "Gram is irrational (alpha = " + alpha.to_string() + ")");
    const BigRational inv = 1 / alpha.coeff();
    return RationalMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
      return i == j ? BigRational(1) : BigRational(inv * seidel(i, j));
    });
  }
};

/// A frame together with a basis of k frame vectors and the rational
/// coordinates X of the remaining vectors: G1 = G0·X.
struct CoordinateFrame {
  FrameSpec frame;
  std::vector<std::size_t> basis;      // 0-based, ascending
  std::vector<std::size_t> nonbasis;   // 0-based, ascending
  RationalMatrix coords;               // k × (n - k)
  BigInt beta = 1;                     // lcm of the denominators of coords

  RationalMatrix basis_gram() const { return frame.gram().submatrix(basis, basis); }

  /// k×n coordinates of every frame vector in the chosen basis.
  RationalMatrix full_coordinates() const {
    const std::size_t k = frame.k, n = frame.n;
    std::vector<std::size_t> slot(n);
    std::vector<bool> in_basis(n, false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      slot[basis[i]] = i;
      in_basis[basis[i]] = true;
    }
    for (std::size_t i = 0; i < nonbasis.size(); ++i) slot[nonbasis[i]] = i;
    return RationalMatrix::generate(k, n, [&](std::size_t r, std::size_t c) {
      if (in_basis[c]) return BigRational(r == slot[c] ? 1 : 0);
      return coords(r, slot[c]);
    });
  }

  /// F' Q F == I + C/alpha for F = full_coordinates(), Q = basis Gram.
  bool gram_consistent() const {
    const auto f = full_coordinates();
    return f.transpose() * basis_gram() * f == frame.gram();
  }
};

namespace detail {

inline std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& basis) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(basis.begin(), basis.end(), i) == basis.end()) out.push_back(i);
  return out;
}

inline BigInt denominator_lcm(const RationalMatrix& m) {
  BigInt l = 1;
  for (const auto& v : m.entries()) l = lcm(l, v.get_den());
  return l;
}

inline CoordinateFrame make_coordinate_frame(FrameSpec f, std::vector<std::size_t> basis, RationalMatrix coords) {
  CoordinateFrame cf;
  cf.nonbasis = complement(f.n, basis);
  cf.beta = denominator_lcm(coords);
  cf.frame = std::move(f);
  cf.basis = std::move(basis);
  cf.coords = std::move(coords);
  return cf;
}

}  // namespace detail

/// Solves X = (G0'G0)^{-1}(G0'G1) from Gram blocks for the given basis.
inline CoordinateFrame coordinates_for_basis(const FrameSpec& f, std::vector<std::size_t> basis) {
  std::sort(basis.begin(), basis.end());
  if (basis.size() != f.k) throw Error(ErrorCode::SizeMismatch, "basis must have k indices");
  const auto g = f.gram();
  const auto rest = detail::complement(f.n, basis);
  auto x = solve_linear(g.submatrix(basis, basis), g.submatrix(basis, rest));
  return detail::make_coordinate_frame(f, std::move(basis), std::move(x));
}

/// Leftmost frame vectors whose Gram submatrix stays nonsingular.
inline std::vector<std::size_t> greedy_basis(const FrameSpec& f) {
  const auto g = f.gram();
  std::vector<std::size_t> basis;
  for (std::size_t j = 0; j < f.n && basis.size() < f.k; ++j) {
    auto trial = basis;
    trial.push_back(j);
    if (bareiss_determinant(g.submatrix(trial, trial)) != 0) basis = std::move(trial);
  }
  if (basis.size() != f.k) throw Error(ErrorCode::SingularMatrix, "frame vectors do not span R^k");
  return basis;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationReport {
  bool seidel_ok = false;
  bool alpha_ok = false;
  bool tight_ok = false;
  bool gerzon_ok = false;

  bool passed() const { return seidel_ok && alpha_ok && tight_ok && gerzon_ok; }
};

inline bool is_seidel(const SignMatrix& c) {
  if (!c.is_square() || !c.is_symmetric()) return false;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const int v = c(i, j);
      if (i == j ? v != 0 : (v != 1 && v != -1)) return false;
    }
  return true;
}

inline ValidationReport validate_frame(const FrameSpec& f) {
  ValidationReport r;
  r.seidel_ok = f.seidel.rows() == f.n && is_seidel(f.seidel);
  const BigRational alpha_sq = make_rational(static_cast<long>(f.k * (f.n - 1)), static_cast<long>(f.n - f.k));
  r.alpha_ok = f.alpha.coeff() > 0 && f.alpha.square() == alpha_sq &&
               f.gamma == make_rational(static_cast<long>(f.n), static_cast<long>(f.k));
  r.gerzon_ok = f.n <= f.k * (f.k + 1) / 2;
  if (!r.seidel_ok) return r;

  // With s = 1/alpha and M = I + sC:
  //   M² - γM = (1-γ)I + s²C² + (2-γ)·s·C.
  // For rational s this is one rational matrix; for irrational s the
  // rational part and the √m part must vanish separately.
  const auto c = to_rational(f.seidel);
  const auto c2 = c * c;
  const auto id = RationalMatrix::identity(f.n);
  const BigRational s2 = 1 / alpha_sq;
  const auto rational_part = (BigRational(1 - f.gamma) * id) + (s2 * c2);
  const auto linear_part = BigRational(2 - f.gamma) * c;
  if (f.alpha.is_rational()) {
    const BigRational s = 1 / f.alpha.coeff();
    r.tight_ok = rational_part + s * linear_part == RationalMatrix::zero(f.n, f.n);
  } else {
    r.tight_ok = rational_part == RationalMatrix::zero(f.n, f.n) && linear_part == RationalMatrix::zero(f.n, f.n);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// (k, k+1) frame: the k+1 normalized permutations of (-k, 1, ..., 1), all
/// pairwise inner products -1/k. Basis f_1..f_k; f_{k+1} = -(f_1 + ... + f_k).
inline std::pair<FrameSpec, CoordinateFrame> simplex_frame(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "simplex frame needs k >= 2");
  const std::size_t n = k + 1;
  auto seidel = SignMatrix::generate(n, n, [](std::size_t i, std::size_t j) { return i == j ? 0 : -1; });
  auto spec = FrameSpec::make(k, n, std::move(seidel), {FrameKind::Simplex, k});
  std::vector<std::size_t> basis(k);
  std::iota(basis.begin(), basis.end(), 0);
  auto cf = coordinates_for_basis(spec, basis);
  return {spec, cf};
}

inline FrameSpec conference_frame_spec(const ConferencePair& p, FrameLabel label) {
  return FrameSpec::make(p.k, 2 * p.k, p.conference_matrix(), label);
}

/// Integer alpha = √(2k-1) for a conference pair, or IrrationalAlpha.
inline BigInt conference_alpha(const ConferencePair& p) {
  const auto alpha = frame_alpha(p.k, 2 * p.k);
  if (!alpha.is_rational())
    throw Error(ErrorCode::IrrationalAlpha,
                "alpha = " + alpha.to_string() + " for the (" + std::to_string(p.k) + "," +
                    std::to_string(2 * p.k) + ") frame");
  return alpha.coeff().get_num();
}

/// Frame with Seidel matrix [[A, D], [D, -A]] and N = D^{-1}(A - alpha·I).
/// Plus: basis f_1..f_k, X = -N, basis Gram I + A/alpha.
/// Minus: basis f_{k+1}..f_{2k}, X = -N^{-1}, basis Gram I - A/alpha.
inline std::pair<FrameSpec, CoordinateFrame> conference_frame(const ConferencePair& p, Variant variant,
                                                              std::size_t pair_index = 0) {
  p.check_pattern();
  const BigInt alpha = conference_alpha(p);
  if (circulant_det(p.d) == 0) throw Error(ErrorCode::SingularD, "D is singular");
  const auto n_row = compute_N(p, BigRational(alpha), 0, BigRational(alpha));
  auto spec = conference_frame_spec(p, {FrameKind::Conference, p.k, pair_index, variant});

  const std::size_t k = p.k;
  std::vector<std::size_t> basis(k);
  SymCirculantRow<BigRational> x_row;
  if (variant == Variant::Plus) {
    std::iota(basis.begin(), basis.end(), 0);
    x_row = -n_row;
  } else {
    std::iota(basis.begin(), basis.end(), k);
    try {
      x_row = -circulant_inverse(n_row);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SingularCirculant) throw Error(ErrorCode::SingularN, "N is singular");
      throw;
    }
  }
  auto cf = detail::make_coordinate_frame(spec, std::move(basis), x_row.matrix());
  return {std::move(spec), std::move(cf)};
}

/// Coordinates from the two-parameter construction: basis f_1..f_k and
/// X = ((alpha+a)I + bN)^{-1} (bI - (alpha+a)N), N from (a, b).
inline CoordinateFrame goethals_seidel_coordinates(const ConferencePair& p, const BigRational& a,
                                                   const BigRational& b, std::size_t pair_index = 0) {
  p.check_pattern();
  const BigRational alpha(conference_alpha(p));
  if (a == -alpha) throw Error(ErrorCode::InvalidArgument, "a must differ from -alpha");
  const auto n_row = compute_N(p, a, b, alpha);
  const BigRational s = alpha + a;
  const std::size_t k = p.k;
  // (alpha+a)I + bN and bI - (alpha+a)N as circulant rows.
  std::vector<BigRational> lead(k), rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    lead[i] = b * n_row[i] + (i == 0 ? s : BigRational(0));
    rhs[i] = -s * n_row[i] + (i == 0 ? b : BigRational(0));
  }
  SymCirculantRow<BigRational> lead_inv;
  try {
    lead_inv = circulant_inverse(SymCirculantRow<BigRational>(lead));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularCirculant)
      throw Error(ErrorCode::SingularLeadBlock, "(alpha+a)I + bN is singular");
    throw;
  }
  const auto x_row = circulant_multiply(lead_inv, SymCirculantRow<BigRational>(rhs));
  auto spec = conference_frame_spec(p, {FrameKind::GoethalsSeidel, k, pair_index, Variant::Plus});
  std::vector<std::size_t> basis(k);
  std::iota(basis.begin(), basis.end(), 0);
  return detail::make_coordinate_frame(std::move(spec), std::move(basis), x_row.matrix());
}

/// Rows of √6·G for the (6,16) frame.
inline SignMatrix frame_6_16_signs() {
  static constexpr std::array<const char*, 6> rows = {
      "++++++++++++++++", "++++++++--------", "++++----++++----",
      "++--++--++--++--", "+-+-+-+-+-+-+-+-", "+--+-++--++-+--+",
  };
  return SignMatrix::generate(6, 16, [](std::size_t i, std::size_t j) { return rows[i][j] == '+' ? 1 : -1; });
}

/// (6,16) frame; the Seidel matrix is 3·(G̃'G̃/6 - I) for the sign matrix G̃.
/// Basis f_1, f_2, f_3, f_4, f_5, f_9.
inline std::pair<FrameSpec, CoordinateFrame> frame_6_16() {
  const auto g = frame_6_16_signs();
  const auto gtg = g.transpose() * g;  // entries 6 on the diagonal, ±2 off it
  auto seidel = SignMatrix::generate(16, 16, [&](std::size_t i, std::size_t j) { return i == j ? 0 : gtg(i, j) / 2; });
  auto spec = FrameSpec::make(6, 16, std::move(seidel), {FrameKind::Explicit6x16, 6});
  auto cf = coordinates_for_basis(spec, {0, 1, 2, 3, 4, 8});
  return {spec, cf};
}

/// The 28 integer vectors in Z^8 with -3 at positions {i, j} (i < j,
/// lexicographic) and 1 elsewhere.
inline std::vector<std::array<int, 8>> frame_7_28_vectors() {
  std::vector<std::array<int, 8>> out;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      std::array<int, 8> v;
      v.fill(1);
      v[i] = v[j] = -3;
      out.push_back(v);
    }
  return out;
}

/// Positions (0-based) of the 7 basis vectors: pairs {1,2}, {1,3}, ...,
/// {1,7} and {3,6}.
inline constexpr std::array<std::size_t, 7> kFrame728Basis = {0, 1, 2, 3, 4, 5, 15};

/// (7,28) frame with Gram f̃_i·f̃_j / 24.
inline std::pair<FrameSpec, CoordinateFrame> frame_7_28() {
  const auto v = frame_7_28_vectors();
  auto seidel = SignMatrix::generate(28, 28, [&](std::size_t i, std::size_t j) {
    if (i == j) return 0;
    int dot = 0;
    for (std::size_t t = 0; t < 8; ++t) dot += v[i][t] * v[j][t];
    return dot / 8;  // (dot/24)·alpha with alpha = 3
  });
  auto spec = FrameSpec::make(7, 28, std::move(seidel), {FrameKind::Explicit7x28, 7});
  auto cf = coordinates_for_basis(spec, {kFrame728Basis.begin(), kFrame728Basis.end()});
  return {spec, cf};
}

/// Basis used when a frame is turned into a lattice: the fixed bases for
/// the explicit frames and the minus-variant conference frames, otherwise the
/// greedy leftmost choice.
inline std::vector<std::size_t> default_basis(const FrameSpec& f) {
  switch (f.label.kind) {
    case FrameKind::Explicit6x16: return {0, 1, 2, 3, 4, 8};
    case FrameKind::Explicit7x28: return {kFrame728Basis.begin(), kFrame728Basis.end()};
    case FrameKind::Conference:
      if (f.label.variant == Variant::Minus) {
        std::vector<std::size_t> b(f.k);
        std::iota(b.begin(), b.end(), f.k);
        return b;
      }
      break;
    default: break;
  }
  return greedy_basis(f);
}

}  // namespace etflat
