#pragma once

// Strong eutaxy and perfection of frame lattices, tested in coordinate space.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "etflat/error.hpp"
#include "etflat/exact.hpp"
#include "etflat/frames.hpp"
#include "etflat/lattice.hpp"

namespace etflat {

struct EutaxyReport {
  bool is_strongly_eutactic = false;
  BigRational parseval_constant;  // c with Σ xx' = c·Q^{-1}; 0 when no such c
  bool sum_is_zero = false;
};

/// Σ over signed minimal vectors of xx' must equal c·Q^{-1}, i.e. M·Q = c·I.
inline EutaxyReport strong_eutaxy_check(const LatticeModel& m, const MinVecReport& r) {
  const std::size_t k = m.k;
  std::vector<BigRational> acc(k * k);
  IntVector sum(k, 0);
  for (const auto& x : r.vectors) {
    for (std::size_t i = 0; i < k; ++i) {
      // x and -x contribute x_i and -x_i to the signed sum.
      sum[i] += x[i] - x[i];
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) acc[i * k + j] += 2 * x[i] * x[j];
    }
  }
  const RationalMatrix mq = RationalMatrix(k, k, std::move(acc)) * m.gram;
  EutaxyReport rep;
  rep.sum_is_zero = std::all_of(sum.begin(), sum.end(), [](long v) { return v == 0; });
  const BigRational c = mq(0, 0);
  const bool scalar = c > 0 && mq == c * RationalMatrix::identity(k);
  if (scalar) rep.parseval_constant = c;
  rep.is_strongly_eutactic = scalar && rep.sum_is_zero;
  return rep;
}

struct PerfectionReport {
  std::size_t rank = 0;
  std::size_t required = 0;
  bool is_perfect = false;
  std::optional<BigInt> det_d;
};

/// Lower triangle of xx', column by column: (1,1), (2,1), ..., (k,1), (2,2), ...
template <class I>
std::vector<BigInt> lower_triangle_outer(const std::vector<I>& x) {
  std::vector<BigInt> out;
  for (std::size_t c = 0; c < x.size(); ++c)
    for (std::size_t r = c; r < x.size(); ++r) out.push_back(BigInt(x[r]) * x[c]);
  return out;
}

inline PerfectionReport perfection_rank(const LatticeModel& m, const MinVecReport& r) {
  const std::size_t k = m.k;
  PerfectionReport rep;
  rep.required = k * (k + 1) / 2;
  if (r.vectors.empty()) return rep;
  std::vector<BigRational> rows;
  for (const auto& x : r.vectors)
    for (auto& v : lower_triangle_outer(x)) rows.emplace_back(v);
  rep.rank = matrix_rank(RationalMatrix(r.vectors.size(), rep.required, std::move(rows)));
  rep.is_perfect = rep.rank == rep.required;
  return rep;
}

// ---------------------------------------------------------------------------
// The 28×28 perfection matrix of the (7,28) lattice
// ---------------------------------------------------------------------------

/// Row j (1-based) of the 7×8 map sending the sum-zero hyperplane of R^8
/// isometrically (after row scaling) onto R^7.
///   TableRows: j ones, then -1, then zeros (reproduces the reference table).
///   ScaledRows: j ones, then -j, then zeros.
enum class BacherConvention { TableRows, ScaledRows };

inline IntegerMatrix bacher_a0(BacherConvention conv) {
  return IntegerMatrix::generate(7, 8, [&](std::size_t i, std::size_t j) {
    const std::size_t ones = i + 1;
    if (j < ones) return BigInt(1);
    if (j == ones) return BigInt(conv == BacherConvention::TableRows ? -1 : -static_cast<long>(ones));
    return BigInt(0);
  });
}

/// Column j is the stacked lower triangle of (A0 f_j)(A0 f_j)'.
inline IntegerMatrix bacher_matrix_728(BacherConvention conv = BacherConvention::TableRows) {
  const auto a0 = bacher_a0(conv);
  const auto fs = frame_7_28_vectors();
  std::vector<std::vector<BigInt>> cols;
  for (const auto& f : fs) {
    std::vector<BigInt> w(7);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t t = 0; t < 8; ++t) w[i] += a0(i, t) * f[t];
    cols.push_back(lower_triangle_outer(w));
  }
  return IntegerMatrix::generate(28, 28, [&](std::size_t i, std::size_t j) { return cols[j][i]; });
}

inline BigInt bacher_det_728(BacherConvention conv = BacherConvention::TableRows) {
  return bareiss_determinant(bacher_matrix_728(conv));
}

}  // namespace etflat
