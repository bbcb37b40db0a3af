#pragma once

// Exact linear algebra over Z and Q: fraction-free determinants, rank,
// linear solves, rational LDL' and integer lattice bases.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "etflat/error.hpp"
#include "etflat/exact/matrix.hpp"
#include "etflat/exact/rational.hpp"

namespace etflat {

namespace detail {

inline void divexact(BigInt& q, const BigInt& a, const BigInt& d) {
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
}

// Rows of a rational matrix scaled by the lcm of their denominators.
// Returns the integer rows and the product of the scale factors.
inline std::pair<std::vector<std::vector<BigInt>>, BigInt> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
  BigInt scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt v = m(i, j).get_num() * l;
      divexact(rows[i][j], v, m(i, j).get_den());
    }
    scale *= l;
  }
  return {std::move(rows), scale};
}

inline BigInt bareiss_in_place(std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        divexact(a[i][j], t, prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace detail

/// Determinant by Bareiss fraction-free elimination; every intermediate
/// value is a minor of the input, so nothing leaves Z.
inline BigInt bareiss_determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "determinant of non-square matrix");
  std::vector<std::vector<BigInt>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a[i].assign(m.row(i).begin(), m.row(i).end());
  return detail::bareiss_in_place(a);
}

/// Rational input is cleared of denominators row by row, then handled as above.
inline BigRational bareiss_determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "determinant of non-square matrix");
  auto [rows, scale] = detail::integer_rows(m);
  return make_rational(detail::bareiss_in_place(rows), scale);
}

inline std::size_t matrix_rank(const RationalMatrix& m) {
  auto rows = detail::integer_rows(m).first;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t p = rank;
    while (p < nr && rows[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(rows[rank], rows[p]);
    const auto& piv = rows[rank];
    for (std::size_t i = rank + 1; i < nr; ++i) {
      if (rows[i][c] == 0) continue;
      BigInt f = rows[i][c];
      BigInt content = 0;
      for (std::size_t j = c; j < nc; ++j) {
        rows[i][j] = rows[i][j] * piv[c] - f * piv[j];
        content = gcd(content, rows[i][j]);
      }
      if (content > 1)
        for (std::size_t j = c; j < nc; ++j) detail::divexact(rows[i][j], rows[i][j], content);
    }
    ++rank;
  }
  return rank;
}

/// Solves A·Y = B exactly (Gauss–Jordan over Q).
inline RationalMatrix solve_linear(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.is_square()) throw Error(ErrorCode::SizeMismatch, "solve_linear: A not square");
  if (a.rows() != b.rows()) throw Error(ErrorCode::SizeMismatch, "solve_linear: row count of B");
  const std::size_t n = a.rows(), m = b.cols();
  std::vector<std::vector<BigRational>> aug(n, std::vector<BigRational>(n + m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    for (std::size_t j = 0; j < m; ++j) aug[i][n + j] = b(i, j);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "solve_linear: det A = 0");
    std::swap(aug[c], aug[p]);
    const BigRational inv = 1 / aug[c][c];
    for (std::size_t j = c; j < n + m; ++j) aug[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const BigRational f = aug[i][c];
      for (std::size_t j = c; j < n + m; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  return RationalMatrix::generate(n, m, [&](std::size_t i, std::size_t j) { return aug[i][n + j]; });
}

inline RationalMatrix inverse(const RationalMatrix& a) {
  return solve_linear(a, RationalMatrix::identity(a.rows()));
}

struct LDLDecomposition {
  RationalMatrix unit_lower;
  std::vector<BigRational> diag;

  bool positive_definite() const {
    return std::all_of(diag.begin(), diag.end(), [](const BigRational& d) { return d > 0; });
  }

  RationalMatrix reconstruct() const {
    const std::size_t n = diag.size();
    auto ld = RationalMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
      return BigRational(unit_lower(i, j) * diag[j]);
    });
    return ld * unit_lower.transpose();
  }
};

/// Q = L·diag(d)·L'. Any zero pivot raises PivotBreakdown: with a nonzero
/// remaining column the factorization does not exist, and with a zero one Q
/// is singular (semidefinite at best).
inline LDLDecomposition ldl_decompose(const RationalMatrix& q) {
  if (!q.is_symmetric()) throw Error(ErrorCode::InvalidArgument, "ldl_decompose: matrix not symmetric");
  const std::size_t n = q.rows();
  std::vector<std::vector<BigRational>> l(n, std::vector<BigRational>(n));
  std::vector<BigRational> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    BigRational dj = q(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= l[j][k] * l[j][k] * d[k];
    d[j] = dj;
    l[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      BigRational s = q(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k] * d[k];
      if (dj == 0) {
        if (s != 0) throw Error(ErrorCode::PivotBreakdown, "zero pivot with nonzero column");
      } else {
        l[i][j] = s / dj;
      }
    }
    if (dj == 0) throw Error(ErrorCode::PivotBreakdown, "zero pivot: matrix is singular (semidefinite at best)");
  }
  auto lower = RationalMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return l[i][j]; });
  return {std::move(lower), std::move(d)};
}

/// Basis of the Z-module spanned by the integer columns of `gens`, returned
/// as the columns of a square upper-triangular (Hermite-style) matrix.
/// Requires the columns to span Q^rows.
inline IntegerMatrix integer_column_basis(const IntegerMatrix& gens) {
  const std::size_t k = gens.rows(), m = gens.cols();
  std::vector<std::vector<BigInt>> v(m, std::vector<BigInt>(k));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i) v[j][i] = gens(i, j);

  std::size_t cursor = 0;
  for (std::size_t c = 0; c < k; ++c) {
    // Euclid on column c among rows [cursor, m).
    while (true) {
      std::size_t best = m;
      for (std::size_t r = cursor; r < m; ++r)
        if (v[r][c] != 0 && (best == m || abs(v[r][c]) < abs(v[best][c]))) best = r;
      if (best == m) break;
      bool others = false;
      for (std::size_t r = cursor; r < m; ++r) {
        if (r == best || v[r][c] == 0) continue;
        BigInt qt = floor_div(v[r][c], v[best][c]);
        for (std::size_t i = c; i < k; ++i) v[r][i] -= qt * v[best][i];
        if (v[r][c] != 0) others = true;
      }
      if (!others) {
        std::swap(v[cursor], v[best]);
        if (v[cursor][c] < 0)
          for (auto& e : v[cursor]) e = -e;
        ++cursor;
        break;
      }
    }
    if (cursor != c + 1) throw Error(ErrorCode::SingularMatrix, "generators do not span full rank");
  }
  // Reduce entries above the diagonal into [0, pivot).
  for (std::size_t c = 1; c < k; ++c)
    for (std::size_t r = 0; r < c; ++r) {
      BigInt qt = floor_div(v[r][c], v[c][c]);
      if (qt != 0)
        for (std::size_t i = c; i < k; ++i) v[r][i] -= qt * v[c][i];
    }
  return IntegerMatrix::generate(k, k, [&](std::size_t i, std::size_t j) { return v[j][i]; });
}

}  // namespace etflat
