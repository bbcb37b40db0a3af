#pragma once

#include <cmath>
#include <compare>
#include <string>
#include <utility>

#include "etflat/error.hpp"
#include "etflat/exact/rational.hpp"

namespace etflat {

/// Largest prime candidate tried by squarefree_split before falling back to
/// an exact perfect-square test on the cofactor. Radicands seen here are
/// products of small primes, so the fallback is never exercised in practice.
inline constexpr unsigned long kTrialDivisionBound = 1'000'000;

/// Splits n >= 1 as square² · squarefree.
inline std::pair<BigInt, BigInt> squarefree_split(BigInt n) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "squarefree_split needs n >= 1");
  BigInt square = 1, free = 1;
  for (unsigned long p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
    BigInt pp = BigInt(p) * p;
    if (pp > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) square *= p;
    if (e % 2) free *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      square *= r;
    } else {
      free *= n;
    }
  }
  return {square, free};
}

/// coeff · √radicand with radicand squarefree; radicand is 1 exactly when the
/// value is rational (and always 1 for zero).
class SurdValue {
 public:
  SurdValue() = default;
  explicit SurdValue(BigRational r) : coeff_(std::move(r)) {}

  SurdValue(BigRational coeff, BigInt radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
    normalize();
  }

  const BigRational& coeff() const noexcept { return coeff_; }
  const BigInt& radicand() const noexcept { return radicand_; }
  bool is_rational() const noexcept { return radicand_ == 1; }

  /// Exact square coeff²·radicand.
  BigRational square() const { return coeff_ * coeff_ * BigRational(radicand_); }

  double to_double() const {
    return coeff_.get_d() * std::sqrt(radicand_.get_d());
  }

  SurdValue operator*(const BigRational& r) const { return SurdValue(coeff_ * r, radicand_); }
  SurdValue inverse() const {
    if (coeff_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero surd");
    // 1/(c√m) = (1/(c m))·√m
    return SurdValue(1 / (coeff_ * BigRational(radicand_)), radicand_);
  }

  friend bool operator==(const SurdValue&, const SurdValue&) = default;

  friend std::strong_ordering operator<=>(const SurdValue& s, const BigRational& r) {
    const int ss = sgn(s.coeff_), rs = sgn(r);
    if (ss != rs) return ss <=> rs;
    const BigRational s2 = s.square(), r2 = r * r;
    const int c = cmp(s2, r2);
    if (c == 0) return std::strong_ordering::equal;
    // Same sign: compare magnitudes, flipped when negative.
    const bool less = ss >= 0 ? c < 0 : c > 0;
    return less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  friend bool operator==(const SurdValue& s, const BigRational& r) { return (s <=> r) == 0; }

  /// "c" or "c*sqrt(m)".
  std::string to_string() const {
    if (is_rational()) return coeff_.get_str();
    return coeff_.get_str() + "*sqrt(" + radicand_.get_str() + ")";
  }

 private:
  void normalize() {
    if (radicand_ < 0) throw Error(ErrorCode::NegativeRadicand, "negative radicand");
    if (coeff_ == 0 || radicand_ == 0) {
      coeff_ = 0;
      radicand_ = 1;
      return;
    }
    auto [sq, free] = squarefree_split(radicand_);
    coeff_ *= BigRational(sq);
    radicand_ = free;
  }

  BigRational coeff_ = 0;
  BigInt radicand_ = 1;
};

/// Exact √r. √(p/q) = √(p·q)/q, with the square part of p·q pulled out.
inline SurdValue sqrt_rational(const BigRational& r) {
  if (r < 0) throw Error(ErrorCode::NegativeRadicand, "sqrt of negative rational " + r.get_str());
  if (r == 0) return SurdValue{};
  auto [sp, fp] = squarefree_split(r.get_num());
  auto [sq, fq] = squarefree_split(r.get_den());
  // √(sp²fp / (sq²fq)) = sp/(sq·fq) · √(fp·fq); fp, fq coprime so fp·fq is squarefree.
  return SurdValue(make_rational(sp, sq * fq), fp * fq);
}

inline bool is_rational_square(const BigRational& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num().get_mpz_t()) && mpz_perfect_square_p(r.get_den().get_mpz_t());
}

}  // namespace etflat
