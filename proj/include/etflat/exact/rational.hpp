#pragma once

// Arbitrary-precision integers and rationals. GMP's mpq_class keeps values in
// lowest terms with a positive denominator after every arithmetic operation;
// the helpers below make sure values built from raw parts are canonical too.

#include <gmpxx.h>

#include <string>

#include "etflat/error.hpp"

namespace etflat {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline BigInt numerator(const BigRational& r) { return r.get_num(); }
inline BigInt denominator(const BigRational& r) { return r.get_den(); }

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigRational pow(const BigRational& base, unsigned long exp) {
  return make_rational(pow(base.get_num(), exp), pow(base.get_den(), exp));
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt floor(const BigRational& r) { return floor_div(r.get_num(), r.get_den()); }

inline BigInt ceil(const BigRational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "integer does not fit in long");
  return v.get_si();
}

/// "p/q", or "p" for integers.
inline std::string to_string(const BigRational& r) { return r.get_str(); }
inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Parses "p", "-p" or "p/q".
inline BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0) throw Error(ErrorCode::InvalidArgument, "bad rational '" + text + "'");
  if (r.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace etflat
