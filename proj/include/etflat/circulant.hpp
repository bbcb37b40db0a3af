#pragma once

// Symmetric circulant algebra and the search for symmetric conference
// matrices of the block form [[A, D], [D, -A]] with A, D symmetric circulants.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "etflat/error.hpp"
#include "etflat/exact.hpp"

namespace etflat {

/// First row of a symmetric k×k circulant. Symmetry of the circulant is the
/// palindrome condition row[i] == row[k-i] for 1 <= i < k.
template <class T>
class SymCirculantRow {
 public:
  SymCirculantRow() = default;

  explicit SymCirculantRow(std::vector<T> first_row) : row_(std::move(first_row)) {
    if (row_.empty()) throw Error(ErrorCode::MalformedPattern, "empty circulant row");
    const std::size_t k = row_.size();
    for (std::size_t i = 1; i < k; ++i)
      if (row_[i] != row_[k - i]) throw Error(ErrorCode::MalformedPattern, "circulant row is not palindromic");
  }

  static SymCirculantRow unit(std::size_t k) {
    std::vector<T> r(k, T(0));
    r[0] = T(1);
    return SymCirculantRow(std::move(r));
  }

  std::size_t size() const noexcept { return row_.size(); }
  const T& operator[](std::size_t i) const { return row_[i]; }
  const std::vector<T>& values() const noexcept { return row_; }

  Matrix<T> matrix() const {
    const std::size_t k = size();
    return Matrix<T>::generate(k, k, [&](std::size_t i, std::size_t j) { return row_[(j + k - i) % k]; });
  }

  SymCirculantRow operator-() const {
    std::vector<T> r(row_);
    for (auto& v : r) v = -v;
    return SymCirculantRow(std::move(r));
  }

  /// Row of (this + c·I).
  SymCirculantRow plus_identity(const T& c) const {
    std::vector<T> r(row_);
    r[0] += c;
    return SymCirculantRow(std::move(r));
  }

  template <class U>
  SymCirculantRow<U> cast() const {
    return SymCirculantRow<U>(std::vector<U>(row_.begin(), row_.end()));
  }

  bool all_integer() const
    requires std::same_as<T, BigRational>
  {
    return std::all_of(row_.begin(), row_.end(), [](const BigRational& v) { return v.get_den() == 1; });
  }

  friend bool operator==(const SymCirculantRow&, const SymCirculantRow&) = default;
  friend auto operator<=>(const SymCirculantRow& a, const SymCirculantRow& b)
    requires std::same_as<T, int>
  {
    return a.row_ <=> b.row_;
  }

 private:
  std::vector<T> row_;
};

/// First row of the product circulant: cyclic convolution of the rows.
template <class T>
SymCirculantRow<T> circulant_multiply(const SymCirculantRow<T>& a, const SymCirculantRow<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "circulant sizes differ");
  const std::size_t k = a.size();
  std::vector<T> c(k, T(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) c[(i + j) % k] += a[i] * b[j];
  }
  return SymCirculantRow<T>(std::move(c));
}

template <class T>
SymCirculantRow<T> circulant_add(const SymCirculantRow<T>& a, const SymCirculantRow<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "circulant sizes differ");
  std::vector<T> c(a.values());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return SymCirculantRow<T>(std::move(c));
}

/// Exact inverse, from the solve C'·r = e0 for the first row r.
inline SymCirculantRow<BigRational> circulant_inverse(const SymCirculantRow<BigRational>& a) {
  const std::size_t k = a.size();
  const auto ct = a.matrix().transpose();
  const auto e0 = RationalMatrix::generate(k, 1, [](std::size_t i, std::size_t) { return i == 0 ? 1 : 0; });
  try {
    const auto r = solve_linear(ct, e0);
    return SymCirculantRow<BigRational>(r.column(0));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) throw Error(ErrorCode::SingularCirculant, "circulant is singular");
    throw;
  }
}

// ---------------------------------------------------------------------------
// Conference pairs
// ---------------------------------------------------------------------------

/// Number of free signs in the zero-headed A row and the D row for size k.
inline std::size_t a_free_signs(std::size_t k) { return k / 2; }
inline std::size_t d_free_signs(std::size_t k) { return k / 2 + 1; }

/// Pair (A, D) of symmetric circulants; A has zero head and ±1 elsewhere,
/// D is ±1 everywhere.
struct ConferencePair {
  std::size_t k = 0;
  SymCirculantRow<int> a;
  SymCirculantRow<int> d;

  /// Builds the pair from its free signs: the A signs a[1..k/2] followed by
  /// the D signs d[0..k/2].
  static ConferencePair from_signs(std::size_t k, const std::vector<int>& signs) {
    const std::size_t na = a_free_signs(k), nd = d_free_signs(k);
    if (signs.size() != na + nd) throw Error(ErrorCode::MalformedPattern, "wrong number of free signs");
    std::vector<int> ar(k, 0), dr(k, 0);
    for (std::size_t i = 1; i <= na; ++i) ar[i] = ar[k - i] = signs[i - 1];
    dr[0] = signs[na];
    for (std::size_t i = 1; i <= k / 2; ++i) dr[i] = dr[k - i] = signs[na + i];
    ConferencePair p{k, SymCirculantRow<int>(ar), SymCirculantRow<int>(dr)};
    p.check_pattern();
    return p;
  }

  /// Free sign tuple, inverse of from_signs.
  std::vector<int> signs() const {
    std::vector<int> s;
    for (std::size_t i = 1; i <= a_free_signs(k); ++i) s.push_back(a[i]);
    for (std::size_t i = 0; i <= k / 2; ++i) s.push_back(d[i]);
    return s;
  }

  void check_pattern() const {
    if (a.size() != k || d.size() != k) throw Error(ErrorCode::MalformedPattern, "row size != k");
    if (a[0] != 0) throw Error(ErrorCode::MalformedPattern, "A row must start with 0");
    for (std::size_t i = 1; i < k; ++i)
      if (a[i] != 1 && a[i] != -1) throw Error(ErrorCode::MalformedPattern, "A entries must be ±1 off the head");
    for (std::size_t i = 0; i < k; ++i)
      if (d[i] != 1 && d[i] != -1) throw Error(ErrorCode::MalformedPattern, "D entries must be ±1");
  }

  /// The 2k×2k matrix [[A, D], [D, -A]].
  SignMatrix conference_matrix() const {
    const auto am = a.matrix(), dm = d.matrix();
    return SignMatrix::generate(2 * k, 2 * k, [&](std::size_t i, std::size_t j) {
      const bool top = i < k, left = j < k;
      const std::size_t r = i % k, c = j % k;
      if (top && left) return am(r, c);
      if (!top && !left) return -am(r, c);
      return dm(r, c);
    });
  }

  friend bool operator==(const ConferencePair&, const ConferencePair&) = default;
  friend auto operator<=>(const ConferencePair& x, const ConferencePair& y) { return x.signs() <=> y.signs(); }
};

namespace detail {

// Cyclic autocorrelation lags 1..k/2 of a ±1/0 row (the rest follow by symmetry).
inline std::vector<int> autocorrelation_key(const std::vector<int>& r) {
  const std::size_t k = r.size();
  std::vector<int> key(k / 2);
  for (std::size_t s = 1; s <= k / 2; ++s) {
    int acc = 0;
    for (std::size_t i = 0; i < k; ++i) acc += r[i] * r[(i + s) % k];
    key[s - 1] = acc;
  }
  return key;
}

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::vector<int> signs_from_index(std::uint64_t index, std::size_t len) {
  std::vector<int> s(len);
  for (std::size_t j = 0; j < len; ++j) s[j] = ((index >> (len - 1 - j)) & 1u) ? 1 : -1;
  return s;
}

inline std::vector<int> a_row_from_index(std::size_t k, std::uint64_t index) {
  const auto s = signs_from_index(index, a_free_signs(k));
  std::vector<int> r(k, 0);
  for (std::size_t i = 1; i <= s.size(); ++i) r[i] = r[k - i] = s[i - 1];
  return r;
}

inline std::vector<int> d_row_from_index(std::size_t k, std::uint64_t index) {
  const auto s = signs_from_index(index, d_free_signs(k));
  std::vector<int> r(k, 0);
  r[0] = s[0];
  for (std::size_t i = 1; i <= k / 2; ++i) r[i] = r[k - i] = s[i];
  return r;
}

}  // namespace detail

/// True iff A² + D² = (2k-1)·I, i.e. a⋆a + d⋆d = (2k-1)·e0.
inline bool is_conference(const ConferencePair& p) {
  p.check_pattern();
  const std::size_t k = p.k;
  for (std::size_t s = 0; s < k; ++s) {
    long acc = 0;
    for (std::size_t i = 0; i < k; ++i)
      acc += static_cast<long>(p.a[i]) * p.a[(s + k - i) % k] + static_cast<long>(p.d[i]) * p.d[(s + k - i) % k];
    if (acc != (s == 0 ? static_cast<long>(2 * k - 1) : 0)) return false;
  }
  return true;
}

struct SearchOptions {
  unsigned threads = 1;
  bool brute_force = false;  // audit path: test every sign tuple directly
};

/// Every conference pair of size k over the palindromic parameterization, in
/// lexicographic order of the free-sign tuple (-1 before +1). The default
/// path is a meet-in-the-middle join of A candidates, keyed by the negated
/// autocorrelation of a, against D candidates keyed by d⋆d.
inline std::vector<ConferencePair> search_conference_pairs(std::size_t k, SearchOptions opts = {}) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "search needs k >= 2");
  const std::size_t na = a_free_signs(k), nd = d_free_signs(k);
  if (na + nd > 40 || k > (1u << 20)) throw Error(ErrorCode::InvalidArgument, "k too large for the search");
  const std::uint64_t a_count = std::uint64_t{1} << na, d_count = std::uint64_t{1} << nd;
  const unsigned threads = std::max(1u, opts.threads);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> hits;

  if (opts.brute_force) {
    for (std::uint64_t ia = 0; ia < a_count; ++ia)
      for (std::uint64_t id = 0; id < d_count; ++id) {
        ConferencePair p{k, SymCirculantRow<int>(detail::a_row_from_index(k, ia)),
                         SymCirculantRow<int>(detail::d_row_from_index(k, id))};
        if (is_conference(p)) hits.emplace_back(ia, id);
      }
  } else {
    std::unordered_map<std::vector<int>, std::vector<std::uint64_t>, detail::KeyHash> by_key;
    for (std::uint64_t id = 0; id < d_count; ++id)
      by_key[detail::autocorrelation_key(detail::d_row_from_index(k, id))].push_back(id);

    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> partial(threads);
    auto work = [&](unsigned t) {
      for (std::uint64_t ia = t; ia < a_count; ia += threads) {
        auto key = detail::autocorrelation_key(detail::a_row_from_index(k, ia));
        for (auto& v : key) v = -v;
        auto it = by_key.find(key);
        if (it == by_key.end()) continue;
        for (auto id : it->second) partial[t].emplace_back(ia, id);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (auto& p : partial) hits.insert(hits.end(), p.begin(), p.end());
  }

  std::sort(hits.begin(), hits.end());
  std::vector<ConferencePair> out;
  out.reserve(hits.size());
  for (auto [ia, id] : hits) {
    ConferencePair p{k, SymCirculantRow<int>(detail::a_row_from_index(k, ia)),
                     SymCirculantRow<int>(detail::d_row_from_index(k, id))};
    if (!is_conference(p)) throw Error(ErrorCode::InvalidArgument, "search produced a non-conference pair");
    out.push_back(std::move(p));
  }
  return out;
}

/// N = (D + bI)^{-1}(A - aI) when D + bI is invertible, else
/// N = (A + aI)^{-1}(bI - D). Requires a² + b² = alpha².
inline SymCirculantRow<BigRational> compute_N(const ConferencePair& p, const BigRational& a, const BigRational& b,
                                              const BigRational& alpha) {
  if (a * a + b * b != alpha * alpha) throw Error(ErrorCode::InvalidArgument, "a² + b² must equal alpha²");
  const auto ar = p.a.cast<BigRational>(), dr = p.d.cast<BigRational>();
  try {
    const auto lead = circulant_inverse(dr.plus_identity(b));
    return circulant_multiply(lead, ar.plus_identity(-a));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularCirculant) throw;
  }
  try {
    const auto lead = circulant_inverse(ar.plus_identity(a));
    return circulant_multiply(lead, (-dr).plus_identity(b));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularCirculant) throw;
  }
  throw Error(ErrorCode::BothSingular, "neither D + bI nor A + aI is invertible");
}

/// det of the circulant with the given first row plus c·I.
inline BigInt circulant_det(const SymCirculantRow<int>& r, long shift = 0) {
  const std::size_t k = r.size();
  const auto m = IntegerMatrix::generate(k, k, [&](std::size_t i, std::size_t j) {
    return BigInt(r[(j + k - i) % k] + (i == j ? shift : 0L));
  });
  return bareiss_determinant(m);
}

/// Renders a sign row in the comma style "0, -, +, +, -".
inline std::string format_signs(const std::vector<int>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += row[i] > 0 ? "+" : (row[i] < 0 ? "-" : "0");
  }
  return out;
}

inline std::string format_signs(const SymCirculantRow<BigRational>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    const auto& v = row[i];
    if (v == 1) out += "+";
    else if (v == -1) out += "-";
    else out += v.get_str();
  }
  return out;
}

}  // namespace etflat
