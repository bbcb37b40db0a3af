#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "etflat/error.hpp"
#include "etflat/exact/rational.hpp"

namespace etflat {

/// Dense row-major matrix with value semantics. There is no mutable element
/// access: every transformation returns a fresh matrix.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorCode::SizeMismatch, "entry count != rows*cols");
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::SizeMismatch, "ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  template <class F>
  static Matrix generate(std::size_t rows, std::size_t cols, F&& f) {
    std::vector<T> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) entries.push_back(T(f(i, j)));
    return Matrix(rows, cols, std::move(entries));
  }

  static Matrix identity(std::size_t n) {
    return generate(n, n, [](std::size_t i, std::size_t j) { return T(i == j ? 1 : 0); });
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const T> entries() const noexcept { return data_; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    return generate(cols_, rows_, [this](std::size_t i, std::size_t j) { return (*this)(j, i); });
  }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    return generate(row_idx.size(), col_idx.size(),
                    [&](std::size_t i, std::size_t j) { return (*this)(row_idx[i], col_idx[j]); });
  }

  /// Copy with a single entry replaced.
  Matrix with(std::size_t i, std::size_t j, T value) const {
    Matrix m = *this;
    m.data_[i * cols_ + j] = std::move(value);
    return m;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  template <class U, class F>
  Matrix<U> map(F&& f) const {
    return Matrix<U>::generate(rows_, cols_, [&](std::size_t i, std::size_t j) { return f((*this)(i, j)); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    return generate(a.rows_, a.cols_, [&](std::size_t i, std::size_t j) { return T(a(i, j) + b(i, j)); });
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    return generate(a.rows_, a.cols_, [&](std::size_t i, std::size_t j) { return T(a(i, j) - b(i, j)); });
  }

  friend Matrix operator-(const Matrix& a) {
    return generate(a.rows_, a.cols_, [&](std::size_t i, std::size_t j) { return T(-a(i, j)); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product shape");
    std::vector<T> out(a.rows_ * b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& ail = a(i, l);
        if (ail == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out[i * b.cols_ + j] += ail * b(l, j);
      }
    return Matrix(a.rows_, b.cols_, std::move(out));
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    return generate(a.rows_, a.cols_, [&](std::size_t i, std::size_t j) { return T(s * a(i, j)); });
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::SizeMismatch, "shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<BigRational>;
using IntegerMatrix = Matrix<BigInt>;
using SignMatrix = Matrix<int>;

template <class T>
RationalMatrix to_rational(const Matrix<T>& m) {
  return m.template map<BigRational>([](const T& v) { return BigRational(v); });
}

/// Horizontal concatenation [a | b].
template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::SizeMismatch, "hstack row count");
  return Matrix<T>::generate(a.rows(), a.cols() + b.cols(), [&](std::size_t i, std::size_t j) {
    return j < a.cols() ? a(i, j) : b(i, j - a.cols());
  });
}

/// Quadratic form x' Q x for an integer coordinate vector.
template <class I>
BigRational quadratic_form(const RationalMatrix& q, std::span<const I> x) {
  BigRational acc = 0;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    if (x[i] == 0) continue;
    BigRational row = 0;
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (x[j] != 0) row += q(i, j) * BigRational(x[j]);
    acc += BigRational(x[i]) * row;
  }
  return acc;
}

}  // namespace etflat
