#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace genfx {

/// Exact rational scalar. GMP arithmetic keeps results canonical (den > 0,
/// reduced); the (num, den) constructor does not, so it is never used here.
using Rational = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// Dense row-major rational matrix.
///
/// Linear maps act on column vectors: a map R^n -> R^m is an m x n matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Row-wise integer literal, handy for tests and examples.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;

  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Matrix transpose() const;
  bool is_zero() const;

  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const Rational> x);
Matrix operator-(const Matrix& a, const Matrix& b);

/// [a; b] (rows of a on top of rows of b). Column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
/// [a b]. Row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(std::span<const Rational> v);

std::ostream& operator<<(std::ostream& os, const Matrix& m);
std::string to_string(std::span<const Rational> v);

}  // namespace genfx
