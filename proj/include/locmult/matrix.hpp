#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "locmult/polynomial.hpp"
#include "locmult/rational.hpp"

namespace locmult {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Row-major strings, the form used in reports.
  std::vector<std::vector<std::string>> to_strings() const;
  static Matrix from_strings(const std::vector<std::vector<std::string>>& rows);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by Gaussian elimination over Q; square only.
Rational determinant(Matrix m);

/// Rank over Q.
std::size_t rank(Matrix m);

/// y_i = sum_j a(i,j) * f_j; requires a.cols() == f.size() and f nonempty.
std::vector<Polynomial> combine(const Matrix& a, std::span<const Polynomial> f);

}  // namespace locmult
