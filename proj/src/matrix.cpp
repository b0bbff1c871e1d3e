#include "locmult/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "locmult/errors.hpp"

namespace locmult {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(to_string((*this)(i, j)));
  }
  return out;
}

Matrix Matrix::from_strings(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ParseError("ragged matrix row", i);
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

namespace {

// Row echelon form in place; returns the rank and flips `sign` per swap.
std::size_t eliminate(Matrix& m, int& sign) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  int sign = 1;
  if (eliminate(m, sign) < m.rows()) return 0;
  Rational det = sign;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

std::size_t rank(Matrix m) {
  int sign = 1;
  return eliminate(m, sign);
}

std::vector<Polynomial> combine(const Matrix& a, std::span<const Polynomial> f) {
  if (f.empty() || a.cols() != f.size()) {
    throw std::invalid_argument("combine: matrix width does not match generator count");
  }
  std::vector<Polynomial> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Polynomial y(f.front().ring());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) y += f[j].scaled(a(i, j));
    }
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace locmult
