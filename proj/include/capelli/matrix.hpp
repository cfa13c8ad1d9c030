#pragma once

#include "capelli/rational.hpp"
#include "capelli/unipoly.hpp"

#include <cstddef>
#include <vector>

namespace capelli {

/// Small dense rational matrix, row-major. Zero-sized dimensions are allowed
/// and stand for maps into or out of the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& c);
  /// Column vector with a one in position i.
  static Matrix basis(std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;

  bool is_zero() const;
  bool column_is_zero(std::size_t c) const;
  bool columns_equal(const Matrix& o, std::size_t c) const;
  bool is_nilpotent() const;

  /// Block-diagonal sum.
  static Matrix block_diag(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// p(M) for a square matrix.
Matrix evaluate(const UniPoly& p, const Matrix& m);

}  // namespace capelli
