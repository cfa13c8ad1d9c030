#include "capelli/matrix.hpp"

#include <stdexcept>

namespace capelli {

Matrix Matrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(std::size_t n, const Rational& c) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::basis(std::size_t n, std::size_t i) {
  Matrix m(n, 1);
  m(i, 0) = 1;
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Rational(-1)); }

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r)
    if (sgn((*this)(r, c)) != 0) return false;
  return true;
}

bool Matrix::columns_equal(const Matrix& o, std::size_t c) const {
  if (rows_ != o.rows_) throw std::invalid_argument("column comparison: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, c) != o(r, c)) return false;
  return true;
}

bool Matrix::is_nilpotent() const {
  if (rows_ != cols_) return false;
  if (rows_ == 0) return true;
  Matrix p = *this;
  for (std::size_t k = 1; k < rows_; ++k) p = p * *this;
  return p.is_zero();
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
  return out;
}

Matrix evaluate(const UniPoly& p, const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("polynomial of a non-square matrix");
  Matrix acc(m.rows(), m.cols());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + Matrix::scalar(m.rows(), *it);
  return acc;
}

}  // namespace capelli
