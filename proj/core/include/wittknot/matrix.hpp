#pragma once

#include <cstddef>
#include <vector>

#include "wittknot/numeric.hpp"

namespace wittknot {

// Dense row-major matrix over an exact scalar (BigInt or Rational).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix&) const = default;

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  // block-diagonal direct sum
  Matrix direct_sum(const Matrix& o) const {
    Matrix r(rows_ + o.rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) r(rows_ + i, cols_ + j) = o(i, j);
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

// Exact determinants: fraction-free Bareiss elimination with row pivoting.
BigInt det_bareiss(IntMatrix a);
Rational det_bareiss(const RatMatrix& a);

}  // namespace wittknot
