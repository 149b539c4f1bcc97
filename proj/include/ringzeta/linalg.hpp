#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ringzeta/numeric.hpp"

namespace ringzeta::linalg {

/// Dense row-major matrix over an exact scalar.
template <class Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  template <class Row>
  static Matrix from_rows(const std::vector<Row>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(rows[i][j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> row(std::size_t i) const {
    return std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class Scalar>
Matrix<Scalar> operator*(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

Rational determinant(RatMatrix m);

/// Inverse of a square nonsingular matrix; nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Basis of the rational null space {x : m x = 0}, each vector scaled to a primitive integer vector.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m);

/// Basis of the integer lattice {x in Z^n : m x = 0}.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

/// Solves a * basis = target for the row vector a; nullopt if target is not in the row space.
std::optional<std::vector<Rational>> solve_in_row_space(const RatMatrix& basis, const std::vector<Rational>& target);

/// Divides a vector by the gcd of its entries (sign preserved).
std::vector<Integer> primitive(std::vector<Integer> v);

struct SmithDecomposition {
  IntMatrix left;      ///< unimodular U
  IntMatrix diagonal;  ///< D = U A V, diagonal with d_i | d_{i+1}, non-negative
  IntMatrix right;     ///< unimodular V
};

/// Smith normal form over Z with transforms.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: upper triangular, positive pivots, entries above each pivot
/// reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

}  // namespace ringzeta::linalg
