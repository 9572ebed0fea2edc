#pragma once

// Small dense matrices over exact scalars (64-bit integers and rationals).
// Everything in this project lives in rank <= 8 lattices or in tables of a
// few hundred rows, so a plain row-major vector is all we need.

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxar {

using Int = std::int64_t;
using Rational = boost::rational<Int>;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  /// Builds a matrix whose j-th column is columns[j].
  static Matrix from_columns(const std::vector<std::vector<T>>& columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != m.rows_)
        throw std::invalid_argument("Matrix::from_columns: ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<T> out(a.rows(), T{0});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  return a * std::span<const T>(x);
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference: dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

/// x^T M y, with the dimension checks spelled out.
Int bilinear(const IntMatrix& m, std::span<const Int> x, std::span<const Int> y);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(std::span<const Int> v);

/// Returns the integer matrix if every entry has denominator 1.
std::optional<IntMatrix> to_integer(const RatMatrix& m);
std::optional<IntVector> to_integer(std::span<const Rational> v);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& m);

/// det of the k x k top-left block for k = 1..n.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

/// Solves A x = b exactly; nullopt if A is singular.
std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b);

struct SmithForm {
  std::vector<Int> invariants;  // nonzero diagonal entries d1 | d2 | ...
  std::size_t rank = 0;
};

/// Smith normal form over Z. Throws std::overflow_error if an intermediate
/// value leaves the int64 range.
SmithForm smith_form(IntMatrix m);

std::string to_string(const IntMatrix& m);

}  // namespace coxar
