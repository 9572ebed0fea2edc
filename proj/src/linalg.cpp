#include "coxar/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace coxar {

namespace {

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in matrix arithmetic");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in matrix arithmetic");
  return out;
}

Int abs64(Int a) { return a < 0 ? -a : a; }

}  // namespace

Int bilinear(const IntMatrix& m, std::span<const Int> x, std::span<const Int> y) {
  if (x.size() != m.rows() || y.size() != m.cols())
    throw std::invalid_argument("bilinear form: vector length " + std::to_string(x.size()) + "/" +
                                std::to_string(y.size()) + " does not match " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()));
  Int acc = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += x[i] * m(i, j) * y[j];
  }
  return acc;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatVector to_rational(std::span<const Int> v) { return {v.begin(), v.end()}; }

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).denominator() != 1) return std::nullopt;
      out(i, j) = m(i, j).numerator();
    }
  return out;
}

std::optional<IntVector> to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.denominator() != 1) return std::nullopt;
    out.push_back(x.numerator());
  }
  return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).numerator() == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).numerator() == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).numerator() == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).numerator() == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

Int determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("leading_principal_minors: matrix is not square");
  std::vector<Int> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix block(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
    out.push_back(determinant(block));
  }
  return out;
}

std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  auto inv = inverse(a);
  if (!inv) return std::nullopt;
  return *inv * b;
}

SmithForm smith_form(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m(i, j) != 0 && (best == 0 || abs64(m(i, j)) < best)) {
          best = abs64(m(i, j));
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pr, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));

    bool clean = false;
    while (!clean) {
      clean = true;
      const Int p = m(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const Int q = m(i, t) / p;
        for (std::size_t j = t; j < cols; ++j) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(t, j)));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const Int q = m(t, j) / p;
        for (std::size_t i = t; i < rows; ++i) m(i, j) = checked_sub(m(i, j), checked_mul(q, m(i, t)));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived; move the smallest one into the pivot slot.
        std::size_t br = t, bc = t;
        Int b = abs64(m(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (m(i, t) != 0 && abs64(m(i, t)) < b) b = abs64(m(i, t)), br = i, bc = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(t, j) != 0 && abs64(m(t, j)) < b) b = abs64(m(t, j)), br = t, bc = j;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(br, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, bc));
        continue;
      }
      // Divisibility: the pivot must divide the whole trailing block.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % p != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m(t, jj) = m(t, jj) + m(i, jj);
            clean = false;
            break;
          }
    }
    out.invariants.push_back(abs64(m(t, t)));
    ++t;
  }
  out.rank = out.invariants.size();
  std::sort(out.invariants.begin(), out.invariants.end());
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace coxar
