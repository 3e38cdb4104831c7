#pragma once

// Dense matrices over arbitrary-precision integers, with the exact linear
// algebra the rest of the library is built on: fraction-free determinants
// and adjugates.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart/arith.hpp"

namespace ehrhart {

/// A rows x cols matrix of exact integers.  Both dimensions are at least 1.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw std::invalid_argument("matrix dimensions must be positive");
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Point column(std::size_t j) const {
    Point c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  Point row(std::size_t i) const {
    Point r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  bool operator==(const IntMatrix& other) const = default;

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) {
      throw std::invalid_argument("matrix product shape mismatch");
    }
    IntMatrix result(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          result.at(i, j) += a * other.at(k, j);
        }
      }
    }
    return result;
  }

  Point operator*(const Point& v) const {
    if (v.size() != cols_) {
      throw std::invalid_argument("matrix-vector shape mismatch");
    }
    Point result(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
      result[i] = std::move(acc);
    }
    return result;
  }

  /// Exact determinant by Bareiss fraction-free elimination.  All
  /// intermediate divisions are exact, so no rationals appear.
  Int determinant() const {
    if (!is_square()) {
      throw std::invalid_argument("determinant requires a square matrix");
    }
    const std::size_t n = rows_;
    IntMatrix a(*this);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a.at(k, k) == 0) {
        std::size_t pivot = k + 1;
        while (pivot < n && a.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a.at(k, j), a.at(pivot, j));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        }
        a.at(i, k) = 0;
      }
      prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
  }

  /// Adjugate matrix: adj(A) * A = A * adj(A) = det(A) * I.  Computed from
  /// cofactors, each an exact Bareiss determinant; fine for the small
  /// dimensions this library works in.
  IntMatrix adjugate() const {
    if (!is_square()) {
      throw std::invalid_argument("adjugate requires a square matrix");
    }
    const std::size_t n = rows_;
    if (n == 1) {
      IntMatrix one(1, 1);
      one.at(0, 0) = 1;
      return one;
    }
    IntMatrix adj(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
          if (r == i) continue;
          for (std::size_t c = 0, mc = 0; c < n; ++c) {
            if (c == j) continue;
            minor.at(mr, mc) = at(r, c);
            ++mc;
          }
          ++mr;
        }
        Int cof = minor.determinant();
        if ((i + j) % 2 == 1) cof = -cof;
        adj.at(j, i) = std::move(cof);  // transpose of the cofactor matrix
      }
    }
    return adj;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << m.at(i, j);
    }
    os << "]" << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

}  // namespace ehrhart
