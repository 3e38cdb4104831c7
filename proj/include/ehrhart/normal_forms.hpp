#pragma once

// Hermite and Smith normal forms over the integers, with the unimodular
// transformations that witness them.  These are the workhorses behind
// lattice indices and the half-open-parallelepiped point count.

#include <cstddef>
#include <cstdlib>
#include <utility>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/matrix.hpp"

namespace ehrhart {

/// Row-style Hermite normal form of a nonsingular square matrix M:
/// h = u * m with u unimodular, h upper triangular with positive diagonal,
/// and every entry above a pivot reduced into [0, pivot).
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};

/// Smith normal form of an arbitrary matrix M: s = u * m * v with u, v
/// unimodular and s diagonal with nonnegative entries s_1 | s_2 | ... ;
/// zero entries come last.
struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_a -= q * row_b
inline void add_row_multiple(IntMatrix& m, std::size_t a, std::size_t b,
                             const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

// col_a -= q * col_b
inline void add_col_multiple(IntMatrix& m, std::size_t a, std::size_t b,
                             const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

inline void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace detail

/// Hermite normal form by integer row operations.  Throws DegenerateInput
/// if the matrix is not square or is singular.
inline HnfResult hermite_normal_form(const IntMatrix& m) {
  if (!m.is_square()) {
    throw DegenerateInput("not invertible: matrix is not square");
  }
  const std::size_t n = m.rows();
  IntMatrix h(m);
  IntMatrix u = IntMatrix::identity(n);

  for (std::size_t j = 0; j < n; ++j) {
    // Euclidean elimination below the diagonal of column j.
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = j; i < n; ++i) {
        if (h.at(i, j) == 0) continue;
        if (best == n ||
            detail::abs_int(h.at(i, j)) < detail::abs_int(h.at(best, j))) {
          best = i;
        }
      }
      if (best == n) {
        throw DegenerateInput("not invertible: matrix is singular");
      }
      detail::swap_rows(h, j, best);
      detail::swap_rows(u, j, best);
      bool clean = true;
      for (std::size_t i = j + 1; i < n; ++i) {
        if (h.at(i, j) == 0) continue;
        Int q = h.at(i, j) / h.at(j, j);  // truncated: |remainder| < |pivot|
        detail::add_row_multiple(h, i, j, q);
        detail::add_row_multiple(u, i, j, q);
        if (h.at(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(j, j) < 0) {
      detail::negate_row(h, j);
      detail::negate_row(u, j);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < j; ++i) {
      Int q = floor_div(h.at(i, j), h.at(j, j));
      detail::add_row_multiple(h, i, j, q);
      detail::add_row_multiple(u, i, j, q);
    }
  }
  return HnfResult{std::move(h), std::move(u)};
}

/// Smith normal form by alternating row and column reduction.  Works for
/// any shape; the diagonal is normalized to nonnegative entries with each
/// dividing the next, zeros last.
inline SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix s(m);
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  const std::size_t steps = rows < cols ? rows : cols;
  for (std::size_t t = 0; t < steps; ++t) {
    // Find the entry of smallest nonzero magnitude in the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (s.at(i, j) == 0) continue;
        if (pi == rows || detail::abs_int(s.at(i, j)) <
                              detail::abs_int(s.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;  // trailing block is zero; remaining diagonal is 0
    detail::swap_rows(s, t, pi);
    detail::swap_rows(u, t, pi);
    detail::swap_cols(s, t, pj);
    detail::swap_cols(v, t, pj);

    for (;;) {
      // Clear column t below the pivot.
      bool col_clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = s.at(i, t) / s.at(t, t);
        detail::add_row_multiple(s, i, t, q);
        detail::add_row_multiple(u, i, t, q);
        if (s.at(i, t) != 0) {
          // Remainder is smaller than the pivot: promote it and restart.
          detail::swap_rows(s, t, i);
          detail::swap_rows(u, t, i);
          col_clean = false;
        }
      }
      if (!col_clean) continue;
      // Clear row t to the right of the pivot.
      bool row_clean = true;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = s.at(t, j) / s.at(t, t);
        detail::add_col_multiple(s, j, t, q);
        detail::add_col_multiple(v, j, t, q);
        if (s.at(t, j) != 0) {
          detail::swap_cols(s, t, j);
          detail::swap_cols(v, t, j);
          row_clean = false;
        }
      }
      if (!row_clean) continue;

      // Enforce divisibility: the pivot must divide the trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols && divides; ++j) {
          if (s.at(i, j) % s.at(t, t) != 0) {
            // Fold row i into row t and redo the reduction.
            detail::add_row_multiple(s, t, i, Int(-1));
            detail::add_row_multiple(u, t, i, Int(-1));
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (s.at(t, t) < 0) {
      detail::negate_row(s, t);
      detail::negate_row(u, t);
    }
  }
  return SnfResult{std::move(s), std::move(u), std::move(v)};
}

/// Diagonal of the Smith normal form, length min(rows, cols), zeros last.
inline std::vector<Int> smith_invariants(const IntMatrix& m) {
  SnfResult snf = smith_normal_form(m);
  const std::size_t k = m.rows() < m.cols() ? m.rows() : m.cols();
  std::vector<Int> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = snf.s.at(i, i);
  return d;
}

/// Rank over the integers (= rank over the rationals).
inline std::size_t integer_rank(const IntMatrix& m) {
  std::vector<Int> d = smith_invariants(m);
  std::size_t r = 0;
  for (const Int& x : d) {
    if (x != 0) ++r;
  }
  return r;
}

}  // namespace ehrhart
