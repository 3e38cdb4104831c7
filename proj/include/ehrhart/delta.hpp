#pragma once

// The delta vector (h*-vector) of a lattice polytope: the coefficients of
// the numerator of the generating series sum_{n>=0} L(n) t^n written over
// (1-t)^{d+1}.  Two independent computations are provided:
//
//   * delta_vector: the alternating-sum transform of the counted values
//     L(0..d), which works for every full-dimensional polytope;
//   * simplex_delta_parallelepiped: for simplices only, a direct count of
//     lattice points by height in the half-open parallelepiped spanned by
//     the cone generators (v_i, 1), organized by the Smith normal form of
//     the generator matrix, with cost O(volume * d^2).
//
// Their agreement on simplices is a strong end-to-end consistency check and
// is enforced by the test suite, never assumed by the code.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/ehrhart_polynomial.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/normal_forms.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// A vector (delta_0, ..., delta_d) of nonnegative integers.  For vectors
/// produced from a polytope, delta_0 = 1, the entries sum to the normalized
/// volume, and dim() is the dimension of the polytope; the type itself also
/// admits synthetic vectors so that the combinatorial predicates can be
/// probed on non-realizable data.
class DeltaVector {
 public:
  explicit DeltaVector(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
      throw std::invalid_argument("delta vector needs at least one entry");
    }
    for (const Int& e : entries_) {
      if (e < 0) {
        throw std::invalid_argument("delta entries must be nonnegative");
      }
    }
  }

  std::size_t dim() const { return entries_.size() - 1; }

  /// Largest index with a nonzero entry (0 for the zero vector).
  std::size_t degree() const {
    for (std::size_t i = entries_.size(); i-- > 0;) {
      if (entries_[i] != 0) return i;
    }
    return 0;
  }

  const std::vector<Int>& entries() const { return entries_; }
  const Int& operator[](std::size_t i) const { return entries_[i]; }

  Int sum() const {
    Int s = 0;
    for (const Int& e : entries_) s += e;
    return s;
  }

  bool operator==(const DeltaVector& other) const = default;
  bool operator<(const DeltaVector& other) const {
    return entries_ < other.entries_;
  }

 private:
  std::vector<Int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const DeltaVector& dv) {
  os << "(";
  for (std::size_t i = 0; i < dv.entries().size(); ++i) {
    if (i > 0) os << ", ";
    os << dv[i];
  }
  return os << ")";
}

namespace detail {

/// The alternating-sum transform from counted values L(0..d) to
/// delta_0..delta_d:  delta_j = sum_i (-1)^i C(d+1, i) L(j-i).
inline DeltaVector delta_from_counts(const std::vector<Int>& counts) {
  const std::size_t d = counts.size() - 1;
  std::vector<Int> delta(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    Int acc = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      const Int term = binomial(d + 1, i) * counts[j - i];
      if (i % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    delta[j] = std::move(acc);
  }
  if (delta[0] != 1) {
    throw std::logic_error("delta_0 must equal 1 for a lattice polytope");
  }
  for (const Int& e : delta) {
    if (e < 0) {
      throw std::logic_error("delta entries of a lattice polytope are "
                             "nonnegative");
    }
  }
  return DeltaVector(std::move(delta));
}

}  // namespace detail

/// Delta vector of a full-dimensional lattice polytope, from the counted
/// dilates L(1), ..., L(d).
inline DeltaVector delta_vector(const LatticePolytope& p) {
  if (!p.is_full_dimensional()) {
    throw DegenerateInput(
        "interpolation requires a full-dimensional polytope");
  }
  return detail::delta_from_counts(detail::dilate_counts(p));
}

/// Normalized volume d! * vol(P), computed as the sum of the delta vector
/// and cross-checked against d! times the leading coefficient of the
/// counting polynomial; the two routes must agree exactly.
inline Int normalized_volume(const LatticePolytope& p) {
  if (!p.is_full_dimensional()) {
    throw DegenerateInput(
        "interpolation requires a full-dimensional polytope");
  }
  const std::vector<Int> counts = detail::dilate_counts(p);
  const DeltaVector dv = detail::delta_from_counts(counts);
  const EhrhartPolynomial ep = detail::ehrhart_from_counts(counts);
  const Int volume = dv.sum();
  if (Rat(volume) != ep.leading_coefficient() * Rat(factorial(p.ambient_dim()))) {
    throw std::logic_error("delta sum and leading coefficient disagree");
  }
  return volume;
}

/// Delta vector of a full-dimensional d-simplex by direct height counting.
///
/// The cone generators W = [(v_0,1) | ... | (v_d,1)] span a finite quotient
/// Z^{d+1} / W Z^{d+1} of order N = |det W|; the Smith normal form
/// S = U W V makes the quotient explicit, so each residue class y (taken
/// over the boxes [0, s_i)) lifts to the integer point x = U^{-1} y, and
/// reducing x modulo the columns of W lands in the half-open parallelepiped
/// spanned by them.  The last coordinate of the reduced point is the height;
/// delta_h counts the classes at height h.
inline DeltaVector simplex_delta_parallelepiped(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  if (!p.is_full_dimensional() || p.vertex_count() != d + 1) {
    throw DegenerateInput("simplex required");
  }
  IntMatrix w(d + 1, d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    const Point& v = p.vertices()[i];
    for (std::size_t j = 0; j < d; ++j) w.at(j, i) = v[j];
    w.at(d, i) = 1;
  }

  SnfResult snf = smith_normal_form(w);
  std::vector<Int> s(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    s[i] = snf.s.at(i, i);
    if (s[i] == 0) {
      throw DegenerateInput("simplex required");
    }
  }

  // U is unimodular, so U^{-1} = det(U) * adj(U) with det(U) = +-1.
  IntMatrix uinv = snf.u.adjugate();
  if (snf.u.determinant() < 0) {
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j <= d; ++j) uinv.at(i, j) = -uinv.at(i, j);
    }
  }

  Int det_w = w.determinant();
  IntMatrix adj_w = w.adjugate();
  if (det_w < 0) {
    det_w = -det_w;
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j <= d; ++j) adj_w.at(i, j) = -adj_w.at(i, j);
    }
  }

  std::vector<Int> delta(d + 1, Int(0));
  std::vector<Int> y(d + 1, Int(0));
  for (;;) {
    // x = U^{-1} y is a representative of the residue class y.
    Point x = uinv * y;
    // Reduce x modulo the column lattice of W: with mu = W^{-1} x, the
    // reduced point is x - W * floor(mu), which has coordinates W * frac(mu)
    // inside the half-open box.
    Point scaled_mu = adj_w * x;  // = det_w * mu
    Point fl(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      fl[i] = floor_div(scaled_mu[i], det_w);
    }
    Point shift = w * fl;
    const Int height = x[d] - shift[d];
    if (height < 0 || height > Int(d)) {
      throw std::logic_error("parallelepiped height out of range");
    }
    ++delta[static_cast<std::size_t>(height)];

    // Odometer over the residue boxes [0, s_i).
    std::size_t k = 0;
    while (k <= d) {
      ++y[k];
      if (y[k] < s[k]) break;
      y[k] = 0;
      ++k;
    }
    if (k > d) break;
  }

  Int total = 0;
  for (const Int& e : delta) total += e;
  if (total != det_w || delta[0] != 1) {
    throw std::logic_error("parallelepiped count must match the volume");
  }
  return DeltaVector(std::move(delta));
}

}  // namespace ehrhart
