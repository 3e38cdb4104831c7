#pragma once

// The lattice-point counting polynomial of a full-dimensional lattice
// polytope P in R^d: the unique degree-d polynomial L whose value at each
// integer n >= 0 is the number of lattice points of nP.  It is recovered by
// Lagrange interpolation through the d+1 counted values L(0), ..., L(d).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// A polynomial with exact rational coefficients, stored in ascending order
/// of degree.  The leading coefficient is nonzero unless the polynomial is
/// a bare constant.
class EhrhartPolynomial {
 public:
  explicit EhrhartPolynomial(std::vector<Rat> ascending_coefficients)
      : coeffs_(std::move(ascending_coefficients)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("polynomial needs at least one coefficient");
    }
    if (coeffs_.size() > 1 && coeffs_.back() == 0) {
      throw std::invalid_argument("leading coefficient must be nonzero");
    }
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  const Rat& leading_coefficient() const { return coeffs_.back(); }

  Rat operator()(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      acc = acc * x + coeffs_[k];
    }
    return acc;
  }

  Rat operator()(const Int& n) const { return (*this)(Rat(n)); }

  bool operator==(const EhrhartPolynomial& other) const = default;

 private:
  std::vector<Rat> coeffs_;
};

namespace detail {

/// Counted values L(0), L(1), ..., L(d) for a full-dimensional polytope.
inline std::vector<Int> dilate_counts(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<Int> counts(d + 1);
  counts[0] = 1;
  for (std::size_t n = 1; n <= d; ++n) {
    counts[n] = count_lattice_points(p, Int(n),
                                     ContainmentMode::boundary_inclusive);
  }
  return counts;
}

/// Lagrange interpolation through the nodes (0, y_0), ..., (k, y_k),
/// returned as ascending coefficients of length k+1 (untrimmed).
inline std::vector<Rat> interpolate_at_small_nodes(
    const std::vector<Int>& values) {
  const std::size_t k = values.size() - 1;
  std::vector<Rat> coeffs(k + 1, Rat(0));
  for (std::size_t i = 0; i <= k; ++i) {
    if (values[i] == 0) continue;
    // Numerator polynomial prod_{j != i} (x - j) and scalar denominator
    // prod_{j != i} (i - j), built incrementally.
    std::vector<Rat> basis{Rat(1)};
    Int denom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      if (j == i) continue;
      basis.push_back(Rat(0));
      for (std::size_t t = basis.size() - 1; t > 0; --t) {
        basis[t] = basis[t - 1] - basis[t] * Rat(Int(j));
      }
      basis[0] = -basis[0] * Rat(Int(j));
      denom *= Int(i) - Int(j);
    }
    // The two-argument constructor requires a positive denominator.
    const Rat scale = denom < 0 ? Rat(-values[i], -denom)
                                : Rat(values[i], denom);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      coeffs[t] += basis[t] * scale;
    }
  }
  return coeffs;
}

inline EhrhartPolynomial ehrhart_from_counts(const std::vector<Int>& counts) {
  std::vector<Rat> coeffs = interpolate_at_small_nodes(counts);
  if (coeffs.front() != 1 || coeffs.back() <= 0) {
    throw std::logic_error(
        "counting polynomial must have constant term 1 and positive leading "
        "coefficient");
  }
  return EhrhartPolynomial(std::move(coeffs));
}

}  // namespace detail

/// Exact counting polynomial of a full-dimensional lattice polytope.
inline EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  if (!p.is_full_dimensional()) {
    throw DegenerateInput(
        "interpolation requires a full-dimensional polytope");
  }
  return detail::ehrhart_from_counts(detail::dilate_counts(p));
}

}  // namespace ehrhart
