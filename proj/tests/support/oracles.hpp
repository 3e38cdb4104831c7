#pragma once

// Test-only oracles, deliberately naive so they share no machinery with the
// production paths they double-check.

#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/membership.hpp"
#include "ehrhart/polytope.hpp"

namespace test_support {

using ehrhart::ContainmentMode;
using ehrhart::Int;
using ehrhart::LatticePolytope;
using ehrhart::Point;

/// Count lattice points of nP by scanning the full bounding box and asking
/// the LP membership test about every single point.  Exponentially wasteful
/// and proud of it.
inline Int naive_count(const LatticePolytope& p, const Int& n,
                       ContainmentMode mode) {
  const std::size_t d = p.ambient_dim();
  if (n == 0) return 1;
  const ehrhart::BoundingBox box = p.bounding_box();
  std::vector<Point> verts = ehrhart::detail::dilated_vertices(p, n);
  Point lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = box.lo[j] * n;
    hi[j] = box.hi[j] * n;
  }
  Int total = 0;
  Point x = lo;
  for (;;) {
    if (ehrhart::detail::point_in_hull(verts, x, mode)) ++total;
    std::size_t k = 0;
    while (k < d) {
      ++x[k];
      if (x[k] <= hi[k]) break;
      x[k] = lo[k];
      ++k;
    }
    if (k == d) break;
  }
  return total;
}

/// Coefficients 0 .. 2d+1 of (1-t)^{d+1} * sum_{n=0}^{2d+1} L(n) t^n, where
/// the counts L(n) are taken straight from the counting engine.  For a
/// genuine lattice polytope the first d+1 coefficients are the delta vector
/// and the remaining d+1 vanish identically; using twice as many counted
/// dilates as the delta transform makes this an independent consistency
/// check of counting and transform together.
inline std::vector<Int> truncated_delta_series(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  const std::size_t top = 2 * d + 1;
  std::vector<Int> counts(top + 1);
  counts[0] = 1;
  for (std::size_t n = 1; n <= top; ++n) {
    counts[n] = ehrhart::count_lattice_points(
        p, Int(n), ContainmentMode::boundary_inclusive);
  }
  std::vector<Int> coeffs(top + 1, Int(0));
  for (std::size_t j = 0; j <= top; ++j) {
    Int acc = 0;
    for (std::size_t i = 0; i <= j && i <= d + 1; ++i) {
      const Int term = ehrhart::binomial(d + 1, i) * counts[j - i];
      if (i % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    coeffs[j] = acc;
  }
  return coeffs;
}

}  // namespace test_support
