#pragma once

// The index of the affine lattice generated by a point set inside the
// ambient lattice.  Index 1 is the "spanning" condition: the points
// affinely generate all of Z^d.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/normal_forms.hpp"

namespace ehrhart {

/// Index [Z^d : L] of the sublattice L spanned by the differences
/// points[i] - points[0].  The points must affinely span R^d; otherwise the
/// sublattice has infinite index and DegenerateInput is thrown.  The result
/// is the product of the Smith invariants of the difference matrix.
inline Int lattice_index(const std::vector<Point>& points) {
  if (points.empty()) {
    throw std::invalid_argument("lattice_index needs at least one point");
  }
  const std::size_t d = points[0].size();
  if (d == 0) {
    throw std::invalid_argument("points must have positive dimension");
  }
  for (const Point& p : points) {
    if (p.size() != d) {
      throw std::invalid_argument("point dimension mismatch");
    }
  }
  if (points.size() < d + 1) {
    throw DegenerateInput("not full-dimensional");
  }
  IntMatrix diff(d, points.size() - 1);
  for (std::size_t k = 1; k < points.size(); ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      diff.at(j, k - 1) = points[k][j] - points[0][j];
    }
  }
  std::vector<Int> inv = smith_invariants(diff);
  Int index = 1;
  std::size_t rank = 0;
  for (const Int& s : inv) {
    if (s != 0) {
      index *= s;
      ++rank;
    }
  }
  if (rank != d) {
    throw DegenerateInput("not full-dimensional");
  }
  return index;
}

}  // namespace ehrhart
