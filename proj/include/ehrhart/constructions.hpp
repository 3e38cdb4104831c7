#pragma once

// Standard ways of producing lattice polytopes: simplices, pyramids, and
// the three fixed witness polytopes realizing the exceptional volume-5
// delta vectors at their minimum dimensions.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// conv(0, e_1, ..., e_d): the unimodular simplex of volume 1.
inline LatticePolytope standard_simplex(std::size_t d) {
  if (d == 0) {
    throw std::invalid_argument("dimension must be positive");
  }
  std::vector<Point> verts(d + 1, Point(d, Int(0)));
  for (std::size_t i = 0; i < d; ++i) verts[i + 1][i] = 1;
  return LatticePolytope(d, std::move(verts));
}

/// The pyramid over P: embed P at height 0 in one more dimension and cone
/// over the new unit point.  The delta vector is unchanged by this
/// construction (up to the longer, zero-padded shape).
inline LatticePolytope lattice_pyramid(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<Point> verts;
  verts.reserve(p.vertex_count() + 1);
  for (const Point& v : p.vertices()) {
    Point w(d + 1, Int(0));
    for (std::size_t j = 0; j < d; ++j) w[j] = v[j];
    verts.push_back(std::move(w));
  }
  Point apex(d + 1, Int(0));
  apex[d] = 1;
  verts.push_back(std::move(apex));
  return LatticePolytope(d + 1, std::move(verts));
}

/// Iterated pyramid.
inline LatticePolytope lattice_pyramid(const LatticePolytope& p,
                                       std::size_t times) {
  LatticePolytope q = p;
  for (std::size_t i = 0; i < times; ++i) q = lattice_pyramid(q);
  return q;
}

/// The three non-simplex witnesses, k = 1, 2, 3, realizing the exceptional
/// volume-5 delta vectors at their minimum dimensions:
///   k = 1: dimension 2, delta (1, 3, 1),       exponents (1,1,1,2)
///   k = 2: dimension 3, delta (1, 1, 3, 0),    exponents (1,2,2,2)
///   k = 3: dimension 5, delta (1, 1, 1, 2, 0, 0), exponents (1,2,3,3)
inline LatticePolytope exceptional_witness(int k) {
  switch (k) {
    case 1:
      return LatticePolytope(2, {{Int(0), Int(0)},
                                 {Int(1), Int(0)},
                                 {Int(0), Int(1)},
                                 {Int(2), Int(3)}});
    case 2:
      return LatticePolytope(3, {{Int(0), Int(0), Int(0)},
                                 {Int(1), Int(0), Int(0)},
                                 {Int(0), Int(1), Int(0)},
                                 {Int(0), Int(0), Int(1)},
                                 {Int(1), Int(1), Int(3)}});
    case 3: {
      std::vector<Point> verts(7, Point(5, Int(0)));
      for (std::size_t i = 0; i < 5; ++i) verts[i + 1][i] = 1;
      verts[6] = {Int(-1), Int(1), Int(1), Int(1), Int(2)};
      return LatticePolytope(5, std::move(verts));
    }
    default:
      throw std::invalid_argument("witness index must be 1, 2, or 3");
  }
}

/// Is P a full-dimensional simplex whose only lattice points are its
/// vertices?  False (never an error) for anything that is not presented as
/// a full-dimensional simplex.
inline bool is_empty_simplex(const LatticePolytope& p) {
  if (!p.is_full_dimensional() || p.vertex_count() != p.ambient_dim() + 1) {
    return false;
  }
  return count_lattice_points(p, Int(1),
                              ContainmentMode::boundary_inclusive) ==
         Int(p.ambient_dim() + 1);
}

/// Do the lattice points of P affinely generate the whole lattice Z^d?
/// Requires P full-dimensional.
inline bool is_spanning(const LatticePolytope& p) {
  if (!p.is_full_dimensional()) {
    throw DegenerateInput("not full-dimensional");
  }
  return lattice_index(enumerate_lattice_points(
             p, Int(1), ContainmentMode::boundary_inclusive)) == 1;
}

}  // namespace ehrhart
