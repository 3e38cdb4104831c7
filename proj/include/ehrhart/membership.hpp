#pragma once

// Point-in-polytope queries by exact convex-combination feasibility.
//
// A point q lies in conv(v_1..v_m) iff weights w_i >= 0, sum w_i = 1 with
// sum w_i v_i = q exist, and in the relative interior iff such weights
// exist with every w_i strictly positive (true for the full generator
// list of the hull).  Both are answered by one LP: substitute
// w_i = t + s_i with s_i >= 0 and maximize t.  The optimum is the largest
// achievable minimum weight, so feasibility decides membership and the
// sign of the optimum decides the relative interior.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/lp.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

enum class ContainmentMode { boundary_inclusive, relative_interior };

namespace detail {

// Shared tableau builder: variables are [t, s_1..s_m]; rows force
// sum (t + s_i) v_i = q (coordinatewise) and sum (t + s_i) = 1.
// q is given pre-scaled per row: row j reads q_num[j] / q_den[j].
inline LpResult max_min_weight(const std::vector<Point>& verts,
                               const std::vector<Int>& q_num,
                               const std::vector<Int>& q_den) {
  const std::size_t m = verts.size();
  const std::size_t d = verts[0].size();
  std::vector<std::vector<Int>> a(d + 1, std::vector<Int>(m + 1, Int(0)));
  std::vector<Int> b(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    Int coord_sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      a[j][1 + i] = verts[i][j] * q_den[j];
      coord_sum += verts[i][j];
    }
    a[j][0] = coord_sum * q_den[j];
    b[j] = q_num[j];
  }
  for (std::size_t i = 0; i < m; ++i) a[d][1 + i] = 1;
  a[d][0] = Int(m);
  b[d] = 1;
  std::vector<Int> c(m + 1, Int(0));
  c[0] = 1;  // maximize t
  return lp_maximize(a, b, c);
}

/// Membership of an integer point in the hull of an integer point list.
inline bool point_in_hull(const std::vector<Point>& verts, const Point& q,
                          ContainmentMode mode) {
  const std::size_t d = verts[0].size();
  std::vector<Int> den(d, Int(1));
  LpResult res = max_min_weight(verts, q, den);
  if (res.status != LpStatus::optimal) return false;
  return mode == ContainmentMode::boundary_inclusive || res.objective > 0;
}

/// Exact range of the coordinate `axis` over the slice of conv(verts) where
/// the first `axis` coordinates equal `prefix`.  Empty slice -> nullopt.
inline std::optional<std::pair<Rat, Rat>> hull_coordinate_range(
    const std::vector<Point>& verts, const std::vector<Int>& prefix,
    std::size_t axis) {
  const std::size_t m = verts.size();
  std::vector<std::vector<Int>> a(axis + 1, std::vector<Int>(m, Int(0)));
  std::vector<Int> b(axis + 1);
  for (std::size_t j = 0; j < axis; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[j][i] = verts[i][j];
    b[j] = prefix[j];
  }
  for (std::size_t i = 0; i < m; ++i) a[axis][i] = 1;
  b[axis] = 1;
  std::vector<Int> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = verts[i][axis];
  LpRange range = lp_range(a, b, c);
  if (range.status == LpStatus::infeasible) return std::nullopt;
  if (range.status != LpStatus::optimal) {
    throw std::logic_error("coordinate range over a polytope is bounded");
  }
  return std::make_pair(range.lo, range.hi);
}

}  // namespace detail

/// Does q lie in P (boundary inclusive) or in the relative interior of P?
/// The query point may be rational; its dimension must match the ambient
/// dimension of P.
inline bool contains(const LatticePolytope& p, const RatPoint& q,
                     ContainmentMode mode) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (q.size() != p.ambient_dim()) {
    throw std::invalid_argument("query point dimension mismatch");
  }
  const std::size_t d = p.ambient_dim();
  std::vector<Int> num(d), den(d);
  for (std::size_t j = 0; j < d; ++j) {
    num[j] = Int(numerator(q[j]));
    den[j] = Int(denominator(q[j]));
  }
  LpResult res = detail::max_min_weight(p.vertices(), num, den);
  if (res.status != LpStatus::optimal) return false;
  return mode == ContainmentMode::boundary_inclusive || res.objective > 0;
}

/// Integer-point overload.
inline bool contains(const LatticePolytope& p, const Point& q,
                     ContainmentMode mode) {
  if (q.size() != p.ambient_dim()) {
    throw std::invalid_argument("query point dimension mismatch");
  }
  return detail::point_in_hull(p.vertices(), q, mode);
}

}  // namespace ehrhart
