#pragma once

// Exact lattice-point counting and enumeration in integer dilates nP.
//
// Two independent strategies:
//   * full-dimensional simplices: a bounding-box sweep testing scaled
//     barycentric coordinates, all in integers (no LP involved);
//   * arbitrary hulls: a recursive slice sweep that brackets one
//     coordinate at a time with exact LPs, so only nonempty slices are
//     visited, and the innermost axis is counted as an interval.
//
// Both visit points in lexicographic order, which makes enumeration
// deterministic.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/membership.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {
namespace detail {

inline std::vector<Point> dilated_vertices(const LatticePolytope& p,
                                           const Int& n) {
  std::vector<Point> verts = p.vertices();
  for (Point& v : verts) {
    for (Int& coord : v) coord *= n;
  }
  return verts;
}

// Bounding-box sweep over a full-dimensional simplex conv(v_0..v_d).
// With M = [v_1-v_0 | ... | v_d-v_0], det = det M > 0 and adj = adjugate,
// the scaled barycentric coordinates of p are z = adj * (p - v_0):
//   p in the simplex       <=>  all z_i >= 0 and sum z_i <= det,
//   p in its interior      <=>  all z_i >  0 and sum z_i <  det.
// The sweep updates z incrementally: moving one step along axis k adds
// column k of adj.
class SimplexScanner {
 public:
  explicit SimplexScanner(const std::vector<Point>& verts)
      : verts_(verts), d_(verts[0].size()) {
    IntMatrix m(d_, d_);
    for (std::size_t k = 1; k <= d_; ++k) {
      for (std::size_t j = 0; j < d_; ++j) {
        m.at(j, k - 1) = verts_[k][j] - verts_[0][j];
      }
    }
    det_ = m.determinant();
    if (det_ == 0) {
      throw DegenerateInput("not full-dimensional");
    }
    IntMatrix adj = m.adjugate();
    if (det_ < 0) {  // normalize so the acceptance tests read det_ > 0
      det_ = -det_;
      for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) adj.at(i, j) = -adj.at(i, j);
      }
    }
    cols_.resize(d_);
    for (std::size_t k = 0; k < d_; ++k) cols_[k] = adj.column(k);
    z0_.assign(d_, Int(0));
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t j = 0; j < d_; ++j) {
        z0_[i] -= adj.at(i, j) * verts_[0][j];
      }
    }
    lo_.assign(d_, verts_[0][0]);
    hi_.assign(d_, verts_[0][0]);
    for (std::size_t j = 0; j < d_; ++j) {
      lo_[j] = hi_[j] = verts_[0][j];
      for (const Point& v : verts_) {
        if (v[j] < lo_[j]) lo_[j] = v[j];
        if (v[j] > hi_[j]) hi_[j] = v[j];
      }
    }
  }

  Int count(ContainmentMode mode) {
    Int total = 0;
    Point x(d_);
    std::vector<Int> z = z0_;
    Int zsum = 0;
    for (const Int& v : z) zsum += v;
    sweep(0, x, z, zsum, mode, [&](const Point&) { ++total; });
    return total;
  }

  template <typename Emit>
  void enumerate(ContainmentMode mode, Emit&& emit) {
    Point x(d_);
    std::vector<Int> z = z0_;
    Int zsum = 0;
    for (const Int& v : z) zsum += v;
    sweep(0, x, z, zsum, mode, emit);
  }

 private:
  template <typename Emit>
  void sweep(std::size_t k, Point& x, std::vector<Int>& z, Int zsum,
             ContainmentMode mode, Emit&& emit) {
    if (k == d_) {
      if (mode == ContainmentMode::boundary_inclusive) {
        if (zsum > det_) return;
        for (const Int& v : z) {
          if (v < 0) return;
        }
      } else {
        if (zsum >= det_) return;
        for (const Int& v : z) {
          if (v <= 0) return;
        }
      }
      emit(static_cast<const Point&>(x));
      return;
    }
    const std::vector<Int> saved_z = z;
    const Int saved_sum = zsum;
    for (std::size_t j = 0; j < d_; ++j) {
      z[j] += lo_[k] * cols_[k][j];
      zsum += lo_[k] * cols_[k][j];
    }
    for (Int v = lo_[k]; v <= hi_[k]; ++v) {
      x[k] = v;
      sweep(k + 1, x, z, zsum, mode, emit);
      for (std::size_t j = 0; j < d_; ++j) {
        z[j] += cols_[k][j];
        zsum += cols_[k][j];
      }
    }
    z = saved_z;
    zsum = saved_sum;
  }

  std::vector<Point> verts_;
  std::size_t d_;
  Int det_;
  std::vector<Point> cols_;  // columns of the adjugate
  std::vector<Int> z0_;      // -adj * v_0
  std::vector<Int> lo_, hi_;
};

// LP-guided slice sweep over an arbitrary hull.  At recursion depth k the
// first k coordinates are fixed; an exact LP brackets coordinate k over
// that slice.  Convexity guarantees every integer in the bracket yields a
// nonempty deeper slice, so no work is wasted on empty regions.
class SectionScanner {
 public:
  explicit SectionScanner(std::vector<Point> verts)
      : verts_(std::move(verts)), d_(verts_[0].size()) {}

  Int count() {
    Int total = 0;
    std::vector<Int> prefix;
    prefix.reserve(d_);
    count_rec(prefix, total);
    return total;
  }

  template <typename Emit>
  void enumerate(Emit&& emit) {
    std::vector<Int> prefix;
    prefix.reserve(d_);
    enumerate_rec(prefix, emit);
  }

 private:
  std::pair<Int, Int> integer_bracket(const std::vector<Int>& prefix) {
    auto range = hull_coordinate_range(verts_, prefix, prefix.size());
    if (!range) {
      throw std::logic_error("slice of a nonempty polytope vanished");
    }
    return {rat_ceil(range->first), rat_floor(range->second)};
  }

  void count_rec(std::vector<Int>& prefix, Int& total) {
    const std::size_t k = prefix.size();
    auto [lo, hi] = integer_bracket(prefix);
    if (lo > hi) return;
    if (k + 1 == d_) {
      total += hi - lo + 1;
      return;
    }
    for (Int v = lo; v <= hi; ++v) {
      prefix.push_back(v);
      count_rec(prefix, total);
      prefix.pop_back();
    }
  }

  template <typename Emit>
  void enumerate_rec(std::vector<Int>& prefix, Emit&& emit) {
    const std::size_t k = prefix.size();
    auto [lo, hi] = integer_bracket(prefix);
    if (lo > hi) return;
    if (k + 1 == d_) {
      Point x(d_);
      for (std::size_t j = 0; j < k; ++j) x[j] = prefix[j];
      for (Int v = lo; v <= hi; ++v) {
        x[k] = v;
        emit(static_cast<const Point&>(x));
      }
      return;
    }
    for (Int v = lo; v <= hi; ++v) {
      prefix.push_back(v);
      enumerate_rec(prefix, emit);
      prefix.pop_back();
    }
  }

  std::vector<Point> verts_;
  std::size_t d_;
};

inline bool use_simplex_path(const LatticePolytope& p) {
  return p.is_full_dimensional() && p.is_simplex();
}

}  // namespace detail

/// Number of lattice points of the dilate nP (n >= 0), boundary inclusive
/// or restricted to the relative interior.  The n = 0 dilate is the single
/// point at the origin.
inline Int count_lattice_points(const LatticePolytope& p, const Int& n,
                                ContainmentMode mode) {
  if (n < 0) {
    throw std::invalid_argument("dilation factor must be nonnegative");
  }
  if (n == 0) return 1;
  std::vector<Point> verts = detail::dilated_vertices(p, n);
  if (detail::use_simplex_path(p)) {
    return detail::SimplexScanner(verts).count(mode);
  }
  if (mode == ContainmentMode::boundary_inclusive) {
    return detail::SectionScanner(std::move(verts)).count();
  }
  Int total = 0;
  detail::SectionScanner scanner(verts);
  scanner.enumerate([&](const Point& x) {
    if (detail::point_in_hull(verts, x, ContainmentMode::relative_interior)) {
      ++total;
    }
  });
  return total;
}

/// The lattice points of nP themselves, in lexicographic order.
inline std::vector<Point> enumerate_lattice_points(const LatticePolytope& p,
                                                   const Int& n,
                                                   ContainmentMode mode) {
  if (n < 0) {
    throw std::invalid_argument("dilation factor must be nonnegative");
  }
  std::vector<Point> out;
  if (n == 0) {
    out.emplace_back(p.ambient_dim(), Int(0));
    return out;
  }
  std::vector<Point> verts = detail::dilated_vertices(p, n);
  if (detail::use_simplex_path(p)) {
    detail::SimplexScanner(verts).enumerate(
        mode, [&](const Point& x) { out.push_back(x); });
    return out;
  }
  detail::SectionScanner scanner(verts);
  if (mode == ContainmentMode::boundary_inclusive) {
    scanner.enumerate([&](const Point& x) { out.push_back(x); });
    return out;
  }
  scanner.enumerate([&](const Point& x) {
    if (detail::point_in_hull(verts, x, ContainmentMode::relative_interior)) {
      out.push_back(x);
    }
  });
  return out;
}

}  // namespace ehrhart
