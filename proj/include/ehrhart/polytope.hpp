#pragma once

// The central geometric object: a polytope given as the convex hull of a
// finite list of lattice points.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/normal_forms.hpp"

namespace ehrhart {

/// Componentwise bounding box of a finite point set.
struct BoundingBox {
  Point lo;
  Point hi;
};

/// A lattice polytope in an ambient space Z^d, stored as its generating
/// lattice points.  The list is kept exactly as given (all operations are
/// about the convex hull, so redundant generators are harmless); duplicates
/// are rejected.  The affine dimension is computed once at construction.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t ambient_dim, std::vector<Point> vertices)
      : ambient_dim_(ambient_dim), vertices_(std::move(vertices)) {
    if (ambient_dim_ == 0) {
      throw std::invalid_argument("ambient dimension must be positive");
    }
    if (vertices_.empty()) {
      throw std::invalid_argument("polytope needs at least one vertex");
    }
    for (const Point& v : vertices_) {
      if (v.size() != ambient_dim_) {
        throw std::invalid_argument("vertex dimension mismatch");
      }
    }
    std::vector<Point> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate vertex");
    }
    dimension_ = compute_dimension();
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Affine dimension of the hull (rank of the vertex-difference matrix).
  std::size_t dimension() const { return dimension_; }

  bool is_full_dimensional() const { return dimension_ == ambient_dim_; }

  /// True when the generators are exactly dim()+1 affinely independent
  /// points, i.e. the hull is a simplex presented without redundancy.
  bool is_simplex() const { return vertices_.size() == dimension_ + 1; }

  BoundingBox bounding_box() const {
    BoundingBox box{vertices_[0], vertices_[0]};
    for (const Point& v : vertices_) {
      for (std::size_t j = 0; j < ambient_dim_; ++j) {
        if (v[j] < box.lo[j]) box.lo[j] = v[j];
        if (v[j] > box.hi[j]) box.hi[j] = v[j];
      }
    }
    return box;
  }

  bool operator==(const LatticePolytope& other) const = default;

 private:
  std::size_t compute_dimension() const {
    if (vertices_.size() == 1) return 0;
    IntMatrix diff(ambient_dim_, vertices_.size() - 1);
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
      for (std::size_t j = 0; j < ambient_dim_; ++j) {
        diff.at(j, k - 1) = vertices_[k][j] - vertices_[0][j];
      }
    }
    return integer_rank(diff);
  }

  std::size_t ambient_dim_;
  std::vector<Point> vertices_;
  std::size_t dimension_;
};

inline std::ostream& operator<<(std::ostream& os, const LatticePolytope& p) {
  os << "conv{";
  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    if (i > 0) os << ", ";
    os << "(";
    const Point& v = p.vertices()[i];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j > 0) os << ",";
      os << v[j];
    }
    os << ")";
  }
  return os << "}";
}

}  // namespace ehrhart
