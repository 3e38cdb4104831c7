#pragma once

// Brute-force verification of the volume-5 classification and the
// prime-volume spanning statement on exhaustively enumerated simplices.
//
// Every full-dimensional lattice simplex with one vertex at the origin is
// unimodularly equivalent to conv(0, columns of H) for some matrix H in
// Hermite normal form, and delta vectors are invariant under unimodular
// equivalence and translation.  Enumerating all Hermite forms of a fixed
// determinant therefore covers all realizable simplex delta vectors of
// that normalized volume.

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/analysis.hpp"
#include "ehrhart/arith.hpp"
#include "ehrhart/classification.hpp"
#include "ehrhart/constructions.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// All d x d matrices in Hermite normal form with determinant N: upper
/// triangular, positive diagonal entries multiplying to N, and each
/// above-diagonal entry reduced modulo the pivot below it.  Deterministic
/// order: diagonals ascend lexicographically, then the above-diagonal
/// entries count up row by row.
inline std::vector<IntMatrix> enumerate_hnf_matrices(std::size_t d,
                                                     const Int& n) {
  if (d == 0) {
    throw std::invalid_argument("dimension must be positive");
  }
  if (n < 1) {
    throw std::invalid_argument("determinant must be positive");
  }
  std::vector<Int> divisors;
  for (Int f = 1; f <= n; ++f) {
    if (n % f == 0) divisors.push_back(f);
  }

  std::vector<IntMatrix> result;
  std::vector<Int> diag(d);

  auto emit_all_with_diag = [&]() {
    IntMatrix h(d, d);
    for (std::size_t i = 0; i < d; ++i) h.at(i, i) = diag[i];
    // Odometer over the above-diagonal entries, each in [0, diag[col]).
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (diag[j] > 1) slots.emplace_back(i, j);
      }
    }
    for (;;) {
      result.push_back(h);
      std::size_t k = slots.size();
      while (k > 0) {
        auto [i, j] = slots[k - 1];
        ++h.at(i, j);
        if (h.at(i, j) < diag[j]) break;
        h.at(i, j) = 0;
        --k;
      }
      if (k == 0) break;
    }
  };

  auto fill_diag = [&](auto&& self, std::size_t pos, const Int& remaining) -> void {
    if (pos == d) {
      if (remaining == 1) emit_all_with_diag();
      return;
    }
    for (const Int& a : divisors) {
      if (remaining % a != 0) continue;
      diag[pos] = a;
      self(self, pos + 1, remaining / a);
    }
  };
  fill_diag(fill_diag, 0, n);
  return result;
}

/// The simplices conv(0, columns of H) over all Hermite forms of
/// determinant N, in the same deterministic order.
inline std::vector<LatticePolytope> enumerate_hnf_simplices(std::size_t d,
                                                            const Int& n) {
  std::vector<IntMatrix> forms = enumerate_hnf_matrices(d, n);
  std::vector<LatticePolytope> simplices;
  simplices.reserve(forms.size());
  for (const IntMatrix& h : forms) {
    std::vector<Point> verts;
    verts.reserve(d + 1);
    verts.emplace_back(d, Int(0));
    for (std::size_t j = 0; j < d; ++j) verts.push_back(h.column(j));
    simplices.emplace_back(d, std::move(verts));
  }
  return simplices;
}

/// Every delta vector realized by a d-dimensional simplex of normalized
/// volume N, sorted lexicographically without repeats.  Uses the
/// parallelepiped height count, which is exact and fast at this scale.
inline std::vector<DeltaVector> realized_delta_set(std::size_t d,
                                                   const Int& n) {
  std::set<DeltaVector> seen;
  for (const LatticePolytope& s : enumerate_hnf_simplices(d, n)) {
    seen.insert(simplex_delta_parallelepiped(s));
  }
  return {seen.begin(), seen.end()};
}

/// Outcome of one verification run.  `mismatches` holds human-readable
/// discrepancies between the enumerated ground truth and the closed-form
/// predicates; `spanning_violations` holds lattice-index or positivity
/// failures.  An empty report (ok() == true) means the run confirmed the
/// classification on every instance it touched.
struct ClassificationReport {
  int dim = 0;
  Int volume = 0;
  std::vector<ExponentTuple> realized_simplex_tuples;
  std::vector<ExponentTuple> predicate_simplex_tuples;
  std::vector<ExponentTuple> realized_polytope_tuples;
  std::vector<ExponentTuple> predicate_polytope_tuples;
  std::size_t simplex_count = 0;
  std::size_t witness_count = 0;
  std::vector<std::string> mismatches;

  // Spanning-run bookkeeping.
  std::size_t empty_simplex_count = 0;
  std::size_t nonempty_simplex_count = 0;
  std::vector<Int> empty_simplex_indices;  // distinct, sorted
  std::vector<std::string> spanning_violations;

  bool ok() const { return mismatches.empty() && spanning_violations.empty(); }
};

/// Verification runs enumerate every Hermite form of the given determinant,
/// so cost grows quickly with dimension; runs above this bound are refused
/// unless the caller raises the limit explicitly.
inline constexpr int default_verify_dim_limit = 6;

namespace detail {

inline std::string describe_tuple_set_difference(
    const std::string& label, const std::vector<ExponentTuple>& got,
    const std::vector<ExponentTuple>& expected) {
  std::ostringstream os;
  os << label << ": enumerated {";
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (i > 0) os << " ";
    os << got[i];
  }
  os << "} but predicate admits {";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) os << " ";
    os << expected[i];
  }
  os << "}";
  return os.str();
}

}  // namespace detail

/// Exhaustively verify the volume-5 classification in dimension d:
///   (a) the delta vectors realized by all Hermite-form simplices of
///       determinant 5 match the simplex predicate exactly;
///   (b) every exceptional tuple allowed at d is realized by the matching
///       witness polytope (iterated pyramids of the minimum-dimension
///       witness), is rejected by the simplex predicate, and is accepted by
///       the polytope predicate;
///   (c) simplex realizations and witnesses together match the polytope
///       predicate exactly.
inline ClassificationReport verify_main_theorem(
    int dim, int dim_limit = default_verify_dim_limit) {
  if (dim < 1 || dim > dim_limit) {
    throw std::invalid_argument(
        "dimension out of range for exhaustive verification");
  }
  ClassificationReport report;
  report.dim = dim;
  report.volume = 5;

  const std::size_t d = static_cast<std::size_t>(dim);
  std::set<ExponentTuple> realized;
  {
    std::vector<LatticePolytope> simplices = enumerate_hnf_simplices(d, 5);
    report.simplex_count = simplices.size();
    for (const LatticePolytope& s : simplices) {
      realized.insert(exponent_tuple(simplex_delta_parallelepiped(s)));
    }
  }
  report.realized_simplex_tuples.assign(realized.begin(), realized.end());
  report.predicate_simplex_tuples =
      enumerate_admissible(dim, 5, PolytopeKind::simplex).tuples;
  if (report.realized_simplex_tuples != report.predicate_simplex_tuples) {
    report.mismatches.push_back(detail::describe_tuple_set_difference(
        "simplex tuples", report.realized_simplex_tuples,
        report.predicate_simplex_tuples));
  }

  std::set<ExponentTuple> polytope_realized = realized;
  for (const ExceptionalClass& cls : exceptional_classes) {
    if (dim < cls.min_dim) continue;
    const LatticePolytope witness = lattice_pyramid(
        exceptional_witness(cls.witness),
        static_cast<std::size_t>(dim - cls.min_dim));
    const ExponentTuple expected(
        std::vector<int>(cls.exponents.begin(), cls.exponents.end()), dim);
    // Computed by the counting path, independent of the simplex machinery.
    const ExponentTuple got = exponent_tuple(delta_vector(witness));
    ++report.witness_count;
    if (got != expected) {
      std::ostringstream os;
      os << "witness for " << expected << " realized " << got << " instead";
      report.mismatches.push_back(os.str());
      continue;
    }
    if (simplex_vol5(got)) {
      std::ostringstream os;
      os << "tuple " << got << " should be rejected by the simplex predicate";
      report.mismatches.push_back(os.str());
    }
    if (!polytope_vol5(got)) {
      std::ostringstream os;
      os << "tuple " << got << " should be accepted by the polytope predicate";
      report.mismatches.push_back(os.str());
    }
    polytope_realized.insert(got);
  }
  report.realized_polytope_tuples.assign(polytope_realized.begin(),
                                         polytope_realized.end());
  report.predicate_polytope_tuples =
      enumerate_admissible(dim, 5, PolytopeKind::any_polytope).tuples;
  if (report.realized_polytope_tuples != report.predicate_polytope_tuples) {
    report.mismatches.push_back(detail::describe_tuple_set_difference(
        "polytope tuples", report.realized_polytope_tuples,
        report.predicate_polytope_tuples));
  }
  return report;
}

/// Exhaustively verify, for a prime normalized volume p in dimension d,
/// that every enumerated simplex is either an empty simplex (its only
/// lattice points are its vertices, and then its lattice index is exactly
/// p) or spanning with a gap-free delta vector up to its degree.
inline ClassificationReport verify_spanning_theorem(
    int dim, const Int& p, int dim_limit = default_verify_dim_limit) {
  if (dim < 1 || dim > dim_limit) {
    throw std::invalid_argument(
        "dimension out of range for exhaustive verification");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("theorem requires a prime volume");
  }
  ClassificationReport report;
  report.dim = dim;
  report.volume = p;

  const std::size_t d = static_cast<std::size_t>(dim);
  std::set<Int> indices;
  std::vector<LatticePolytope> simplices = enumerate_hnf_simplices(d, p);
  report.simplex_count = simplices.size();
  for (const LatticePolytope& s : simplices) {
    const std::vector<Point> pts =
        enumerate_lattice_points(s, 1, ContainmentMode::boundary_inclusive);
    const Int index = lattice_index(pts);
    const bool empty = pts.size() == d + 1;
    if (empty) {
      ++report.empty_simplex_count;
      indices.insert(index);
      if (index != 1 && index != p) {
        std::ostringstream os;
        os << "empty simplex " << s << " has lattice index " << index
           << ", expected 1 or " << p;
        report.spanning_violations.push_back(os.str());
      }
    } else {
      ++report.nonempty_simplex_count;
      if (index != 1) {
        std::ostringstream os;
        os << "non-empty simplex " << s << " has lattice index " << index
           << ", expected spanning";
        report.spanning_violations.push_back(os.str());
      } else if (!spanning_positivity_check(simplex_delta_parallelepiped(s))) {
        std::ostringstream os;
        os << "spanning simplex " << s
           << " has a zero entry below its delta degree";
        report.spanning_violations.push_back(os.str());
      }
    }
  }
  report.empty_simplex_indices.assign(indices.begin(), indices.end());
  return report;
}

}  // namespace ehrhart
