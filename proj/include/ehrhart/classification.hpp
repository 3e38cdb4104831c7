#pragma once

// Complete realizability classifications for small normalized volume.
//
// For volume up to 3 (dimension >= 3) the elementary inequalities are the
// whole story.  For volumes 4 and 5 the classification is phrased on
// exponent tuples: closed-form predicates decide which tuples arise as
// delta vectors of simplices, and for volume 5 exactly three exceptional
// tuples arise only from non-simplex polytopes, each from a fixed minimum
// dimension on.  The predicates here are the closed forms; the search
// module verifies them against brute-force enumeration.

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ehrhart/analysis.hpp"
#include "ehrhart/delta.hpp"

namespace ehrhart {

/// Realizability of a delta vector of normalized volume <= 3 in dimension
/// d >= 3: delta_1 >= delta_d together with the two families of
/// cumulative-sum inequalities.
inline bool admissible_vol3(const DeltaVector& dv) {
  if (dv.dim() < 3) {
    throw std::invalid_argument("classification stated for dimension >= 3");
  }
  if (dv[0] != 1) {
    throw std::invalid_argument("classification requires delta_0 = 1");
  }
  if (dv.sum() > 3) {
    throw std::invalid_argument("classification covers volume at most 3");
  }
  return dv[1] >= dv[dv.dim()] && stanley_check(dv) && hibi_check(dv);
}

/// Realizability of the exponent tuple (i1 <= i2 <= i3) of a volume-4 delta
/// vector in dimension d.  Admissible tuples are realizable by simplices,
/// so the same predicate answers both the simplex and the general case.
inline bool admissible_vol4(const ExponentTuple& t) {
  if (t.exponents.size() != 3) {
    throw std::invalid_argument("malformed tuple: volume 4 needs 3 exponents");
  }
  const int i1 = t.exponents[0];
  const int i2 = t.exponents[1];
  const int i3 = t.exponents[2];
  const int d = t.dim;
  return i3 <= i1 + i2 && i1 + i3 <= d + 1 && 2 * i2 <= d + 1 &&
         (2 * i2 <= i1 + i3 || i2 + i3 <= d + 1);
}

/// Realizability of the exponent tuple (i1 <= i2 <= i3 <= i4) of a
/// volume-5 delta vector by a simplex in dimension d.
inline bool simplex_vol5(const ExponentTuple& t) {
  if (t.exponents.size() != 4) {
    throw std::invalid_argument("malformed tuple: volume 5 needs 4 exponents");
  }
  const int i1 = t.exponents[0];
  const int i2 = t.exponents[1];
  const int i3 = t.exponents[2];
  const int i4 = t.exponents[3];
  const int d = t.dim;
  return i1 + i4 == i2 + i3 && i2 + i3 <= d + 1 && 2 * i1 >= i2 &&
         i1 + i2 >= i3 && i1 + i3 >= i4 && 2 * i2 >= i4;
}

/// The three volume-5 tuples realizable only by non-simplex polytopes,
/// with the smallest dimension where each occurs and the index (1..3) of
/// the witness construction that realizes it there.
struct ExceptionalClass {
  std::array<int, 4> exponents;
  int min_dim;
  int witness;
};

inline constexpr std::array<ExceptionalClass, 3> exceptional_classes{{
    {{1, 1, 1, 2}, 2, 1},
    {{1, 2, 2, 2}, 3, 2},
    {{1, 2, 3, 3}, 5, 3},
}};

/// Realizability of a volume-5 exponent tuple by some lattice polytope in
/// dimension d: either the simplex predicate holds, or the tuple is one of
/// the three exceptional classes at or above its minimum dimension.
inline bool polytope_vol5(const ExponentTuple& t) {
  if (simplex_vol5(t)) return true;
  for (const ExceptionalClass& cls : exceptional_classes) {
    if (t.dim >= cls.min_dim &&
        std::equal(cls.exponents.begin(), cls.exponents.end(),
                   t.exponents.begin(), t.exponents.end())) {
      return true;
    }
  }
  return false;
}

enum class PolytopeKind { simplex, any_polytope };

/// All admissible exponent tuples of a fixed volume and dimension, sorted
/// lexicographically.
struct AdmissibleSet {
  int dim = 0;
  int volume = 0;
  PolytopeKind kind = PolytopeKind::simplex;
  std::vector<ExponentTuple> tuples;
};

/// Enumerate the admissible exponent tuples for volume 4 or 5 in dimension
/// d, for simplices or for arbitrary polytopes.
inline AdmissibleSet enumerate_admissible(int dim, int volume,
                                          PolytopeKind kind) {
  if (dim < 1) {
    throw std::invalid_argument("dimension must be positive");
  }
  if (volume != 4 && volume != 5) {
    throw std::invalid_argument("unsupported volume: classification covers 4 and 5");
  }
  AdmissibleSet result{dim, volume, kind, {}};
  const std::size_t len = static_cast<std::size_t>(volume) - 1;
  std::vector<int> tuple(len, 1);
  for (;;) {
    ExponentTuple t(tuple, dim);
    const bool keep =
        volume == 4
            ? admissible_vol4(t)
            : (kind == PolytopeKind::simplex ? simplex_vol5(t)
                                             : polytope_vol5(t));
    if (keep) result.tuples.push_back(std::move(t));

    // Next nondecreasing tuple over [1, dim], lexicographically.
    std::size_t k = len;
    while (k > 0 && tuple[k - 1] == dim) --k;
    if (k == 0) break;
    ++tuple[k - 1];
    for (std::size_t j = k; j < len; ++j) tuple[j] = tuple[k - 1];
  }
  return result;
}

}  // namespace ehrhart
