#pragma once

// Combinatorial predicates and reports on delta vectors: the classical
// linear inequalities, the exponent-tuple encoding used by the volume
// classifications, and the positivity profile implied by a spanning
// polytope.  Everything here is pure arithmetic on vectors, so the
// predicates can be probed on synthetic (possibly non-realizable) data.

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/delta.hpp"

namespace ehrhart {

/// Cumulative-sum inequalities bounding the low end of a delta vector by
/// its high end:  delta_0 + ... + delta_i <= delta_s + ... + delta_{s-i}
/// for 0 <= i <= floor(s/2), where s is the degree.
inline bool stanley_check(const DeltaVector& dv) {
  const std::size_t s = dv.degree();
  Int low = 0, high = 0;
  for (std::size_t i = 0; 2 * i <= s; ++i) {
    low += dv[i];
    high += dv[s - i];
    if (low > high) return false;
  }
  return true;
}

/// Cumulative-sum inequalities bounding the high end against the entries
/// just above delta_1:  delta_{d-1} + ... + delta_{d-i} <=
/// delta_2 + ... + delta_{i+1} for 1 <= i <= floor((d-1)/2).  Vacuous for
/// d <= 2.
inline bool hibi_check(const DeltaVector& dv) {
  const std::size_t d = dv.dim();
  if (d <= 2) return true;
  Int high = 0, low = 0;
  for (std::size_t i = 1; 2 * i <= d - 1; ++i) {
    high += dv[d - i];
    low += dv[i + 1];
    if (high > low) return false;
  }
  return true;
}

/// True when delta_i >= 1 for every 0 <= i <= degree, the positivity
/// profile of a spanning polytope's delta vector.
inline bool spanning_positivity_check(const DeltaVector& dv) {
  const std::size_t s = dv.degree();
  for (std::size_t i = 0; i <= s; ++i) {
    if (dv[i] < 1) return false;
  }
  return true;
}

/// Per-check outcome of the elementary realizability properties of a delta
/// vector against independently counted data.
struct BasicPropertyReport {
  bool constant_term_ok = false;   // delta_0 == 1
  bool linear_term_ok = false;     // delta_1 == |P cap Z^d| - (d+1)
  bool top_term_ok = false;        // delta_d == interior point count
  bool top_vs_linear_ok = false;   // delta_1 >= delta_d
  bool nonnegative_ok = false;     // all entries >= 0 (true by construction)
  bool lower_bound_ok = false;     // delta_d != 0 => delta_i >= delta_1
                                   //   for 1 <= i <= d-1
  bool volume_ok = true;           // sum == expected volume (when supplied)
  std::optional<std::size_t> offending_index;  // first failing entry, if any

  bool all_ok() const {
    return constant_term_ok && linear_term_ok && top_term_ok &&
           top_vs_linear_ok && nonnegative_ok && lower_bound_ok && volume_ok;
  }
};

/// Check the elementary properties of a delta vector of dimension d against
/// the point count of P, the interior point count of P, and (optionally)
/// an independently computed normalized volume.
inline BasicPropertyReport basic_property_report(
    const DeltaVector& dv, const Int& point_count, const Int& interior_count,
    const std::optional<Int>& expected_volume = std::nullopt) {
  const std::size_t d = dv.dim();
  BasicPropertyReport report;
  report.constant_term_ok = dv[0] == 1;
  const Int delta1 = d >= 1 ? dv[1] : Int(0);
  report.linear_term_ok = delta1 == point_count - Int(d + 1);
  report.top_term_ok = dv[d] == interior_count;
  report.top_vs_linear_ok = delta1 >= dv[d];
  report.nonnegative_ok = true;
  for (std::size_t i = 0; i <= d; ++i) {
    if (dv[i] < 0) {
      report.nonnegative_ok = false;
      if (!report.offending_index) report.offending_index = i;
      break;
    }
  }
  report.lower_bound_ok = true;
  if (d >= 1 && dv[d] != 0) {
    for (std::size_t i = 1; i + 1 <= d; ++i) {
      if (dv[i] < delta1) {
        report.lower_bound_ok = false;
        if (!report.offending_index) report.offending_index = i;
        break;
      }
    }
  }
  if (expected_volume) {
    report.volume_ok = dv.sum() == *expected_volume;
  }
  return report;
}

/// The multiset of indices of the nonzero entries of a delta vector with
/// delta_0 = 1, written as a nondecreasing tuple: index i appears delta_i
/// times.  A vector of normalized volume N yields N-1 exponents, each in
/// [1, d].  Tuples are ordered lexicographically.
struct ExponentTuple {
  std::vector<int> exponents;
  int dim = 0;

  ExponentTuple(std::vector<int> exps, int d) : exponents(std::move(exps)), dim(d) {
    if (dim < 1) {
      throw std::invalid_argument("malformed tuple: dimension must be positive");
    }
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      if (exponents[k] < 1 || exponents[k] > dim) {
        throw std::invalid_argument("malformed tuple: exponent out of [1, d]");
      }
      if (k > 0 && exponents[k] < exponents[k - 1]) {
        throw std::invalid_argument("malformed tuple: exponents must ascend");
      }
    }
  }

  auto operator<=>(const ExponentTuple&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const ExponentTuple& t) {
  os << "(";
  for (std::size_t i = 0; i < t.exponents.size(); ++i) {
    if (i > 0) os << ",";
    os << t.exponents[i];
  }
  return os << ")";
}

/// Encode a delta vector with delta_0 = 1 as its exponent tuple.
inline ExponentTuple exponent_tuple(const DeltaVector& dv) {
  if (dv[0] != 1) {
    throw std::invalid_argument("exponent tuple requires delta_0 = 1");
  }
  std::vector<int> exps;
  for (std::size_t i = 1; i <= dv.dim(); ++i) {
    if (dv[i] > 1000000) {
      throw std::invalid_argument("delta entry too large for an exponent tuple");
    }
    const long reps = static_cast<long>(dv[i]);
    for (long r = 0; r < reps; ++r) exps.push_back(static_cast<int>(i));
  }
  return ExponentTuple(std::move(exps), static_cast<int>(dv.dim()));
}

/// Decode an exponent tuple back into the delta vector it came from.
inline DeltaVector delta_from_exponents(const ExponentTuple& t) {
  std::vector<Int> entries(static_cast<std::size_t>(t.dim) + 1, Int(0));
  entries[0] = 1;
  for (int e : t.exponents) ++entries[static_cast<std::size_t>(e)];
  return DeltaVector(std::move(entries));
}

}  // namespace ehrhart
