#pragma once

// Exact scalar arithmetic used throughout the library.
//
// Every quantity is an arbitrary-precision integer or rational; no floating
// point is used anywhere.  Rationals are kept in lowest terms with a positive
// denominator by the underlying representation.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ehrhart {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A lattice point: a vector of exact integers.
using Point = std::vector<Int>;

/// A rational point, used for membership queries at non-lattice positions.
using RatPoint = std::vector<Rat>;

/// Thrown when an input is mathematically degenerate for the requested
/// operation: a singular matrix, a point set that is not full-dimensional,
/// a polytope that is not a simplex where one is required, and so on.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Floor division a/b for b > 0 (round toward minus infinity).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (q * b != a && a < 0) --q;
  return q;
}

/// Ceiling division a/b for b > 0 (round toward plus infinity).
inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && a > 0) ++q;
  return q;
}

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  return floor_div(Int(boost::multiprecision::numerator(r)),
                   Int(boost::multiprecision::denominator(r)));
}

/// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) {
  return ceil_div(Int(boost::multiprecision::numerator(r)),
                  Int(boost::multiprecision::denominator(r)));
}

inline Int factorial(std::size_t n) {
  Int f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= Int(i);
  return f;
}

/// Binomial coefficient C(n, k) with the usual convention C(n, k) = 0 for
/// k > n.
inline Int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result *= Int(n - i);
    result /= Int(i + 1);  // exact at every step
  }
  return result;
}

/// Deterministic primality test by trial division.  Intended for the small
/// moduli that appear as normalized volumes; not a general-purpose prime
/// test for cryptographic sizes.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

}  // namespace ehrhart
