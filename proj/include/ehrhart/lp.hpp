#pragma once

// Exact linear programming.
//
// A dense two-phase primal simplex over arbitrary-precision integers.  The
// tableau is stored fraction-free: the true rational tableau is T / D for an
// integer matrix T and a single positive denominator D, and every pivot
// keeps the entries integral (each entry is, up to sign, a minor of the
// original system).  Bland's rule guarantees termination.  No floating
// point, no rounding, no tolerances.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "ehrhart/arith.hpp"

namespace ehrhart {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat objective;              // valid when status == optimal
  std::vector<Rat> solution;  // valid when status == optimal
};

/// Exact minimum and maximum of an objective over a feasible region.
struct LpRange {
  LpStatus status = LpStatus::infeasible;  // never 'unbounded' both ways
  Rat lo;
  Rat hi;
};

namespace detail {

// maximize c.x subject to A x = b, x >= 0, over exact integers.
class IntegerSimplex {
 public:
  IntegerSimplex(const std::vector<std::vector<Int>>& a,
                 const std::vector<Int>& b)
      : n_(a.empty() ? 0 : a[0].size()), r0_(a.size()) {
    if (a.empty() || n_ == 0) {
      throw std::invalid_argument("lp needs at least one row and column");
    }
    if (b.size() != r0_) {
      throw std::invalid_argument("lp row count mismatch");
    }
    width_ = 1 + n_ + r0_;  // [rhs | structural | artificial]
    rows_.reserve(r0_);
    for (std::size_t i = 0; i < r0_; ++i) {
      if (a[i].size() != n_) {
        throw std::invalid_argument("lp column count mismatch");
      }
      std::vector<Int> row(width_);
      const bool flip = b[i] < 0;
      row[0] = flip ? Int(-b[i]) : b[i];
      for (std::size_t j = 0; j < n_; ++j) {
        row[1 + j] = flip ? Int(-a[i][j]) : a[i][j];
      }
      row[1 + n_ + i] = 1;  // artificial basis column, after sign cleanup
      rows_.push_back(std::move(row));
      basis_.push_back(1 + n_ + i);
    }
    obj_.assign(width_, Int(0));
    denom_ = 1;
  }

  /// Phase 1: drive the artificial variables to zero.  Returns false when
  /// the system A x = b, x >= 0 is infeasible.
  bool phase1() {
    // Reduced costs for maximizing -(sum of artificials) with the
    // artificial basis: the column sums of the tableau.
    for (std::size_t j = 0; j < width_; ++j) {
      Int sum = 0;
      for (const auto& row : rows_) sum += row[j];
      obj_[j] = std::move(sum);
    }
    for (std::size_t j = 1 + n_; j < width_; ++j) {
      obj_[j] -= denom_;  // c_j = -1 for artificial columns
    }
    run(/*allow_artificial=*/true);
    if (obj_[0] != 0) return false;  // optimum of phase 1 is below zero

    // Pivot any artificial variables out of the basis; rows that cannot be
    // pivoted are redundant constraints and are dropped.
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] <= n_) {
        ++i;
        continue;
      }
      std::size_t enter = 0;
      for (std::size_t j = 1; j <= n_; ++j) {
        if (rows_[i][j] != 0) {
          enter = j;
          break;
        }
      }
      if (enter == 0) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        pivot(i, enter);  // degenerate pivot: the row's rhs is zero
        ++i;
      }
    }
    return true;
  }

  /// Install a fresh objective (structural coefficients only) and derive
  /// its reduced costs over the current basis.
  void set_objective(const std::vector<Int>& c) {
    if (c.size() != n_) {
      throw std::invalid_argument("lp objective size mismatch");
    }
    cost_ = c;
    for (std::size_t j = 0; j < width_; ++j) {
      Int v = (j >= 1 && j <= n_) ? Int(denom_ * c[j - 1]) : Int(0);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Int& cb = basic_cost(i);
        if (cb != 0) v -= cb * rows_[i][j];
      }
      obj_[j] = std::move(v);
    }
  }

  /// Phase 2.  Returns false when the objective is unbounded above.
  bool maximize() { return run(/*allow_artificial=*/false); }

  std::vector<Rat> solution() const {
    std::vector<Rat> x(n_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] <= n_) {
        x[basis_[i] - 1] = Rat(rows_[i][0], denom_);
      }
    }
    return x;
  }

  Rat objective_value() const {
    std::vector<Rat> x = solution();
    Rat z = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (cost_[j] != 0) z += Rat(cost_[j]) * x[j];
    }
    return z;
  }

 private:
  const Int& basic_cost(std::size_t i) const {
    static const Int zero = 0;
    return basis_[i] <= n_ ? cost_[basis_[i] - 1] : zero;
  }

  // Bland's rule: entering variable of smallest index with positive reduced
  // cost; leaving row by exact minimum ratio, ties broken by smallest basic
  // variable index.  Returns false on unboundedness.
  bool run(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? width_ : n_ + 1;
    for (;;) {
      std::size_t enter = 0;
      for (std::size_t j = 1; j < limit; ++j) {
        if (obj_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == 0) return true;  // optimal

      std::size_t leave = rows_.size();
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        if (leave == rows_.size()) {
          leave = i;
          continue;
        }
        // Compare rhs_i / a_i with rhs_leave / a_leave exactly.
        const Int lhs = rows_[i][0] * rows_[leave][enter];
        const Int rhs = rows_[leave][0] * rows_[i][enter];
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) {
          leave = i;
        }
      }
      if (leave == rows_.size()) return false;  // unbounded direction
      pivot(leave, enter);
    }
  }

  // Integer-preserving Gauss-Jordan step: row p is left untouched, every
  // other row (objective included) is updated by the two-term minor formula
  // and divided exactly by the old denominator; the pivot entry becomes the
  // new denominator.
  void pivot(std::size_t p, std::size_t q) {
    const Int piv = rows_[p][q];
    auto update = [&](std::vector<Int>& row) {
      const Int factor = row[q];
      if (factor == 0) {
        if (denom_ != 1) {
          for (Int& v : row) {
            if (v != 0) v = (v * piv) / denom_;
          }
        } else {
          for (Int& v : row) {
            if (v != 0) v *= piv;
          }
        }
        return;
      }
      for (std::size_t j = 0; j < width_; ++j) {
        row[j] = (row[j] * piv - factor * rows_[p][j]) / denom_;
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != p) update(rows_[i]);
    }
    update(obj_);
    denom_ = piv;
    basis_[p] = q;
    if (denom_ < 0) {  // keep the shared denominator positive
      denom_ = -denom_;
      for (auto& row : rows_) {
        for (Int& v : row) v = -v;
      }
      for (Int& v : obj_) v = -v;
    }
  }

  std::size_t n_;      // structural variables
  std::size_t r0_;     // original rows
  std::size_t width_;  // 1 + n + r0
  std::vector<std::vector<Int>> rows_;
  std::vector<Int> obj_;
  std::vector<std::size_t> basis_;
  std::vector<Int> cost_;
  Int denom_;
};

}  // namespace detail

/// maximize c.x subject to A x = b, x >= 0, all data integer.
inline LpResult lp_maximize(const std::vector<std::vector<Int>>& a,
                            const std::vector<Int>& b,
                            const std::vector<Int>& c) {
  detail::IntegerSimplex simplex(a, b);
  if (!simplex.phase1()) return LpResult{LpStatus::infeasible, Rat(0), {}};
  simplex.set_objective(c);
  if (!simplex.maximize()) return LpResult{LpStatus::unbounded, Rat(0), {}};
  return LpResult{LpStatus::optimal, simplex.objective_value(),
                  simplex.solution()};
}

/// maximize c.x subject to A x = b, x >= 0, over exact rationals.  Each row
/// and the objective are cleared of denominators; the optimum is exact.
inline LpResult lp_maximize(const std::vector<std::vector<Rat>>& a,
                            const std::vector<Rat>& b,
                            const std::vector<Rat>& c) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const std::size_t r = a.size();
  std::vector<std::vector<Int>> ai(r);
  std::vector<Int> bi(r);
  for (std::size_t i = 0; i < r; ++i) {
    Int scale = denominator(b[i]);
    for (const Rat& v : a[i]) {
      scale = boost::integer::lcm(scale, Int(denominator(v)));
    }
    ai[i].reserve(a[i].size());
    for (const Rat& v : a[i]) {
      ai[i].push_back(Int(numerator(v)) * (scale / Int(denominator(v))));
    }
    bi[i] = Int(numerator(b[i])) * (scale / Int(denominator(b[i])));
  }
  Int cscale = 1;
  for (const Rat& v : c) {
    cscale = boost::integer::lcm(cscale, Int(denominator(v)));
  }
  std::vector<Int> ci;
  ci.reserve(c.size());
  for (const Rat& v : c) {
    ci.push_back(Int(numerator(v)) * (cscale / Int(denominator(v))));
  }
  LpResult res = lp_maximize(ai, bi, ci);
  if (res.status == LpStatus::optimal) res.objective /= Rat(cscale);
  return res;
}

/// Exact [min, max] of c.x over {x >= 0 : A x = b}.  Solves one phase 1 and
/// two phase 2 passes on the same tableau.
inline LpRange lp_range(const std::vector<std::vector<Int>>& a,
                        const std::vector<Int>& b,
                        const std::vector<Int>& c) {
  detail::IntegerSimplex simplex(a, b);
  if (!simplex.phase1()) return LpRange{LpStatus::infeasible, Rat(0), Rat(0)};
  simplex.set_objective(c);
  if (!simplex.maximize()) {
    return LpRange{LpStatus::unbounded, Rat(0), Rat(0)};
  }
  LpRange range{LpStatus::optimal, Rat(0), simplex.objective_value()};
  std::vector<Int> neg(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) neg[j] = -c[j];
  simplex.set_objective(neg);
  if (!simplex.maximize()) {
    return LpRange{LpStatus::unbounded, Rat(0), Rat(0)};
  }
  range.lo = -simplex.objective_value();
  return range;
}

}  // namespace ehrhart
