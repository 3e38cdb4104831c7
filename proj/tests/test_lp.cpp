#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/lp.hpp"

using namespace ehrhart;

namespace {

std::vector<std::vector<Int>> rows(std::vector<std::vector<long>> data) {
  std::vector<std::vector<Int>> out;
  for (auto& r : data) out.emplace_back(r.begin(), r.end());
  return out;
}

std::vector<Int> vec(std::vector<long> data) {
  return std::vector<Int>(data.begin(), data.end());
}

}  // namespace

TEST_CASE("a one-constraint maximum on the unit simplex", "[lp]") {
  // max x1  s.t.  x1 + x2 = 1
  const LpResult res = lp_maximize(rows({{1, 1}}), vec({1}), vec({1, 0}));
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.objective == 1);
  CHECK(res.solution == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("an equality system with a unique solution", "[lp]") {
  // x1 + 2 x2 = 3, 3 x1 + x2 = 4 has the single solution (1, 1).
  const LpResult res =
      lp_maximize(rows({{1, 2}, {3, 1}}), vec({3, 4}), vec({7, -2}));
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.objective == 5);
  CHECK(res.solution == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("negative right-hand sides are handled by row negation", "[lp]") {
  // -x1 - 2 x2 = -3, -3 x1 - x2 = -4: same system as above.
  const LpResult res =
      lp_maximize(rows({{-1, -2}, {-3, -1}}), vec({-3, -4}), vec({1, 1}));
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.objective == 2);
}

TEST_CASE("infeasible systems are detected", "[lp]") {
  // x1 + x2 = -1 with x >= 0 is impossible.
  CHECK(lp_maximize(rows({{1, 1}}), vec({-1}), vec({1, 0})).status ==
        LpStatus::infeasible);
  // x1 = 1 and x1 = 2 simultaneously.
  CHECK(lp_maximize(rows({{1}, {1}}), vec({1, 2}), vec({1})).status ==
        LpStatus::infeasible);
}

TEST_CASE("unbounded directions are detected", "[lp]") {
  // max x1  s.t.  x1 - x2 = 0: the ray (t, t) is feasible for all t.
  CHECK(lp_maximize(rows({{1, -1}}), vec({0}), vec({1, 0})).status ==
        LpStatus::unbounded);
}

TEST_CASE("redundant equalities are dropped in phase one", "[lp]") {
  const LpResult res = lp_maximize(rows({{1, 1}, {1, 1}, {2, 2}}),
                                   vec({1, 1, 2}), vec({0, 3}));
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.objective == 3);
  CHECK(res.solution == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("fractional optima are exact", "[lp]") {
  // max x2  s.t.  2 x1 + 3 x2 = 2, x1 + 3 x3 = 1.
  // Best: x1 = 0, x2 = 2/3, x3 = 1/3.
  const LpResult res = lp_maximize(rows({{2, 3, 0}, {1, 0, 3}}), vec({2, 1}),
                                   vec({0, 1, 0}));
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.objective == Rat(2, 3));
  CHECK(res.solution == std::vector<Rat>{Rat(0), Rat(2, 3), Rat(1, 3)});
}

TEST_CASE("rational data is scaled row by row", "[lp]") {
  // max x  s.t.  (1/2) x = 1/3  ->  x = 2/3.
  std::vector<std::vector<Rat>> a{{Rat(1, 2)}};
  std::vector<Rat> b{Rat(1, 3)};
  std::vector<Rat> c{Rat(3)};
  const LpResult res = lp_maximize(a, b, c);
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.objective == 2);  // 3 * (2/3)
  CHECK(res.solution == std::vector<Rat>{Rat(2, 3)});
}

TEST_CASE("lp_range brackets a coordinate of a segment", "[lp]") {
  // Convex combinations of 1 and 4: lambda weights of the two endpoints.
  // Range of the value over the segment is [1, 4].
  const LpRange range =
      lp_range(rows({{1, 1}}), vec({1}), vec({1, 4}));
  REQUIRE(range.status == LpStatus::optimal);
  CHECK(range.lo == 1);
  CHECK(range.hi == 4);
}

TEST_CASE("lp_range reports infeasibility", "[lp]") {
  const LpRange range = lp_range(rows({{1, 1}}), vec({-2}), vec({1, 0}));
  CHECK(range.status == LpStatus::infeasible);
}

TEST_CASE("feasible random systems optimize to feasible optima", "[lp]") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> value(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t r = 1 + trial % 2;
    // Plant a feasible point xhat >= 0 and read b off as A xhat.
    std::vector<Int> xhat(n);
    for (auto& x : xhat) x = value(rng);
    std::vector<std::vector<Int>> a(r, std::vector<Int>(n));
    std::vector<Int> b(r, Int(0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = entry(rng);
        b[i] += a[i][j] * xhat[j];
      }
    }
    std::vector<Int> c(n);
    for (auto& x : c) x = entry(rng);

    const LpResult res = lp_maximize(a, b, c);
    REQUIRE(res.status != LpStatus::infeasible);
    if (res.status != LpStatus::optimal) continue;

    // The optimum is feasible and at least as good as the planted point.
    Rat planted = 0;
    for (std::size_t j = 0; j < n; ++j) planted += Rat(c[j]) * Rat(xhat[j]);
    CHECK(res.objective >= planted);
    for (std::size_t i = 0; i < r; ++i) {
      Rat lhs = 0;
      for (std::size_t j = 0; j < n; ++j) {
        lhs += Rat(a[i][j]) * res.solution[j];
      }
      CHECK(lhs == Rat(b[i]));
    }
    for (const Rat& x : res.solution) CHECK(x >= 0);
  }
}

TEST_CASE("shape mismatches are rejected", "[lp]") {
  CHECK_THROWS_AS(lp_maximize(rows({{1, 1}}), vec({1, 2}), vec({1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(lp_maximize(rows({{1, 1}, {1}}), vec({1, 1}), vec({1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(lp_maximize(std::vector<std::vector<Int>>{}, vec({}),
                              vec({})),
                  std::invalid_argument);
}
