#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/membership.hpp"

using namespace ehrhart;

namespace {

LatticePolytope unit_square() {
  return LatticePolytope(2, {{Int(0), Int(0)},
                             {Int(1), Int(0)},
                             {Int(0), Int(1)},
                             {Int(1), Int(1)}});
}

RatPoint rpt(std::vector<Rat> coords) { return coords; }

Point ipt(std::vector<long> coords) {
  Point p;
  for (long c : coords) p.emplace_back(c);
  return p;
}

}  // namespace

TEST_CASE("square membership: vertices, edges, center, outside",
          "[membership]") {
  const LatticePolytope sq = unit_square();
  CHECK(contains(sq, ipt({0, 0}), ContainmentMode::boundary_inclusive));
  CHECK(contains(sq, ipt({1, 1}), ContainmentMode::boundary_inclusive));
  CHECK_FALSE(contains(sq, ipt({0, 0}), ContainmentMode::relative_interior));
  CHECK_FALSE(contains(sq, ipt({2, 0}), ContainmentMode::boundary_inclusive));
  CHECK_FALSE(contains(sq, ipt({-1, 0}), ContainmentMode::boundary_inclusive));

  CHECK(contains(sq, rpt({Rat(1, 2), Rat(1, 2)}),
                 ContainmentMode::relative_interior));
  // Edge midpoint: inside the square, not in its interior.
  CHECK(contains(sq, rpt({Rat(1, 2), Rat(0)}),
                 ContainmentMode::boundary_inclusive));
  CHECK_FALSE(contains(sq, rpt({Rat(1, 2), Rat(0)}),
                       ContainmentMode::relative_interior));
  // Just outside by a sliver.
  CHECK_FALSE(contains(sq, rpt({Rat(1, 2), Rat(-1, 1000000)}),
                       ContainmentMode::boundary_inclusive));
  // Just inside by a sliver.
  CHECK(contains(sq, rpt({Rat(1, 2), Rat(1, 1000000)}),
                 ContainmentMode::relative_interior));
}

TEST_CASE("relative interior of a lower-dimensional hull", "[membership]") {
  // A segment inside the plane: relint is the open segment.
  const LatticePolytope seg(2, {{Int(0), Int(0)}, {Int(2), Int(2)}});
  CHECK(contains(seg, ipt({1, 1}), ContainmentMode::relative_interior));
  CHECK(contains(seg, ipt({0, 0}), ContainmentMode::boundary_inclusive));
  CHECK_FALSE(contains(seg, ipt({0, 0}), ContainmentMode::relative_interior));
  CHECK_FALSE(contains(seg, ipt({1, 0}), ContainmentMode::boundary_inclusive));
  CHECK(contains(seg, rpt({Rat(1, 2), Rat(1, 2)}),
                 ContainmentMode::boundary_inclusive));
}

TEST_CASE("a single point is its own relative interior", "[membership]") {
  const LatticePolytope pt(3, {{Int(4), Int(-1), Int(2)}});
  CHECK(contains(pt, ipt({4, -1, 2}), ContainmentMode::relative_interior));
  CHECK_FALSE(contains(pt, ipt({4, -1, 3}),
                       ContainmentMode::boundary_inclusive));
}

TEST_CASE("the quadrilateral with one interior point", "[membership]") {
  const LatticePolytope p(2, {{Int(0), Int(0)},
                              {Int(1), Int(0)},
                              {Int(0), Int(1)},
                              {Int(2), Int(3)}});
  // All six lattice points of P.
  for (const auto& q : {ipt({0, 0}), ipt({1, 0}), ipt({0, 1}), ipt({1, 1}),
                        ipt({1, 2}), ipt({2, 3})}) {
    CHECK(contains(p, q, ContainmentMode::boundary_inclusive));
  }
  // Exactly one of them is interior.
  CHECK(contains(p, ipt({1, 1}), ContainmentMode::relative_interior));
  CHECK_FALSE(contains(p, ipt({1, 2}), ContainmentMode::relative_interior));
  CHECK_FALSE(contains(p, ipt({2, 2}), ContainmentMode::boundary_inclusive));
}

TEST_CASE("query dimension must match", "[membership]") {
  CHECK_THROWS_AS(contains(unit_square(), ipt({1, 2, 3}),
                           ContainmentMode::boundary_inclusive),
                  std::invalid_argument);
}

TEST_CASE("membership agrees with barycentric coordinates on random"
          " simplices",
          "[membership]") {
  std::mt19937 rng(987);
  std::uniform_int_distribution<int> coord(-3, 3);
  int done = 0;
  while (done < 30) {
    const std::size_t d = 2 + static_cast<std::size_t>(done % 2);
    std::vector<Point> verts(d + 1, Point(d));
    for (auto& v : verts) {
      for (auto& c : v) c = coord(rng);
    }
    IntMatrix m(d, d);
    for (std::size_t k = 1; k <= d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        m.at(j, k - 1) = verts[k][j] - verts[0][j];
      }
    }
    Int det = m.determinant();
    if (det == 0) continue;
    ++done;
    IntMatrix adj = m.adjugate();
    if (det < 0) {
      det = -det;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) adj.at(i, j) = -adj.at(i, j);
      }
    }
    LatticePolytope simplex(d, verts);
    for (int probe = 0; probe < 20; ++probe) {
      Point q(d);
      for (auto& c : q) c = coord(rng);
      // Scaled barycentric coordinates decide membership directly.
      Point w(d);
      for (std::size_t j = 0; j < d; ++j) w[j] = q[j] - verts[0][j];
      const Point z = adj * w;
      Int zsum = 0;
      bool nonneg = true, positive = true;
      for (const Int& v : z) {
        zsum += v;
        nonneg = nonneg && v >= 0;
        positive = positive && v > 0;
      }
      const bool inside = nonneg && zsum <= det;
      const bool strict = positive && zsum < det;
      CHECK(contains(simplex, q, ContainmentMode::boundary_inclusive) ==
            inside);
      CHECK(contains(simplex, q, ContainmentMode::relative_interior) ==
            strict);
    }
  }
}
