#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/analysis.hpp"
#include "ehrhart/constructions.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/search.hpp"
#include "support/oracles.hpp"

using namespace ehrhart;

namespace {

DeltaVector dv(std::vector<long> entries) {
  std::vector<Int> e(entries.begin(), entries.end());
  return DeltaVector(std::move(e));
}

LatticePolytope quadrilateral5() {
  return LatticePolytope(2, {{Int(0), Int(0)},
                             {Int(1), Int(0)},
                             {Int(0), Int(1)},
                             {Int(2), Int(3)}});
}

LatticePolytope five_vertex_vol5() {
  return LatticePolytope(3, {{Int(0), Int(0), Int(0)},
                             {Int(1), Int(0), Int(0)},
                             {Int(0), Int(1), Int(0)},
                             {Int(0), Int(0), Int(1)},
                             {Int(1), Int(1), Int(3)}});
}

LatticePolytope empty_simplex5() {
  return LatticePolytope(3, {{Int(0), Int(0), Int(0)},
                             {Int(1), Int(0), Int(0)},
                             {Int(0), Int(1), Int(0)},
                             {Int(1), Int(1), Int(5)}});
}

}  // namespace

TEST_CASE("delta vector type validates and reports", "[delta]") {
  CHECK_THROWS_AS(DeltaVector(std::vector<Int>{}), std::invalid_argument);
  CHECK_THROWS_AS(dv({1, -1}), std::invalid_argument);
  const DeltaVector v = dv({1, 3, 1, 0});
  CHECK(v.dim() == 3);
  CHECK(v.degree() == 2);
  CHECK(v.sum() == 5);
  CHECK(v[1] == 3);
  CHECK(dv({0, 0}).degree() == 0);
  CHECK(dv({1, 3, 1}) < dv({1, 4, 0}));
  std::ostringstream os;
  os << dv({1, 3, 1});
  CHECK(os.str() == "(1, 3, 1)");
}

TEST_CASE("known delta vectors", "[delta]") {
  CHECK(delta_vector(quadrilateral5()) == dv({1, 3, 1}));
  CHECK(delta_vector(five_vertex_vol5()) == dv({1, 1, 3, 0}));
  CHECK(delta_vector(exceptional_witness(3)) == dv({1, 1, 1, 2, 0, 0}));
  CHECK(delta_vector(standard_simplex(4)) == dv({1, 0, 0, 0, 0}));
  CHECK(delta_vector(LatticePolytope(2, {{Int(0), Int(0)},
                                         {Int(1), Int(0)},
                                         {Int(0), Int(1)},
                                         {Int(1), Int(1)}})) == dv({1, 1, 0}));
  CHECK(delta_vector(LatticePolytope(1, {{Int(0)}, {Int(5)}})) == dv({1, 4}));
}

TEST_CASE("unit cube delta counts descents", "[delta]") {
  std::vector<Point> verts;
  for (int x = 0; x <= 1; ++x) {
    for (int y = 0; y <= 1; ++y) {
      for (int z = 0; z <= 1; ++z) {
        verts.push_back({Int(x), Int(y), Int(z)});
      }
    }
  }
  CHECK(delta_vector(LatticePolytope(3, verts)) == dv({1, 4, 1, 0}));
}

TEST_CASE("normalized volume agrees across both definitions", "[delta]") {
  CHECK(normalized_volume(quadrilateral5()) == 5);
  CHECK(normalized_volume(five_vertex_vol5()) == 5);
  CHECK(normalized_volume(standard_simplex(5)) == 1);
  CHECK(normalized_volume(empty_simplex5()) == 5);
}

TEST_CASE("degenerate hulls are rejected", "[delta]") {
  const LatticePolytope seg(2, {{Int(0), Int(0)}, {Int(2), Int(2)}});
  CHECK_THROWS_AS(delta_vector(seg), DegenerateInput);
  CHECK_THROWS_AS(normalized_volume(seg), DegenerateInput);
}

TEST_CASE("parallelepiped route on known simplices", "[delta]") {
  CHECK(simplex_delta_parallelepiped(empty_simplex5()) == dv({1, 0, 4, 0}));
  CHECK(simplex_delta_parallelepiped(standard_simplex(3)) ==
        dv({1, 0, 0, 0}));
  CHECK(simplex_delta_parallelepiped(LatticePolytope(
            1, {{Int(0)}, {Int(5)}})) == dv({1, 4}));
  // A reflexive simplex: conv{e_1, e_2, -e_1-e_2} has one interior point.
  CHECK(simplex_delta_parallelepiped(LatticePolytope(
            2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}})) ==
        dv({1, 1, 1}));
}

TEST_CASE("parallelepiped route requires a simplex", "[delta]") {
  CHECK_THROWS_AS(simplex_delta_parallelepiped(five_vertex_vol5()),
                  DegenerateInput);
  CHECK_THROWS_WITH(simplex_delta_parallelepiped(five_vertex_vol5()),
                    Catch::Matchers::ContainsSubstring("simplex required"));
  // Right vertex count but degenerate: a flat triangle in the plane.
  CHECK_THROWS_AS(simplex_delta_parallelepiped(LatticePolytope(
                      2, {{Int(0), Int(0)}, {Int(1), Int(1)},
                          {Int(2), Int(2)}})),
                  DegenerateInput);
}

TEST_CASE("both routes agree on every small simplex", "[delta]") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (long n = 1; n <= 4; ++n) {
      for (const auto& simplex : enumerate_hnf_simplices(d, Int(n))) {
        const DeltaVector direct = simplex_delta_parallelepiped(simplex);
        const DeltaVector interpolated = delta_vector(simplex);
        INFO("simplex " << simplex);
        CHECK(direct == interpolated);
        CHECK(direct.sum() == n);
      }
    }
  }
}

TEST_CASE("every computed delta vector satisfies the elementary properties",
          "[delta]") {
  std::vector<std::pair<LatticePolytope, Int>> corpus;  // polytope, volume
  corpus.emplace_back(quadrilateral5(), 5);
  corpus.emplace_back(five_vertex_vol5(), 5);
  corpus.emplace_back(exceptional_witness(3), 5);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (long n = 1; n <= 5; ++n) {
      for (auto& s : enumerate_hnf_simplices(d, Int(n))) {
        corpus.emplace_back(std::move(s), Int(n));
      }
    }
  }
  for (const auto& [p, volume] : corpus) {
    const DeltaVector dvec = delta_vector(p);
    const Int points =
        count_lattice_points(p, 1, ContainmentMode::boundary_inclusive);
    const Int interior =
        count_lattice_points(p, 1, ContainmentMode::relative_interior);
    const BasicPropertyReport report =
        basic_property_report(dvec, points, interior, volume);
    INFO("polytope " << p << " with delta " << dvec);
    CHECK(report.all_ok());
    CHECK(stanley_check(dvec));
    CHECK(hibi_check(dvec));
  }
}

TEST_CASE("delta is the numerator of the counting series", "[delta]") {
  const std::vector<LatticePolytope> corpus{
      quadrilateral5(), five_vertex_vol5(), standard_simplex(3),
      empty_simplex5(),
      LatticePolytope(2, {{Int(0), Int(0)},
                          {Int(1), Int(0)},
                          {Int(0), Int(1)},
                          {Int(1), Int(1)}})};
  for (const auto& p : corpus) {
    const DeltaVector delta = delta_vector(p);
    const std::vector<Int> series = test_support::truncated_delta_series(p);
    // The first d+1 coefficients are the delta entries; everything after
    // must vanish, confirming the counting function is a degree-d polynomial.
    for (std::size_t i = 0; i < series.size(); ++i) {
      INFO("coefficient " << i << " of " << p);
      if (i <= delta.dim()) {
        CHECK(series[i] == delta[i]);
      } else {
        CHECK(series[i] == 0);
      }
    }
  }
}

TEST_CASE("pyramids preserve the delta vector", "[delta]") {
  const std::vector<LatticePolytope> corpus{quadrilateral5(),
                                            five_vertex_vol5(),
                                            empty_simplex5()};
  for (const auto& p : corpus) {
    const DeltaVector base = delta_vector(p);
    const LatticePolytope pyr = lattice_pyramid(p);
    const DeltaVector lifted = delta_vector(pyr);
    REQUIRE(lifted.dim() == base.dim() + 1);
    for (std::size_t i = 0; i <= base.dim(); ++i) {
      CHECK(lifted[i] == base[i]);
    }
    CHECK(lifted[base.dim() + 1] == 0);
  }
}
