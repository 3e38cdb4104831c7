#include <cstdio>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/constructions.hpp"
#include "ehrhart/io.hpp"

using namespace ehrhart;

TEST_CASE("reading the documented format", "[io]") {
  std::istringstream in("2 4\n0 0\n1 0\n0 1\n2 3\n");
  const LatticePolytope p = read_polytope(in);
  CHECK(p.ambient_dim() == 2);
  REQUIRE(p.vertex_count() == 4);
  CHECK(p.vertices()[3] == Point{Int(2), Int(3)});
}

TEST_CASE("whitespace layout is free-form", "[io]") {
  std::istringstream in("  1\t2\n\n  -7 \t 9 ");
  const LatticePolytope p = read_polytope(in);
  CHECK(p.ambient_dim() == 1);
  CHECK(p.vertices()[0] == Point{Int(-7)});
  CHECK(p.vertices()[1] == Point{Int(9)});
}

TEST_CASE("writing produces the canonical layout", "[io]") {
  std::ostringstream out;
  write_polytope(out, exceptional_witness(1));
  CHECK(out.str() == "2 4\n0 0\n1 0\n0 1\n2 3\n");
}

TEST_CASE("write then read round-trips exactly", "[io]") {
  const std::vector<LatticePolytope> corpus{
      exceptional_witness(1), exceptional_witness(2), exceptional_witness(3),
      standard_simplex(4),
      LatticePolytope(2, {{Int(-1000000000000), Int(3)},
                          {Int(7), Int(-2)},
                          {Int(0), Int(999999999999)}})};
  for (const LatticePolytope& p : corpus) {
    std::ostringstream out;
    write_polytope(out, p);
    std::istringstream in(out.str());
    const LatticePolytope q = read_polytope(in);
    CHECK(q.ambient_dim() == p.ambient_dim());
    CHECK(q.vertices() == p.vertices());
  }
}

TEST_CASE("file round-trip", "[io]") {
  const std::string path = "io_roundtrip_test.poly";
  write_polytope_file(path, exceptional_witness(2));
  const LatticePolytope q = read_polytope_file(path);
  CHECK(q.vertices() == exceptional_witness(2).vertices());
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_polytope_file(path), ParseError);
}

TEST_CASE("malformed input is rejected with a parse error", "[io]") {
  auto rejects = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_polytope(in), ParseError);
  };
  rejects("");                          // empty input
  rejects("2");                         // missing vertex count
  rejects("x 3\n0 0\n1 0\n0 1\n");      // non-numeric dimension
  rejects("0 3\n");                     // dimension out of range
  rejects("-2 3\n");                    // negative dimension
  rejects("2 0\n");                     // vertex count out of range
  rejects("2 3\n0 0\n1 0\n");           // too few coordinates
  rejects("2 2\n0 0\n1 O\n");           // letter O is not a digit
  rejects("2 2\n0 0\n1 0\n7\n");        // trailing content
  rejects("2 2\n0 0\n0 0\n");           // duplicate vertex
  rejects("1 2\n0\n1.5\n");             // decimal point
  rejects("1 2\n0\n+\n");               // sign without digits
  rejects("2000000 1\n0\n");            // dimension above the cap

  std::istringstream with_message("2 2\n0 0\n1 0\n7\n");
  CHECK_THROWS_WITH(read_polytope(with_message),
                    Catch::Matchers::ContainsSubstring("trailing content"));
}

TEST_CASE("signed coordinates parse", "[io]") {
  std::istringstream in("1 2\n-5\n+7\n");
  const LatticePolytope p = read_polytope(in);
  CHECK(p.vertices()[0] == Point{Int(-5)});
  CHECK(p.vertices()[1] == Point{Int(7)});
}
