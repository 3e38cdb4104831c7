// A short tour of the library: counts, polynomials, delta vectors, pyramid
// invariance, and one exhaustive verification run in the plane.

#include <iostream>

#include "ehrhart/ehrhart.hpp"

using namespace ehrhart;

int main() {
  // A quadrilateral of normalized volume 5 in the plane.
  const LatticePolytope p(2, {{Int(0), Int(0)},
                              {Int(1), Int(0)},
                              {Int(0), Int(1)},
                              {Int(2), Int(3)}});

  std::cout << "polytope: " << p << "\n";
  for (int n = 0; n <= 3; ++n) {
    std::cout << "  points in " << n << "P: "
              << count_lattice_points(p, n, ContainmentMode::boundary_inclusive)
              << "\n";
  }

  const EhrhartPolynomial poly = ehrhart_polynomial(p);
  std::cout << "counting polynomial coefficients (ascending):";
  for (const Rat& c : poly.coefficients()) std::cout << " " << c;
  std::cout << "\n";

  const DeltaVector dv = delta_vector(p);
  std::cout << "delta vector: " << dv << "  (normalized volume " << dv.sum()
            << ")\n";

  // Pyramids preserve the delta vector, entry for entry.
  const LatticePolytope pyr = lattice_pyramid(p);
  std::cout << "delta of the pyramid: " << delta_vector(pyr) << "\n";

  // The plane, exhaustively: every volume-5 simplex delta vector, and the
  // one exceptional non-simplex class.
  const ClassificationReport report = verify_main_theorem(2);
  std::cout << "verification in dimension 2: "
            << (report.ok() ? "confirmed" : "FAILED") << " over "
            << report.simplex_count << " simplices\n";
  for (const ExponentTuple& t : report.realized_polytope_tuples) {
    std::cout << "  realizable tuple " << t
              << (simplex_vol5(t) ? "" : "  (needs a non-simplex)") << "\n";
  }
  return report.ok() ? 0 : 1;
}
