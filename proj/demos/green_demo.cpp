// Evaluate the forward and backward escape-rate functions of a Henon map,
// check the functional equation G(H z) = d G(z) at a sample point, and
// list the low-period orbits with their multiplier types.

#include <cstdio>
#include <iostream>

#include "planeauto/planeauto.hpp"

using namespace planeauto;

int main() {
  const FieldSpecPtr q = FieldSpec::rationals();
  const PolyMap f =
      PolyMap(parse_poly(q, "y"), parse_poly(q, "x + y^2 - 3"));

  const ClassificationResult c = classify(f);
  std::cout << "f = (y, x + y^2 - 3), lambda1 = " << c.lambda1 << "\n";

  // The kernel computes the Green functions of the Henon normal form;
  // the Green function of f itself is this one composed with the
  // classification's conjugator.
  const GreenKernel kernel(*c.henon);
  const PolyMap H = c.henon->to_polymap();
  std::cout << "normal form H = (" << H.p().to_string() << ", "
            << H.q().to_string() << ")\n"
            << "certified escape radius R0 = " << kernel.escape_radius()
            << ", growth constant C' = " << kernel.criterion_constant()
            << "\n\n";

  const cplx pts[3][2] = {{{4.0, 0.0}, {1.0, 0.0}},
                          {{0.1, 0.2}, {-0.3, 0.0}},
                          {{-2.0, 1.0}, {5.0, -1.0}}};
  std::cout << "point                          G+          G-\n";
  for (const auto& p : pts) {
    const GreenEstimate gp = kernel.plus(p[0], p[1]);
    const GreenEstimate gm = kernel.minus(p[0], p[1]);
    std::printf("(%5.2f%+5.2fi, %5.2f%+5.2fi)   %-11.6g %-11.6g\n",
                p[0].real(), p[0].imag(), p[1].real(), p[1].imag(), gp.value,
                gm.value);
  }

  // Functional equation: G+(H(z)) = d * G+(z) up to the error bounds.
  const cplx x0(3.5, 0.25), y0(1.0, -0.5);
  const auto [hx, hy] = H.eval_complex(x0, y0);
  const GreenEstimate g0 = kernel.plus(x0, y0);
  const GreenEstimate g1 = kernel.plus(hx, hy);
  std::cout << "\nfunctional equation at a sample point:\n"
            << "  2 * G+(z)  = " << 2.0 * g0.value << "\n"
            << "  G+(H(z))   = " << g1.value << "\n"
            << "  difference = " << std::abs(g1.value - 2.0 * g0.value)
            << "  (bounds " << 2.0 * g0.error_bound + g1.error_bound << ")\n";

  std::cout << "\norbits of period <= 2:\n";
  for (const PeriodicOrbit& orb : periodic_points(f, 2)) {
    std::cout << "  period " << orb.period << " " << orb.type << " at ("
              << orb.points[0].first << ", " << orb.points[0].second
              << "), multipliers " << orb.multiplier1 << ", "
              << orb.multiplier2 << ", residual " << orb.residual << "\n";
  }
  return 0;
}
