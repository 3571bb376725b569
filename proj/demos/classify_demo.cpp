// Decompose a plane automorphism into an alternating word, classify it,
// and print the Henon normal form of the loxodromic case.

#include <iostream>

#include "planeauto/planeauto.hpp"

using namespace planeauto;

namespace {

void show(const char* label, const PolyMap& m) {
  std::cout << label << " = (" << m.p().to_string() << ", "
            << m.q().to_string() << ")\n";
}

void report(const PolyMap& f) {
  show("f", f);

  JungWord w = jung_decompose(f);
  std::cout << "  alternating word length " << w.factors.size() << ":\n";
  for (const Factor& fac : w.factors) {
    const PolyMap fm = factor_to_polymap(fac);
    std::cout << "    " << (is_affine_factor(fac) ? "affine    " : "elementary")
              << "  (" << fm.p().to_string() << ", " << fm.q().to_string()
              << ")\n";
  }

  const ClassificationResult c = classify(f);
  if (c.cls == MapClass::elliptic) {
    std::cout << "  elliptic (lambda1 = 1); conjugate into a standard "
                 "subgroup by\n";
    show("    phi", c.elliptic->conjugator);
  } else {
    std::cout << "  loxodromic, lambda1 = " << c.lambda1 << "\n";
    std::cout << "  Henon word (y a + p(x), x) with:\n";
    for (const HenonFactor& h : c.henon->factors)
      std::cout << "    a = " << h.a.to_string()
                << ",  p = " << h.p.to_string() << "\n";
  }
  std::cout << "\n";
}

}  // namespace

int main() {
  const FieldSpecPtr q = FieldSpec::rationals();

  // The basic quadratic Henon map.
  report(PolyMap(parse_poly(q, "y"), parse_poly(q, "x + y^2")));

  // A conjugated composition: same dynamics, scrambled coordinates.
  const PolyMap h =
      PolyMap(parse_poly(q, "y"), parse_poly(q, "x + y^3 - 2*y"));
  const PolyMap t =
      PolyMap(parse_poly(q, "x + y^2"), parse_poly(q, "y"));
  report(compose_maps(compose_maps(t, h), invert_map(t)));

  // A triangular map: elliptic, no degree growth.
  report(PolyMap(parse_poly(q, "2*x + y^2 - 1"), parse_poly(q, "y + 3")));

  return 0;
}
