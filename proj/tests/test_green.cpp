#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "planeauto/green.hpp"
#include "planeauto/parse.hpp"
#include "test_support.hpp"

using namespace planeauto;
using namespace planeauto::testsupport;

namespace {

HenonFactor factor_of(const FieldSpecPtr& s, const Rat& a,
                      const std::string& p) {
  return HenonFactor{FieldElement(s, a), parse_poly(s, p)};
}

PolyMap word_map(const std::vector<HenonFactor>& fs) {
  PolyMap acc = fs.front().to_polymap();
  for (std::size_t i = 1; i < fs.size(); ++i)
    acc = compose_maps(acc, fs[i].to_polymap());
  return acc;
}

}  // namespace

TEST_CASE("green function vanishes at fixed points and grows at infinity") {
  auto s = FieldSpec::rationals();
  std::vector<HenonFactor> fs = {factor_of(s, 1, "x^2 - 1")};
  GreenKernel k(fs);

  // Fixed points of (y, x + y^2 - 1) are (1, 1) and (-1, -1).
  for (cplx z : {cplx(1, 0), cplx(-1, 0)}) {
    GreenEstimate e = k.plus(z, z);
    REQUIRE(!e.escaped);
    REQUIRE(e.value == 0.0);
    REQUIRE(e.error_bound < 1e-30);
    GreenEstimate em = k.minus(z, z);
    REQUIRE(!em.escaped);
    REQUIRE(em.value == 0.0);
  }

  // Far out along the escaping sector G+ tracks log |x|.
  GreenEstimate big = k.plus(cplx(1e8, 0), cplx(3, 0));
  REQUIRE(big.escaped);
  double dev = k.c_dev_plus() / (k.degree() - 1.0) + big.error_bound;
  REQUIRE(std::fabs(big.value - std::log(1e8)) <= dev + 1e-9);
}

TEST_CASE("forward functional equation holds to the reported bounds") {
  auto s = FieldSpec::rationals();
  std::vector<std::vector<HenonFactor>> words = {
      {factor_of(s, 1, "x^2 - 1")},
      {factor_of(s, Rat(-1, 2), "x^3 + x")},
      {factor_of(s, 1, "x^2 + 1"), factor_of(s, 2, "x^3 - x")},
  };
  for (const auto& fs : words) {
    GreenKernel k(fs);
    PolyMap H = word_map(fs);
    double d = k.degree();
    auto rng = make_rng(606u);
    std::uniform_real_distribution<double> box(-3.0, 3.0);
    int escaped_seen = 0, bounded_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
      cplx z1(box(rng), box(rng) * 0.1), z2(box(rng), 0.0);
      auto [w1, w2] = H.eval_complex(z1, z2);
      GreenEstimate gz = k.plus(z1, z2);
      GreenEstimate gw = k.plus(w1, w2);
      double tol = gw.error_bound + d * gz.error_bound + 1e-9;
      REQUIRE(std::fabs(gw.value - d * gz.value) <= tol);
      (gz.escaped ? escaped_seen : bounded_seen)++;
    }
    REQUIRE(escaped_seen > 0);  // the sample must exercise escape
  }
}

TEST_CASE("backward green function satisfies its functional equation") {
  auto s = FieldSpec::rationals();
  std::vector<HenonFactor> fs = {factor_of(s, 1, "x^2 - 1")};
  GreenKernel k(fs);
  PolyMap H = word_map(fs);
  double d = k.degree();
  auto rng = make_rng(707u);
  std::uniform_real_distribution<double> box(-4.0, 4.0);
  int nontrivial = 0;
  for (int trial = 0; trial < 80; ++trial) {
    cplx z1(box(rng), 0.0), z2(box(rng) * 1e4, box(rng));
    auto [w1, w2] = H.eval_complex(z1, z2);
    GreenEstimate gz = k.minus(z1, z2);
    GreenEstimate gw = k.minus(w1, w2);
    double tol = gw.error_bound + gz.error_bound / d + 1e-9;
    REQUIRE(std::fabs(gw.value - gz.value / d) <= tol);
    if (gz.value > 1.0) ++nontrivial;
  }
  REQUIRE(nontrivial > 0);
}

TEST_CASE("estimates refine monotonically and stay nested") {
  auto s = FieldSpec::rationals();
  GreenKernel k({factor_of(s, 1, "x^2 - 1")});
  cplx z1(3, 0), z2(0, 0);
  GreenEstimate ref = k.plus(z1, z2, {200, 0.0});
  double prev_err = 1e300;
  for (long budget : {1L, 2L, 3L, 5L, 10L, 50L}) {
    GreenEstimate e = k.plus(z1, z2, {budget, 0.0});
    REQUIRE(e.escaped);
    REQUIRE(e.error_bound <= prev_err + 1e-15);
    REQUIRE(std::fabs(e.value - ref.value) <= e.error_bound + ref.error_bound);
    prev_err = e.error_bound;
  }
  REQUIRE(ref.error_bound < 1e-10);
}

TEST_CASE("escape radius parameter does not move the limit") {
  auto s = FieldSpec::rationals();
  GreenKernel k({factor_of(s, 1, "x^2 - 1")});
  cplx z1(2.5, 0.3), z2(-1, 0);
  GreenEstimate a = k.plus(z1, z2);
  GreenEstimate b = k.plus(z1, z2, {200, 50.0});
  REQUIRE(a.escaped);
  REQUIRE(b.escaped);
  REQUIRE(std::fabs(a.value - b.value) <= a.error_bound + b.error_bound);
}

TEST_CASE("growth bound and compactness window") {
  auto s = FieldSpec::rationals();
  std::vector<HenonFactor> fs = {factor_of(s, 1, "x^2 + x - 1"),
                                 factor_of(s, Rat(1, 2), "x^2 - 2")};
  GreenKernel k(fs);
  double C = k.criterion_constant();
  auto rng = make_rng(808u);
  std::uniform_real_distribution<double> mag(6.0, 9.0);
  std::uniform_real_distribution<double> ang(0.0, 6.28318);
  for (int trial = 0; trial < 100; ++trial) {
    double rho = std::pow(10.0, mag(rng));
    double th = ang(rng), ph = ang(rng);
    cplx z1 = rho * std::cos(th) * std::exp(cplx(0, ph));
    cplx z2 = rho * std::sin(th) * std::exp(cplx(0, -ph));
    if (std::max(std::abs(z1), std::abs(z2)) < k.escape_radius()) continue;
    GreenEstimate gp = k.plus(z1, z2);
    GreenEstimate gm = k.minus(z1, z2);
    double lognorm =
        0.5 * std::log(std::norm(z1) + std::norm(z2));
    double big = std::max(gp.value, gm.value);
    REQUIRE(std::fabs(big - lognorm) <=
            C + gp.error_bound + gm.error_bound + 1e-9);
    // Global upper bound for G+ alone.
    REQUIRE(gp.value <= lognorm + k.c_upper_plus() + gp.error_bound + 1e-9);
  }
}

TEST_CASE("green kernel works over an extension field") {
  auto s = FieldSpec::extension({-2, 0, 1});
  std::vector<HenonFactor> fs = {
      HenonFactor{FieldElement::one(s), parse_poly(s, "t*x^2 + 1")}};
  GreenKernel k(fs);
  PolyMap H = word_map(fs);
  double d = k.degree();
  cplx z1(2.0, 0.1), z2(0.5, 0);
  auto [w1, w2] = H.eval_complex(z1, z2);
  GreenEstimate gz = k.plus(z1, z2);
  GreenEstimate gw = k.plus(w1, w2);
  REQUIRE(gz.escaped);
  REQUIRE(std::fabs(gw.value - d * gz.value) <=
          gw.error_bound + d * gz.error_bound + 1e-9);
}

TEST_CASE("raster slices are deterministic and capped") {
  auto s = FieldSpec::rationals();
  GreenKernel k({factor_of(s, 1, "x^2 - 1")});
  ChartSpec chart{cplx(0, 0), cplx(0, 0), cplx(1, 0), cplx(0, 0),
                  cplx(0, 0), cplx(1, 0), 3.0};
  RasterResult a = raster_slice(k, chart, 17, 13);
  REQUIRE(a.nx == 17);
  REQUIRE(a.ny == 13);
  REQUIRE(a.values.size() == 17u * 13u);
  REQUIRE(a.g_max > 0.0);
  // Corner (s, t) = (3, 3) maps to the point (3, 3).
  GreenEstimate corner = k.plus(cplx(3, 0), cplx(3, 0));
  REQUIRE(a.values.back() == corner.value);
  RasterResult b = raster_slice(k, chart, 17, 13);
  REQUIRE(a.values == b.values);

  ChartSpec bad = chart;
  bad.r = -1.0;
  REQUIRE_THROWS_MATCHES(
      raster_slice(k, bad, 8, 8), error,
      Catch::Matchers::Predicate<error>([](const error& e) {
        return e.code() == errc::invalid_radius;
      }));
  REQUIRE_THROWS_MATCHES(
      raster_slice(k, chart, 9000, 4), error,
      Catch::Matchers::Predicate<error>([](const error& e) {
        return e.code() == errc::resource_cap;
      }));
}
