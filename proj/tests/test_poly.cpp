#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "planeauto/parse.hpp"
#include "planeauto/poly.hpp"

using namespace planeauto;

namespace {

PlanePoly random_poly(const FieldSpecPtr& s, std::mt19937_64& rng,
                      long maxdeg, int maxterms) {
  std::uniform_int_distribution<long> e(0, maxdeg);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<std::size_t> k(0, s->degree() - 1);
  PlanePoly p(s);
  for (int t = 0; t < maxterms; ++t) {
    std::vector<Rat> c(s->degree(), Rat(0));
    c[k(rng)] = Rat(num(rng), den(rng));
    p.add_term(e(rng), e(rng), FieldElement(s, std::move(c)));
  }
  return p;
}

FieldElement rnd_point(const FieldSpecPtr& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  return FieldElement(s, Rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("expansion oracle: (x+y)^2 and a mixed product") {
  auto q = FieldSpec::rationals();
  PlanePoly x = PlanePoly::var_x(q), y = PlanePoly::var_y(q);
  PlanePoly sq = (x + y) * (x + y);
  PlanePoly expect(q);
  expect.add_term(2, 0, FieldElement::one(q));
  expect.add_term(1, 1, FieldElement(q, Rat(2)));
  expect.add_term(0, 2, FieldElement::one(q));
  CHECK(sq == expect);
  CHECK(sq.degree() == 2);

  // (x + 2y)(x - 2y) = x^2 - 4y^2
  PlanePoly two(q);
  two.add_term(0, 1, FieldElement(q, Rat(2)));
  PlanePoly prod = (x + two) * (x - two);
  CHECK(prod.coefficient(2, 0).as_rational() == 1);
  CHECK(prod.coefficient(0, 2).as_rational() == -4);
  CHECK(prod.coefficient(1, 1).is_zero());
}

TEST_CASE("degree bookkeeping and leading form") {
  auto q = FieldSpec::rationals();
  PlanePoly p = parse_poly(q, "1/2*x^2*y + x*y + 3");
  CHECK(p.degree() == 3);
  CHECK(p.degree_x() == 2);
  CHECK(p.degree_y() == 1);
  CHECK(p.leading_form() == parse_poly(q, "1/2*x^2*y"));
  CHECK(PlanePoly::zero(q).degree() == -1);
  CHECK((p - p).degree() == -1);
}

TEST_CASE("substitution oracle: compose then evaluate equals evaluate then") {
  auto q = FieldSpec::rationals();
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    PlanePoly p = random_poly(q, rng, 4, 5);
    PlanePoly u = random_poly(q, rng, 2, 4);
    PlanePoly v = random_poly(q, rng, 2, 4);
    PlanePoly comp = p.compose2(u, v);
    FieldElement a = rnd_point(q, rng), b = rnd_point(q, rng);
    CHECK(comp.eval_exact(a, b) ==
          p.eval_exact(u.eval_exact(a, b), v.eval_exact(a, b)));
  }
}

TEST_CASE("composition is compatible with products and sums") {
  auto q = FieldSpec::rationals();
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    PlanePoly p = random_poly(q, rng, 3, 4);
    PlanePoly r = random_poly(q, rng, 3, 4);
    PlanePoly u = random_poly(q, rng, 2, 3);
    PlanePoly v = random_poly(q, rng, 2, 3);
    CHECK((p * r).compose2(u, v) == p.compose2(u, v) * r.compose2(u, v));
    CHECK((p + r).compose2(u, v) == p.compose2(u, v) + r.compose2(u, v));
  }
}

TEST_CASE("printer and parser round-trip on random polynomials") {
  auto q = FieldSpec::rationals();
  auto s = FieldSpec::extension({-2, 0, 1});
  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 120; ++trial) {
    PlanePoly p = random_poly(q, rng, 6, 7);
    CHECK(parse_poly(q, p.to_string()) == p);
  }
  for (int trial = 0; trial < 120; ++trial) {
    PlanePoly p = random_poly(s, rng, 5, 6);
    CHECK(parse_poly(s, p.to_string()) == p);
  }
  // Multi-coordinate coefficients print parenthesized and still round-trip.
  PlanePoly p(s);
  std::vector<Rat> c = {Rat(1), Rat(2)};
  p.add_term(1, 1, FieldElement(s, c));
  p.add_term(0, 0, FieldElement(s, {Rat(-1, 2), Rat(0)}));
  CHECK(p.to_string() == "(2*t + 1)*x*y - 1/2");
  CHECK(parse_poly(s, p.to_string()) == p);
}

TEST_CASE("parser accepts the documented grammar") {
  auto q = FieldSpec::rationals();
  CHECK(parse_poly(q, "(x+y)^2 - x^2 - y^2") == parse_poly(q, "2*x*y"));
  CHECK(parse_poly(q, "1/2*x^2*y + 3") ==
        parse_poly(q, "3 + x*x*y*1/2"));
  CHECK(parse_poly(q, "-x") == -PlanePoly::var_x(q));
  CHECK(parse_poly(q, " 2 ").constant_term().as_rational() == 2);
  auto s = FieldSpec::extension({-2, 0, 1});
  CHECK(parse_poly(s, "t*y + 1/2*x^2*y").to_string() == "1/2*x^2*y + t*y");
}

TEST_CASE("parser rejections carry positions") {
  auto q = FieldSpec::rationals();
  auto check_throws = [&](const std::string& text, errc code) {
    try {
      parse_poly(q, text);
      FAIL("expected rejection of: " << text);
    } catch (const error& e) {
      CHECK(e.code() == code);
    }
  };
  check_throws("", errc::syntax_error);
  check_throws("x +", errc::syntax_error);
  check_throws("2x", errc::syntax_error);          // implicit product
  check_throws("x ^ y", errc::syntax_error);       // nonliteral exponent
  check_throws("1/0", errc::syntax_error);
  check_throws("x) ", errc::syntax_error);
  check_throws("(x", errc::syntax_error);
  check_throws("t + x", errc::syntax_error);       // no generator over Q
  check_throws("z", errc::syntax_error);
  check_throws("x^1000001", errc::exponent_cap);

  try {
    parse_poly(q, "x + ?");
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
  }
}

TEST_CASE("exponent cap enforced by arithmetic too") {
  auto q = FieldSpec::rationals();
  PlanePoly x500k = parse_poly(q, "x^500000");
  CHECK_THROWS_AS(x500k * x500k * x500k, error);
  CHECK_NOTHROW(parse_poly(q, "x^1000000"));
}

TEST_CASE("complex evaluation overflows to non-finite values, no trap") {
  auto q = FieldSpec::rationals();
  PlanePoly p = parse_poly(q, "x^10");
  cplx v = p.eval_complex(cplx(1e200, 0), cplx(0, 0));
  CHECK(!std::isfinite(std::abs(v)));
}

TEST_CASE("derivatives") {
  auto q = FieldSpec::rationals();
  PlanePoly p = parse_poly(q, "x^3*y + 2*y^2");
  CHECK(p.derivative_x() == parse_poly(q, "3*x^2*y"));
  CHECK(p.derivative_y() == parse_poly(q, "x^3 + 4*y"));
}
