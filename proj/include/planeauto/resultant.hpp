#ifndef PLANEAUTO_RESULTANT_HPP
#define PLANEAUTO_RESULTANT_HPP

/// Exact resultants of bivariate polynomials, eliminating one variable.
///
/// Polynomials are viewed in (F[x])[y] and run through the subresultant
/// pseudo-remainder sequence, which keeps every division exact in F[x]
/// while avoiding the coefficient blowup of naive pseudo-remainders.

#include <vector>

#include "planeauto/poly.hpp"

namespace planeauto {
namespace detail {

/// Coefficient vector in y; entries are polynomials in x only.
using YVec = std::vector<PlanePoly>;

inline void yvec_trim(YVec& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

inline long yvec_deg(const YVec& v) { return long(v.size()) - 1; }

inline YVec to_yvec(const PlanePoly& p) {
  const FieldSpecPtr& s = p.spec();
  YVec v(std::size_t(std::max<long>(p.degree_y(), 0)) + 1, PlanePoly::zero(s));
  for (const auto& [m, c] : p.terms())
    v[std::size_t(m.j)] = v[std::size_t(m.j)] + PlanePoly::monomial(s, m.i, 0, c);
  yvec_trim(v);
  return v;
}

/// Exact division of x-only polynomials; nonzero remainder is an internal
/// invariant violation of the subresultant recurrences.
inline PlanePoly div_exact_x(const PlanePoly& a, const PlanePoly& b) {
  const FieldSpecPtr& s = a.spec();
  if (b.is_zero()) throw error(errc::division_by_zero, "resultant divisor");
  if (a.is_zero()) return PlanePoly::zero(s);
  long db = b.degree_x();
  FieldElement lb = b.coefficient(db, 0);
  PlanePoly rem = a, quot = PlanePoly::zero(s);
  while (!rem.is_zero() && rem.degree_x() >= db) {
    long k = rem.degree_x() - db;
    FieldElement c = rem.coefficient(rem.degree_x(), 0) / lb;
    PlanePoly t = PlanePoly::monomial(s, k, 0, c);
    quot = quot + t;
    rem = rem - t * b;
  }
  if (!rem.is_zero())
    throw error(errc::ill_conditioned, "inexact division in resultant chain");
  return quot;
}

inline PlanePoly pow_x(const PlanePoly& a, long e) { return a.pow(e); }

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A reduced modulo B.
inline YVec prem_y(YVec A, const YVec& B) {
  const PlanePoly& lb = B.back();
  long e = yvec_deg(A) - yvec_deg(B) + 1;
  while (yvec_deg(A) >= yvec_deg(B)) {
    long k = yvec_deg(A) - yvec_deg(B);
    PlanePoly la = A.back();
    // A <- lb * A - la * y^k * B
    YVec next(A.size(), PlanePoly::zero(la.spec()));
    for (std::size_t i = 0; i < A.size(); ++i) next[i] = A[i] * lb;
    for (std::size_t i = 0; i < B.size(); ++i)
      next[i + std::size_t(k)] = next[i + std::size_t(k)] - la * B[i];
    next.pop_back();  // leading term cancels identically
    yvec_trim(next);
    A = std::move(next);
    --e;
  }
  if (e > 0) {
    PlanePoly f = pow_x(lb, e);
    for (auto& c : A) c = c * f;
  }
  return A;
}

}  // namespace detail

/// Resultant of p and q with respect to y; the result involves x only.
/// Zero iff p and q share a common factor of positive y-degree (or one of
/// them is zero).
inline PlanePoly resultant_y(const PlanePoly& p, const PlanePoly& q) {
  require_same_spec(*p.spec(), *q.spec(), "resultant");
  const FieldSpecPtr& s = p.spec();
  if (p.is_zero() || q.is_zero()) return PlanePoly::zero(s);

  detail::YVec A = detail::to_yvec(p), B = detail::to_yvec(q);
  int sign = 1;
  if (detail::yvec_deg(A) < detail::yvec_deg(B)) {
    if ((detail::yvec_deg(A) & 1) && (detail::yvec_deg(B) & 1)) sign = -sign;
    std::swap(A, B);
  }
  if (detail::yvec_deg(A) == 0) return PlanePoly::constant(s, Rat(1));
  if (detail::yvec_deg(B) == 0)
    return detail::pow_x(B[0], detail::yvec_deg(A));

  PlanePoly g = PlanePoly::constant(s, Rat(1));
  PlanePoly h = PlanePoly::constant(s, Rat(1));
  while (true) {
    long da = detail::yvec_deg(A), db = detail::yvec_deg(B);
    long delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    detail::YVec R = detail::prem_y(A, B);
    if (R.empty()) return PlanePoly::zero(s);  // common factor in y
    PlanePoly divisor = g * detail::pow_x(h, delta);
    for (auto& c : R) c = detail::div_exact_x(c, divisor);
    A = std::move(B);
    B = std::move(R);
    g = A.back();
    // h <- g^delta * h^(1-delta), kept exact in F[x].
    if (delta == 1) h = g;
    else if (delta > 1) h = detail::div_exact_x(detail::pow_x(g, delta),
                                                detail::pow_x(h, delta - 1));
    if (detail::yvec_deg(B) <= 0) break;
  }
  // B is a nonzero constant in y; Res = sign * B^d / h^(d-1), d = deg A.
  long d = detail::yvec_deg(A);
  PlanePoly num = detail::pow_x(B[0], d);
  PlanePoly res = (d >= 2)
                      ? detail::div_exact_x(num, detail::pow_x(h, d - 1))
                      : num;
  if (sign < 0) res = -res;
  return res;
}

/// Resultant with respect to x; the result involves y only.
inline PlanePoly resultant_x(const PlanePoly& p, const PlanePoly& q) {
  const FieldSpecPtr& s = p.spec();
  PlanePoly px = PlanePoly::var_x(s), py = PlanePoly::var_y(s);
  PlanePoly pt = p.compose2(py, px), qt = q.compose2(py, px);
  PlanePoly r = resultant_y(pt, qt);
  return r.compose2(py, px);  // swap back: result was in "x" slot
}

/// Resultant of univariate polynomials over the field, by the Euclidean
/// recursion; serves as an independent cross-check of the subresultant
/// chain under random evaluation.
inline FieldElement resultant_univariate(std::vector<FieldElement> a,
                                         std::vector<FieldElement> b) {
  auto trim = [](std::vector<FieldElement>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  trim(b);
  if (a.empty() || b.empty())
    throw error(errc::precondition, "resultant of the zero polynomial");
  const FieldSpecPtr& s = a.front().spec();
  FieldElement acc = FieldElement::one(s);
  int sign = 1;
  while (true) {
    long da = long(a.size()) - 1, db = long(b.size()) - 1;
    if (da < db) {
      if ((da & 1) && (db & 1)) sign = -sign;
      std::swap(a, b);
      continue;
    }
    if (db == 0) {
      acc = acc * b[0].pow(da);
      break;
    }
    // r = a mod b over the field.
    std::vector<FieldElement> r = a;
    while (long(r.size()) - 1 >= db) {
      FieldElement c = r.back() / b.back();
      long k = long(r.size()) - 1 - db;
      for (long i = 0; i <= db; ++i)
        r[std::size_t(i + k)] = r[std::size_t(i + k)] - c * b[std::size_t(i)];
      r.pop_back();
      trim(r);
      if (r.empty()) break;
    }
    if (r.empty()) return FieldElement::zero(s);
    long dr = long(r.size()) - 1;
    acc = acc * b.back().pow(da - dr);
    if ((da & 1) && (db & 1)) sign = -sign;
    a = std::move(b);
    b = std::move(r);
  }
  if (sign < 0) acc = -acc;
  return acc;
}

}  // namespace planeauto

#endif  // PLANEAUTO_RESULTANT_HPP
