#ifndef PLANEAUTO_AUTOMORPHISM_HPP
#define PLANEAUTO_AUTOMORPHISM_HPP

/// Plane polynomial automorphisms and their word calculus.
///
/// The automorphism group of the affine plane is generated by the affine
/// maps together with the elementary maps (x, y) -> (a x + p(y), b y + c),
/// and every automorphism factors as an alternating word in the two
/// subgroups; the overlap (lower-triangular affine maps) is canonically
/// absorbed into the right-hand neighbor.  Degree reduction against the
/// leading forms yields the factorization and doubles as the automorphism
/// decision procedure.  Cyclic reduction of the word separates elliptic
/// maps (dynamical degree 1) from loxodromic ones, and the loxodromic
/// reduced words are rewritten exactly, in the input field, into a
/// composition of degree-d factors (x, y) -> (a y + p(x), x), deg p >= 2.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "planeauto/errors.hpp"
#include "planeauto/poly.hpp"

namespace planeauto {

// ---------------------------------------------------------------------------
// PolyMap

/// A polynomial self-map of the plane, components (p, q).  Constant maps are
/// rejected; nothing else is assumed (being an automorphism is a property
/// that jung_decompose decides).
class PolyMap {
 public:
  PolyMap(PlanePoly p, PlanePoly q) : p_(std::move(p)), q_(std::move(q)) {
    require_same_spec(*p_.spec(), *q_.spec(), "map components");
    if (degree() < 1)
      throw error(errc::precondition, "constant maps are not admitted");
  }

  static PolyMap identity(const FieldSpecPtr& spec) {
    return PolyMap(PlanePoly::var_x(spec), PlanePoly::var_y(spec));
  }

  const FieldSpecPtr& spec() const { return p_.spec(); }
  const PlanePoly& p() const { return p_; }
  const PlanePoly& q() const { return q_; }

  long degree() const { return std::max(p_.degree(), q_.degree()); }

  bool is_identity() const {
    return p_ == PlanePoly::var_x(spec()) && q_ == PlanePoly::var_y(spec());
  }

  bool operator==(const PolyMap& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator!=(const PolyMap& o) const { return !(*this == o); }

  std::pair<FieldElement, FieldElement> eval_exact(const FieldElement& x,
                                                   const FieldElement& y) const {
    return {p_.eval_exact(x, y), q_.eval_exact(x, y)};
  }

  std::pair<cplx, cplx> eval_complex(cplx x, cplx y) const {
    return {p_.eval_complex(x, y), q_.eval_complex(x, y)};
  }

 private:
  PlanePoly p_, q_;
};

/// f o g, exact.
inline PolyMap compose_maps(const PolyMap& f, const PolyMap& g) {
  return PolyMap(f.p().compose2(g.p(), g.q()), f.q().compose2(g.p(), g.q()));
}

struct JacobianResult {
  PlanePoly det;
  bool constant_nonzero;
};

inline JacobianResult jacobian_det(const PolyMap& f) {
  PlanePoly det = f.p().derivative_x() * f.q().derivative_y() -
                  f.p().derivative_y() * f.q().derivative_x();
  return {det, det.is_constant() && !det.is_zero()};
}

// ---------------------------------------------------------------------------
// Word factors

/// Invertible affine map z -> M z + t.
struct AffineMap {
  FieldElement m11, m12, m21, m22, t1, t2;

  const FieldSpecPtr& spec() const { return m11.spec(); }

  static AffineMap identity(const FieldSpecPtr& s) {
    FieldElement one = FieldElement::one(s), zero = FieldElement::zero(s);
    return {one, zero, zero, one, zero, zero};
  }
  static AffineMap swap_xy(const FieldSpecPtr& s) {
    FieldElement one = FieldElement::one(s), zero = FieldElement::zero(s);
    return {zero, one, one, zero, zero, zero};
  }

  FieldElement det() const { return m11 * m22 - m12 * m21; }

  /// Member of the amalgamated intersection: no x term in the second slot.
  bool lower_triangular() const { return m21.is_zero(); }

  AffineMap inverse() const {
    FieldElement d = det();
    if (d.is_zero())
      throw error(errc::not_an_automorphism, "affine factor is singular");
    FieldElement i11 = m22 / d, i12 = -m12 / d, i21 = -m21 / d, i22 = m11 / d;
    return {i11, i12, i21, i22, -(i11 * t1 + i12 * t2),
            -(i21 * t1 + i22 * t2)};
  }

  AffineMap compose(const AffineMap& o) const {  // this o other
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22,
            m11 * o.t1 + m12 * o.t2 + t1, m21 * o.t1 + m22 * o.t2 + t2};
  }

  PolyMap to_polymap() const {
    const FieldSpecPtr& s = spec();
    PlanePoly x = PlanePoly::var_x(s), y = PlanePoly::var_y(s);
    return PolyMap(x * m11 + y * m12 + PlanePoly::constant(s, t1),
                   x * m21 + y * m22 + PlanePoly::constant(s, t2));
  }
};

/// Elementary map (x, y) -> (alpha x + p(y), beta y + gamma); alpha, beta
/// units, p univariate in y (any degree, including constants).
struct ElementaryMap {
  FieldElement alpha, beta, gamma;
  PlanePoly p;  // polynomial in y only

  const FieldSpecPtr& spec() const { return alpha.spec(); }

  static ElementaryMap make(FieldElement a, PlanePoly p_of_y, FieldElement b,
                            FieldElement g) {
    if (a.is_zero() || b.is_zero())
      throw error(errc::precondition, "elementary factor needs unit scalings");
    if (p_of_y.depends_on_x())
      throw error(errc::precondition, "elementary shift must depend on y only");
    return ElementaryMap{std::move(a), std::move(b), std::move(g),
                         std::move(p_of_y)};
  }

  /// Member of the amalgamated intersection: affine as a map.
  bool is_affine() const { return p.degree() <= 1; }

  ElementaryMap inverse() const {
    const FieldSpecPtr& s = spec();
    // (x, y) -> (x/alpha - p((y - gamma)/beta)/alpha, (y - gamma)/beta)
    PlanePoly ylin = PlanePoly::var_y(s) * beta.inverse() +
                     PlanePoly::constant(s, -(gamma / beta));
    PlanePoly pn = -(p.compose2(PlanePoly::var_x(s), ylin) * alpha.inverse());
    return ElementaryMap{alpha.inverse(), beta.inverse(), -(gamma / beta),
                         std::move(pn)};
  }

  ElementaryMap compose(const ElementaryMap& o) const {  // this o other
    const FieldSpecPtr& s = spec();
    PlanePoly ylin = PlanePoly::var_y(s) * o.beta +
                     PlanePoly::constant(s, o.gamma);
    PlanePoly pn = o.p * alpha + p.compose2(PlanePoly::var_x(s), ylin);
    return ElementaryMap{alpha * o.alpha, beta * o.beta,
                         beta * o.gamma + gamma, std::move(pn)};
  }

  PolyMap to_polymap() const {
    const FieldSpecPtr& s = spec();
    return PolyMap(PlanePoly::var_x(s) * alpha + p,
                   PlanePoly::var_y(s) * beta + PlanePoly::constant(s, gamma));
  }
};

using Factor = std::variant<AffineMap, ElementaryMap>;

inline bool is_affine_factor(const Factor& f) {
  return std::holds_alternative<AffineMap>(f);
}

/// Factors lying in both subgroups (lower-triangular affine maps).
inline bool is_intersection(const Factor& f) {
  if (const auto* a = std::get_if<AffineMap>(&f)) return a->lower_triangular();
  return std::get<ElementaryMap>(f).is_affine();
}

inline PolyMap factor_to_polymap(const Factor& f) {
  if (const auto* a = std::get_if<AffineMap>(&f)) return a->to_polymap();
  return std::get<ElementaryMap>(f).to_polymap();
}

inline const FieldSpecPtr& factor_spec(const Factor& f) {
  if (const auto* a = std::get_if<AffineMap>(&f)) return a->spec();
  return std::get<ElementaryMap>(f).spec();
}

/// Intersection factor viewed as affine (precondition: is_intersection or
/// already affine).
inline AffineMap as_affine(const Factor& f) {
  if (const auto* a = std::get_if<AffineMap>(&f)) return *a;
  const ElementaryMap& e = std::get<ElementaryMap>(f);
  if (!e.is_affine())
    throw error(errc::precondition, "factor is not affine");
  const FieldSpecPtr& s = e.spec();
  return AffineMap{e.alpha, e.p.coefficient(0, 1), FieldElement::zero(s),
                   e.beta, e.p.coefficient(0, 0), e.gamma};
}

/// Intersection factor viewed as elementary (precondition: is_intersection
/// or already elementary).
inline ElementaryMap as_elementary(const Factor& f) {
  if (const auto* e = std::get_if<ElementaryMap>(&f)) return *e;
  const AffineMap& a = std::get<AffineMap>(f);
  if (!a.lower_triangular())
    throw error(errc::precondition, "factor is not lower triangular");
  const FieldSpecPtr& s = a.spec();
  PlanePoly p = PlanePoly::var_y(s) * a.m12 + PlanePoly::constant(s, a.t1);
  return ElementaryMap{a.m11, a.m22, a.t2, std::move(p)};
}

inline Factor invert_factor(const Factor& f) {
  if (const auto* a = std::get_if<AffineMap>(&f)) return Factor(a->inverse());
  return Factor(std::get<ElementaryMap>(f).inverse());
}

/// Compose two factors when at least one lies in the intersection or both
/// share a type; the tag of the result follows the proper (non-overlap)
/// operand, defaulting to affine when both are in the overlap.
inline Factor compose_factors(const Factor& a, const Factor& b) {
  bool ia = is_intersection(a), ib = is_intersection(b);
  bool aff_a = is_affine_factor(a), aff_b = is_affine_factor(b);
  bool want_affine;
  if (ia && ib) want_affine = true;
  else if (ia) want_affine = aff_b;
  else if (ib) want_affine = aff_a;
  else if (aff_a == aff_b) want_affine = aff_a;
  else throw error(errc::precondition, "factors of different types");
  if (want_affine) return Factor(as_affine(a).compose(as_affine(b)));
  return Factor(as_elementary(a).compose(as_elementary(b)));
}

inline bool factors_mergeable(const Factor& a, const Factor& b) {
  return is_intersection(a) || is_intersection(b) ||
         is_affine_factor(a) == is_affine_factor(b);
}

// ---------------------------------------------------------------------------
// JungWord

/// Factorization f = factors[0] o factors[1] o ... o factors[r-1].
struct JungWord {
  FieldSpecPtr spec;
  std::vector<Factor> factors;

  PolyMap recompose() const {
    PolyMap acc = PolyMap::identity(spec);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      acc = compose_maps(factor_to_polymap(*it), acc);
    return acc;
  }

  /// Merge adjacent mergeable factors and absorb overlap factors into their
  /// right-hand neighbors until the word alternates.
  void normalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        if (factors_mergeable(factors[i], factors[i + 1])) {
          Factor merged = compose_factors(factors[i], factors[i + 1]);
          factors[i] = std::move(merged);
          factors.erase(factors.begin() + i + 1);
          changed = true;
          break;
        }
      }
    }
  }

  bool is_alternating() const {
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
      if (factors_mergeable(factors[i], factors[i + 1])) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Degree reduction

/// Factor f into an alternating word, or prove it is not an automorphism.
/// Works entirely within the input field.
inline JungWord jung_decompose(const PolyMap& f) {
  const FieldSpecPtr& s = f.spec();
  JacobianResult jac = jacobian_det(f);
  if (!jac.constant_nonzero)
    throw error(errc::not_an_automorphism,
                "Jacobian determinant is not a nonzero constant");

  PlanePoly p = f.p(), q = f.q();
  std::vector<Factor> pre;
  const PlanePoly x = PlanePoly::var_x(s), y = PlanePoly::var_y(s);

  while (std::max(p.degree(), q.degree()) > 1) {
    long d1 = p.degree(), d2 = q.degree();
    if (d1 < d2) {
      // Swap components through an affine transposition factor.
      pre.emplace_back(AffineMap::swap_xy(s));
      std::swap(p, q);
      std::swap(d1, d2);
    }
    if (d2 < 1)
      throw error(errc::not_an_automorphism,
                  "component degenerates to a constant during reduction");
    if (d1 % d2 != 0)
      throw error(errc::not_an_automorphism,
                  "component degrees fail the divisibility test");
    long k = d1 / d2;
    PlanePoly pf = p.leading_form(), qf = q.leading_form();
    PlanePoly qk = qf.pow(k);
    const auto& anchor = *qk.terms().rbegin();
    FieldElement c = pf.coefficient(anchor.first.i, anchor.first.j) /
                     anchor.second;
    if (c.is_zero() || pf != qk * c)
      throw error(errc::not_an_automorphism,
                  "leading forms are not proportional");
    p = p - q.pow(k) * c;
    if (p.degree() >= d1)
      throw error(errc::not_an_automorphism, "degree failed to drop");
    // Reduction used E = (x - c y^k, y) on the left; record its inverse.
    pre.emplace_back(ElementaryMap::make(
        FieldElement::one(s), PlanePoly::monomial(s, 0, k, c),
        FieldElement::one(s), FieldElement::zero(s)));
  }

  // Remaining affine part.
  if (p.degree_x() > 1 || p.degree_y() > 1 || q.degree_x() > 1 ||
      q.degree_y() > 1)
    throw error(errc::not_an_automorphism, "non-affine residue");
  AffineMap tail{p.coefficient(1, 0), p.coefficient(0, 1),
                 q.coefficient(1, 0), q.coefficient(0, 1),
                 p.coefficient(0, 0), q.coefficient(0, 0)};
  if (tail.det().is_zero())
    throw error(errc::not_an_automorphism, "affine residue is singular");
  pre.emplace_back(tail);

  JungWord w{s, std::move(pre)};
  w.normalize();
  return w;
}

/// Inverse through the factorization; factor inverses are closed-form.
inline PolyMap invert_map(const PolyMap& f) {
  JungWord w = jung_decompose(f);
  PolyMap acc = PolyMap::identity(f.spec());
  for (const Factor& fac : w.factors)
    acc = compose_maps(factor_to_polymap(invert_factor(fac)), acc);
  return acc;
}

// ---------------------------------------------------------------------------
// Henon form and classification

/// One factor (x, y) -> (a y + p(x), x) with deg p >= 2 and a a unit.
struct HenonFactor {
  FieldElement a;
  PlanePoly p;  // polynomial in x only

  PolyMap to_polymap() const {
    const FieldSpecPtr& s = a.spec();
    return PolyMap(PlanePoly::var_y(s) * a + p, PlanePoly::var_x(s));
  }
};

struct HenonForm {
  std::vector<HenonFactor> factors;
  PolyMap conjugator;          // phi with phi o f o phi^{-1} = composition
  PolyMap conjugator_inverse;  // exact inverse of phi

  PolyMap to_polymap() const {
    PolyMap acc = factors.front().to_polymap();
    for (std::size_t i = 1; i < factors.size(); ++i)
      acc = compose_maps(acc, factors[i].to_polymap());
    return acc;
  }

  Int lambda1() const {
    Int d = 1;
    for (const HenonFactor& h : factors) d *= h.p.degree();
    return d;
  }
};

enum class MapClass { elliptic, loxodromic };

struct EllipticWitness {
  PolyMap conjugator;          // phi o f o phi^{-1} lies in one subgroup
  PolyMap conjugator_inverse;
  Factor target;               // the conjugated map, as a single factor
};

struct ClassificationResult {
  MapClass cls;
  Int lambda1;
  std::optional<EllipticWitness> elliptic;
  std::optional<HenonForm> henon;
};

namespace detail {

/// Chain of factors whose composition (left to right) is the conjugator;
/// both the map and its exact inverse are recoverable.
struct FactorChain {
  FieldSpecPtr spec;
  std::vector<Factor> chain;  // map = chain[0] o chain[1] o ...

  void push_front(Factor f) { chain.insert(chain.begin(), std::move(f)); }

  PolyMap to_map() const {
    PolyMap acc = PolyMap::identity(spec);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      acc = compose_maps(factor_to_polymap(*it), acc);
    return acc;
  }
  PolyMap to_inverse_map() const {
    PolyMap acc = PolyMap::identity(spec);
    for (const Factor& f : chain)
      acc = compose_maps(factor_to_polymap(invert_factor(f)), acc);
    return acc;
  }
};

/// Split a proper affine map as L o swap o R with L, R lower triangular.
inline void bruhat_split(const AffineMap& a, AffineMap& left,
                         AffineMap& right) {
  const FieldSpecPtr& s = a.spec();
  if (a.m21.is_zero())
    throw error(errc::precondition, "affine factor lies in the overlap");
  FieldElement zero = FieldElement::zero(s), one = FieldElement::one(s);
  left = AffineMap{-(a.det() / a.m21), a.m11, zero, a.m21, a.t1, a.t2};
  right = AffineMap{one, a.m22 / a.m21, zero, one, zero, zero};
}

}  // namespace detail

/// Classify f as elliptic or loxodromic by cyclic reduction of its word.
/// Loxodromic maps come with an exact in-field Henon form witness.
inline ClassificationResult classify(const PolyMap& f) {
  const FieldSpecPtr& s = f.spec();
  JungWord w = jung_decompose(f);
  detail::FactorChain conj{s, {}};

  // Cyclic reduction: rotate whenever the word ends can merge.
  while (true) {
    w.normalize();
    if (w.factors.size() <= 1) break;
    if (factors_mergeable(w.factors.back(), w.factors.front())) {
      // Conjugate by the first factor: word becomes rest + [first].
      Factor first = w.factors.front();
      w.factors.erase(w.factors.begin());
      w.factors.push_back(first);
      conj.push_front(invert_factor(first));
      continue;
    }
    break;
  }

  if (w.factors.size() <= 1) {
    Factor target = w.factors.empty()
                        ? Factor(AffineMap::identity(s))
                        : w.factors.front();
    return ClassificationResult{MapClass::elliptic, Int(1),
                                EllipticWitness{conj.to_map(),
                                                conj.to_inverse_map(),
                                                std::move(target)},
                                std::nullopt};
  }

  // Alternating proper word of even length; rotate until it starts with an
  // elementary factor.
  while (is_affine_factor(w.factors.front())) {
    Factor first = w.factors.front();
    w.factors.erase(w.factors.begin());
    w.factors.push_back(first);
    conj.push_front(invert_factor(first));
  }

  const std::size_t pairs = w.factors.size() / 2;
  std::vector<ElementaryMap> es;
  std::vector<AffineMap> ls(pairs), rs(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    es.push_back(std::get<ElementaryMap>(w.factors[2 * i]));
    detail::bruhat_split(std::get<AffineMap>(w.factors[2 * i + 1]), ls[i],
                         rs[i]);
  }

  // Absorb the triangular pieces so the word reads E_1 swap ... E_s swap.
  std::vector<ElementaryMap> tilde;
  for (std::size_t i = 0; i < pairs; ++i) {
    ElementaryMap e = es[i].compose(as_elementary(Factor(ls[i])));
    if (i > 0) e = as_elementary(Factor(rs[i - 1])).compose(e);
    tilde.push_back(std::move(e));
  }
  tilde.front() = as_elementary(Factor(rs.back())).compose(tilde.front());
  conj.push_front(Factor(rs.back()));

  // Push the second-slot scalings through the swaps.
  // E = (alpha x + p(y), beta y + gamma) splits as
  // (alpha x + q(y), y) o (x, beta y + gamma) with q(y) = p((y-gamma)/beta),
  // and (x, beta y + gamma) o swap = swap o (beta x + gamma, y).
  std::vector<ElementaryMap> hats;
  std::optional<ElementaryMap> carry;  // pending (beta x + gamma, y) piece
  for (std::size_t i = 0; i < pairs; ++i) {
    const ElementaryMap& e = tilde[i];
    PlanePoly ylin = PlanePoly::var_y(s) * e.beta.inverse() +
                     PlanePoly::constant(s, -(e.gamma / e.beta));
    PlanePoly qy = e.p.compose2(PlanePoly::var_x(s), ylin);
    ElementaryMap hat{e.alpha, FieldElement::one(s), FieldElement::zero(s),
                      std::move(qy)};
    if (carry) hat = carry->compose(hat);
    hats.push_back(std::move(hat));
    carry = ElementaryMap{e.beta, FieldElement::one(s), FieldElement::zero(s),
                          PlanePoly::constant(s, e.gamma)};
  }
  // Trailing scaling wraps around by one more conjugation.
  hats.front() = carry->compose(hats.front());
  conj.push_front(Factor(*carry));

  std::vector<HenonFactor> factors;
  Int lambda = 1;
  for (const ElementaryMap& hat : hats) {
    // (a x + r(y), y) o swap = (a y + r(x), x)
    PlanePoly rx = hat.p.compose2(PlanePoly::var_y(s), PlanePoly::var_x(s));
    if (rx.degree() < 2)
      throw error(errc::ill_conditioned, "henon factor degree below 2");
    lambda *= rx.degree();
    factors.push_back(HenonFactor{hat.alpha, std::move(rx)});
  }

  HenonForm form{std::move(factors), conj.to_map(), conj.to_inverse_map()};
  return ClassificationResult{MapClass::loxodromic, lambda, std::nullopt,
                              std::move(form)};
}

/// Henon normal form with leading-coefficient normalization.  classify()
/// always succeeds in-field; the extra monicization step here may need a
/// (d-1)-th root that the field lacks, in which case the error carries the
/// monic integer minimal polynomial of the scaled radical.  Words of two or
/// more factors are returned as constructed (simultaneous monicization
/// would need a radical tower).
inline HenonForm henon_normal_form(const PolyMap& f) {
  ClassificationResult c = classify(f);
  if (c.cls != MapClass::loxodromic)
    throw error(errc::precondition,
                "map is elliptic: no Henon normal form exists");
  HenonForm form = std::move(*c.henon);
  if (form.factors.size() != 1) return form;

  HenonFactor& h = form.factors.front();
  long d = h.p.degree();
  FieldElement lead = h.p.coefficient(d, 0);
  if (lead.is_one()) return form;
  const FieldSpecPtr& s = h.a.spec();

  // Need u with u^(d-1) = lead; conjugating by (u x, u y) rescales p.
  std::optional<FieldElement> u;
  if (lead.is_rational()) {
    if (auto r = exact_root(lead.as_rational(), (unsigned long)(d - 1)))
      u = FieldElement(s, *r);
  }
  if (!u && !s->is_rationals()) {
    // Try monomials r * theta^j in the generator.
    FieldElement theta = FieldElement::generator(s);
    for (std::size_t j = 1; j < s->degree() && !u; ++j) {
      FieldElement quot = lead / theta.pow(long(j) * (d - 1));
      if (quot.is_rational()) {
        if (auto r = exact_root(quot.as_rational(), (unsigned long)(d - 1)))
          u = FieldElement(s, *r) * theta.pow(long(j));
      }
    }
  }
  if (!u) {
    std::vector<Int> suggestion;
    std::string what = "monic normalization needs a (d-1)-th root of " +
                       lead.to_string();
    if (lead.is_rational() && d >= 3) {
      Rat c0 = lead.as_rational();
      // eta = den * u satisfies x^(d-1) - num * den^(d-2).
      Int num = c0.get_num(), den = c0.get_den();
      suggestion.assign(std::size_t(d), Int(0));
      suggestion[0] = Int(-num * int_pow(den, (unsigned long)(d - 2)));
      suggestion[std::size_t(d - 1)] = 1;
    }
    throw field_extension_needed(what, std::move(suggestion));
  }

  // p'(x) = u p(x / u); leading coefficient becomes lead / u^(d-1) = 1.
  PlanePoly xs = PlanePoly::var_x(s) * u->inverse();
  h.p = h.p.compose2(xs, PlanePoly::var_y(s)) * (*u);
  AffineMap delta{*u, FieldElement::zero(s), FieldElement::zero(s), *u,
                  FieldElement::zero(s), FieldElement::zero(s)};
  form.conjugator = compose_maps(delta.to_polymap(), form.conjugator);
  form.conjugator_inverse =
      compose_maps(form.conjugator_inverse, delta.inverse().to_polymap());
  return form;
}

}  // namespace planeauto

#endif  // PLANEAUTO_AUTOMORPHISM_HPP
