#pragma once

// Deciding polynomial conjugacy between loxodromic plane automorphisms up
// to a degree cap: exact invariant screens, coefficient equation systems,
// a closed-form diagonal ansatz for matching word shapes, the bounded
// degree Groebner search, centralizer-aware deduplication, and the
// theoretical completeness bound.

#include <optional>
#include <string>
#include <vector>

#include "planeauto/automorphism.hpp"
#include "planeauto/buchberger.hpp"
#include "planeauto/errors.hpp"
#include "planeauto/mpoly.hpp"
#include "planeauto/periodic.hpp"
#include "planeauto/poly.hpp"

namespace planeauto {

struct Refutation {
  enum class Reason {
    lambda1_mismatch,
    jacobian_mismatch,
    multiplier_mismatch,
    exhausted_degree_cap
  };
  Reason reason;
  std::string data;
  bool numeric = false;  // true only for the multiplier screen
};

inline const char* refutation_reason_name(Refutation::Reason r) {
  switch (r) {
    case Refutation::Reason::lambda1_mismatch: return "lambda1-mismatch";
    case Refutation::Reason::jacobian_mismatch: return "jacobian-mismatch";
    case Refutation::Reason::multiplier_mismatch: return "multiplier-mismatch";
    case Refutation::Reason::exhausted_degree_cap: return "exhausted-degree-cap";
  }
  return "unknown";
}

struct ScreenResult {
  bool pass = false;
  std::optional<Refutation> refutation;
};

/// An exact conjugation witness: psi o f = g o psi verified by symbolic
/// recomposition, with a Jung word certifying psi is an automorphism.
struct ConjugacyCertificate {
  PolyMap psi;
  bool checked_identity = false;
  JungWord automorphism_witness;
  long dedup_class_size = 1;
};

struct ConjugacyOutcome {
  enum class Status { certificate, refuted, undecided, residual };
  Status status;
  std::optional<ConjugacyCertificate> certificate;
  std::optional<Refutation> refutation;
  std::string note;
};

/// Coefficients of the candidate conjugator as Groebner unknowns: one
/// block per component in the fixed monomial order below, then one
/// Rabinowitsch witness making the constant Jacobian term invertible.
struct ConjugacySystem {
  FieldSpecPtr spec;
  int D = 1;
  int ncoef = 0;  // monomials of degree <= D in two variables
  int nvars = 0;  // 2*ncoef + 1
  std::vector<std::pair<long, long>> monomials;
  std::vector<MPoly> equations;

  int psi2_offset() const { return ncoef; }
  int witness_index() const { return 2 * ncoef; }

  PolyMap psi_from_point(const std::vector<FieldElement>& pt) const {
    PlanePoly p1 = PlanePoly::zero(spec);
    PlanePoly p2 = PlanePoly::zero(spec);
    for (int k = 0; k < ncoef; ++k) {
      p1.add_term(monomials[k].first, monomials[k].second, pt[k]);
      p2.add_term(monomials[k].first, monomials[k].second, pt[ncoef + k]);
    }
    return PolyMap(p1, p2);  // rejects constant components
  }
};

namespace detail {

/// Bivariate polynomial whose coefficients are polynomials in the
/// conjugator unknowns; the workhorse behind the equation builder.
using CoeffPoly = std::map<Mono2, MPoly, GrlexLess>;

inline void cp_add(CoeffPoly& cp, const Mono2& m, const MPoly& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = cp.emplace(m, v);
  if (!fresh) {
    it->second = it->second + v;
    if (it->second.is_zero()) cp.erase(it);
  }
}

inline CoeffPoly cp_mul(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly out;
  for (const auto& [ma, va] : a)
    for (const auto& [mb, vb] : b)
      cp_add(out, Mono2{ma.i + mb.i, ma.j + mb.j}, va * vb);
  return out;
}

inline CoeffPoly cp_dx(const CoeffPoly& a, const FieldSpecPtr& spec) {
  CoeffPoly out;
  for (const auto& [m, v] : a)
    if (m.i > 0)
      cp_add(out, Mono2{m.i - 1, m.j}, v * FieldElement(spec, Rat(m.i)));
  return out;
}

inline CoeffPoly cp_dy(const CoeffPoly& a, const FieldSpecPtr& spec) {
  CoeffPoly out;
  for (const auto& [m, v] : a)
    if (m.j > 0)
      cp_add(out, Mono2{m.i, m.j - 1}, v * FieldElement(spec, Rat(m.j)));
  return out;
}

inline MPoly cp_get(const CoeffPoly& cp, const Mono2& m,
                    const FieldSpecPtr& spec, int nvars) {
  auto it = cp.find(m);
  return it == cp.end() ? MPoly::zero(spec, nvars) : it->second;
}

}  // namespace detail

/// Coefficient-matching system for psi o f = g o psi over all psi of
/// degree <= D, linear in the psi-coefficients on the left and of degree
/// <= deg(g) in them on the right, plus the invertibility side condition:
/// the constant Jacobian term times a fresh witness equals 1 and every
/// nonconstant Jacobian coefficient vanishes.
inline ConjugacySystem conjugacy_equations(const PolyMap& f, const PolyMap& g,
                                           int D, int degree_cap = 4) {
  require_same_spec(*f.spec(), *g.spec(), "conjugacy equations");
  if (D < 1) throw error(errc::precondition, "degree cap must be >= 1");
  if (D > degree_cap)
    throw error(errc::resource_cap,
                "unknown-count cap exceeded: conjugator degree " +
                    std::to_string(D) + " > " + std::to_string(degree_cap));
  const FieldSpecPtr& spec = f.spec();

  ConjugacySystem sys;
  sys.spec = spec;
  sys.D = D;
  sys.ncoef = (D + 1) * (D + 2) / 2;
  sys.nvars = 2 * sys.ncoef + 1;
  for (long d = 0; d <= D; ++d)
    for (long i = d; i >= 0; --i) sys.monomials.emplace_back(i, d - i);

  const int n = sys.nvars;
  const long M = D * std::max(f.degree(), g.degree());

  // Left side: psi o f is linear in the unknowns, one known plane
  // polynomial f.p^i f.q^j per unknown coefficient.
  std::vector<PlanePoly> fp_pow{PlanePoly::constant(spec, Rat(1))};
  std::vector<PlanePoly> fq_pow{PlanePoly::constant(spec, Rat(1))};
  for (int k = 1; k <= D; ++k) {
    fp_pow.push_back(fp_pow.back() * f.p());
    fq_pow.push_back(fq_pow.back() * f.q());
  }
  detail::CoeffPoly lhs1, lhs2;
  for (int k = 0; k < sys.ncoef; ++k) {
    const auto [i, j] = sys.monomials[k];
    const PlanePoly P = fp_pow[i] * fq_pow[j];
    for (const auto& [m, c] : P.terms()) {
      Exp e1(n, 0), e2(n, 0);
      e1[k] = 1;
      e2[sys.ncoef + k] = 1;
      MPoly t1(spec, n), t2(spec, n);
      t1.add_term(e1, c);
      t2.add_term(e2, c);
      detail::cp_add(lhs1, m, t1);
      detail::cp_add(lhs2, m, t2);
    }
  }

  // Right side: g o psi with generic components.
  detail::CoeffPoly psi1, psi2;
  for (int k = 0; k < sys.ncoef; ++k) {
    const auto [i, j] = sys.monomials[k];
    detail::cp_add(psi1, Mono2{i, j}, MPoly::variable(spec, n, k));
    detail::cp_add(psi2, Mono2{i, j},
                   MPoly::variable(spec, n, sys.ncoef + k));
  }
  long max_i = 0, max_j = 0;
  for (const auto& [m, c] : g.p().terms()) {
    max_i = std::max(max_i, m.i);
    max_j = std::max(max_j, m.j);
  }
  for (const auto& [m, c] : g.q().terms()) {
    max_i = std::max(max_i, m.i);
    max_j = std::max(max_j, m.j);
  }
  std::vector<detail::CoeffPoly> p1_pow(1), p2_pow(1);
  detail::cp_add(p1_pow[0], Mono2{0, 0}, MPoly::constant(spec, n, Rat(1)));
  detail::cp_add(p2_pow[0], Mono2{0, 0}, MPoly::constant(spec, n, Rat(1)));
  for (long k = 1; k <= max_i; ++k)
    p1_pow.push_back(detail::cp_mul(p1_pow.back(), psi1));
  for (long k = 1; k <= max_j; ++k)
    p2_pow.push_back(detail::cp_mul(p2_pow.back(), psi2));

  auto outer_compose = [&](const PlanePoly& gc) {
    detail::CoeffPoly out;
    for (const auto& [m, c] : gc.terms()) {
      const detail::CoeffPoly prod =
          detail::cp_mul(p1_pow[m.i], p2_pow[m.j]);
      for (const auto& [mm, v] : prod) detail::cp_add(out, mm, v * c);
    }
    return out;
  };
  const detail::CoeffPoly rhs1 = outer_compose(g.p());
  const detail::CoeffPoly rhs2 = outer_compose(g.q());

  // Coefficient slots in the fixed monomial order, both components,
  // zero slots included so the equation count is the combinatorial one.
  for (long d = 0; d <= M; ++d)
    for (long i = d; i >= 0; --i) {
      const Mono2 m{i, d - i};
      sys.equations.push_back(detail::cp_get(lhs1, m, spec, n) -
                              detail::cp_get(rhs1, m, spec, n));
      sys.equations.push_back(detail::cp_get(lhs2, m, spec, n) -
                              detail::cp_get(rhs2, m, spec, n));
    }

  // Invertibility: Jacobian determinant of psi is a nonzero constant.
  const detail::CoeffPoly det = [&]() {
    detail::CoeffPoly a = detail::cp_mul(detail::cp_dx(psi1, spec),
                                         detail::cp_dy(psi2, spec));
    const detail::CoeffPoly b = detail::cp_mul(detail::cp_dy(psi1, spec),
                                               detail::cp_dx(psi2, spec));
    for (const auto& [m, v] : b) detail::cp_add(a, m, -v);
    return a;
  }();
  sys.equations.push_back(
      detail::cp_get(det, Mono2{0, 0}, spec, n) *
          MPoly::variable(spec, n, sys.witness_index()) -
      MPoly::constant(spec, n, Rat(1)));
  for (long d = 1; d <= 2 * (D - 1); ++d)
    for (long i = d; i >= 0; --i)
      sys.equations.push_back(
          detail::cp_get(det, Mono2{i, d - i}, spec, n));

  return sys;
}

/// Exact lambda1 and constant-Jacobian screens, then the numeric
/// multiplier-spectrum screen; preconditions: same field, both loxodromic.
inline ScreenResult screen_invariants(const PolyMap& f, const PolyMap& g,
                                      long max_period = 2,
                                      double tol = 1e-6) {
  require_same_spec(*f.spec(), *g.spec(), "invariant screen");
  const ClassificationResult cf = classify(f);
  const ClassificationResult cg = classify(g);
  if (cf.cls != MapClass::loxodromic || cg.cls != MapClass::loxodromic)
    throw error(errc::precondition, "invariant screen requires loxodromic maps");

  ScreenResult out;
  if (cf.lambda1 != cg.lambda1) {
    out.refutation = Refutation{Refutation::Reason::lambda1_mismatch,
                                "lambda1 " + cf.lambda1.get_str() + " vs " +
                                    cg.lambda1.get_str(),
                                false};
    return out;
  }
  const FieldElement jf = jacobian_det(f).det.coefficient(0, 0);
  const FieldElement jg = jacobian_det(g).det.coefficient(0, 0);
  if (!(jf == jg)) {
    out.refutation = Refutation{Refutation::Reason::jacobian_mismatch,
                                "constant Jacobian " + jf.to_string() +
                                    " vs " + jg.to_string(),
                                false};
    return out;
  }
  for (long p = 1; p <= max_period; ++p) {
    const std::vector<cplx> sf = multiplier_spectrum(cf.henon->factors, p);
    const std::vector<cplx> sg = multiplier_spectrum(cg.henon->factors, p);
    const double dist = spectrum_match_distance(sf, sg);
    if (!(dist <= tol)) {
      out.refutation =
          Refutation{Refutation::Reason::multiplier_mismatch,
                     "period " + std::to_string(p) +
                         " multiplier distance " + std::to_string(dist) +
                         " > " + std::to_string(tol) + " (numeric screen)",
                     true};
      return out;
    }
  }
  out.pass = true;
  return out;
}

/// Rebuild a polynomial over a field extension; coefficients must be
/// rational unless the specs already agree.
inline PlanePoly lift_poly(const PlanePoly& p, const FieldSpecPtr& to) {
  PlanePoly out = PlanePoly::zero(to);
  const bool same = (*p.spec() == *to);
  for (const auto& [m, c] : p.terms()) {
    if (same)
      out.add_term(m.i, m.j, FieldElement(to, c.coeffs()));
    else if (c.is_rational())
      out.add_term(m.i, m.j, FieldElement(to, c.coeffs().front()));
    else
      throw error(errc::spec_mismatch,
                  "cannot lift non-rational coefficients across extensions");
  }
  return out;
}

inline PolyMap lift_map(const PolyMap& m, const FieldSpecPtr& to) {
  return PolyMap(lift_poly(m.p(), to), lift_poly(m.q(), to));
}

/// Certificate constructor: the recomposition identity is the gate.
inline ConjugacyCertificate make_certificate(const PolyMap& psi,
                                             const PolyMap& f,
                                             const PolyMap& g) {
  const FieldSpecPtr& s = psi.spec();
  const PolyMap fl = lift_map(f, s), gl = lift_map(g, s);
  if (!(compose_maps(psi, fl) == compose_maps(gl, psi)))
    throw error(errc::precondition,
                "certificate identity failed exact recomposition");
  return ConjugacyCertificate{psi, true, jung_decompose(psi), 1};
}

namespace detail {

inline FieldElement fe_pow(FieldElement b, long e) {
  FieldElement acc = FieldElement::one(b.spec());
  if (e < 0) {
    b = b.inverse();
    e = -e;
  }
  for (; e > 0; --e) acc = acc * b;
  return acc;
}

/// Solve the multiplicative constraint set { alpha^k = r } for one word
/// against another; returns the field (possibly a fresh radical
/// extension of Q) and alpha, or nothing when the shapes do not match.
inline std::optional<std::pair<FieldSpecPtr, FieldElement>> match_diagonal(
    const std::vector<HenonFactor>& A, const std::vector<HenonFactor>& B) {
  if (A.empty() || A.size() != B.size()) return std::nullopt;
  const FieldSpecPtr spec = A.front().a.spec();

  std::vector<std::pair<long, FieldElement>> constraints;
  for (std::size_t t = 0; t < A.size(); ++t) {
    if (!(A[t].a == B[t].a)) return std::nullopt;
    const long dmax = std::max(A[t].p.degree(), B[t].p.degree());
    for (long j = 0; j <= dmax; ++j) {
      const FieldElement ca = A[t].p.coefficient(j, 0);
      const FieldElement cb = B[t].p.coefficient(j, 0);
      if (ca.is_zero() && cb.is_zero()) continue;
      if (ca.is_zero() || cb.is_zero()) return std::nullopt;
      // cb = alpha^{1-j} ca, so alpha^{j-1} = ca / cb.
      const long k = j - 1;
      if (k == 0) {
        if (!(ca == cb)) return std::nullopt;
        continue;
      }
      if (k > 0)
        constraints.emplace_back(k, ca / cb);
      else
        constraints.emplace_back(-k, cb / ca);
    }
  }
  if (constraints.empty())
    return std::make_pair(spec, FieldElement::one(spec));

  long gexp = constraints.front().first;
  FieldElement C = constraints.front().second;
  for (std::size_t t = 1; t < constraints.size(); ++t) {
    // Extended gcd: alpha^g = C and alpha^k = r combine to
    // alpha^{gcd(g,k)} = C^x r^y with g x + k y = gcd(g,k).
    long a = gexp, b = constraints[t].first;
    long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
      const long q = a / b;
      long tmp = a - q * b;
      a = b;
      b = tmp;
      tmp = x0 - q * x1;
      x0 = x1;
      x1 = tmp;
      tmp = y0 - q * y1;
      y0 = y1;
      y1 = tmp;
    }
    C = fe_pow(C, x0) * fe_pow(constraints[t].second, y0);
    gexp = a;
  }
  for (const auto& [k, r] : constraints)
    if (!(fe_pow(C, k / gexp) == r)) return std::nullopt;

  // alpha^gexp = C, smallest solution field first.
  std::vector<FieldElement> binom(gexp + 1, FieldElement::zero(spec));
  binom[0] = -C;
  binom[gexp] = FieldElement::one(spec);
  const std::vector<FieldElement> roots = field_roots(binom);
  for (const FieldElement& r : roots)  // prefer the trivial scaling
    if (r.is_one()) return std::make_pair(spec, r);
  if (!roots.empty()) return std::make_pair(spec, roots.front());
  if (!spec->is_rationals()) return std::nullopt;  // no field towers

  const Rat c = C.coeffs().front();
  const Int P = c.get_num(), Q = c.get_den();
  Int shift = 1;
  for (long t = 0; t + 1 < gexp; ++t) shift *= Q;
  std::vector<Int> minpoly(gexp + 1, Int(0));
  minpoly[0] = -(P * shift);
  minpoly[gexp] = 1;
  FieldSpecPtr ext;
  try {
    ext = FieldSpec::extension(minpoly, 0);
  } catch (const error& e) {
    if (std::string(e.what()).find("reducible") != std::string::npos)
      throw error(errc::reducible_radical,
                  "the radical for alpha^" + std::to_string(gexp) + " = " +
                      C.to_string() + " lies in a proper subextension");
    throw;
  }
  const FieldElement alpha =
      FieldElement::generator(ext) * FieldElement(ext, Rat(1) / Rat(Q));
  if (!(fe_pow(alpha, gexp) == FieldElement(ext, c)))
    throw error(errc::ill_conditioned, "radical construction failed");
  return std::make_pair(ext, alpha);
}

inline PolyMap original_map(const HenonForm& h) {
  return compose_maps(h.conjugator_inverse,
                      compose_maps(h.to_polymap(), h.conjugator));
}

}  // namespace detail

/// Closed-form conjugator search with psi = (alpha x, alpha y) at the
/// word level (the factor shape forces equal scales), then the swapped
/// variant; extends Q by one radical when needed.  Every returned
/// certificate is gated by exact recomposition against the original maps.
inline std::optional<ConjugacyCertificate> solve_diagonal_ansatz(
    const HenonForm& hf, const HenonForm& hg) {
  const PolyMap f = detail::original_map(hf);
  const PolyMap g = detail::original_map(hg);

  if (auto m = detail::match_diagonal(hf.factors, hg.factors)) {
    const auto& [S, alpha] = *m;
    const PolyMap diag(PlanePoly::var_x(S) * alpha,
                       PlanePoly::var_y(S) * alpha);
    const PolyMap psi = compose_maps(
        lift_map(hg.conjugator_inverse, S),
        compose_maps(diag, lift_map(hf.conjugator, S)));
    return make_certificate(psi, f, g);
  }

  // Swapped variant: conjugating the first word by the coordinate swap
  // and retrying the diagonal shape covers psi = (alpha y, beta x).
  const PolyMap swap = AffineMap::swap_xy(f.spec()).to_polymap();
  const PolyMap f2 = compose_maps(swap, compose_maps(f, swap));
  const ClassificationResult c2 = classify(f2);
  if (c2.cls == MapClass::loxodromic && c2.henon.has_value()) {
    if (auto m = detail::match_diagonal(c2.henon->factors, hg.factors)) {
      const auto& [S, alpha] = *m;
      const PolyMap diag(PlanePoly::var_x(S) * alpha,
                         PlanePoly::var_y(S) * alpha);
      const PolyMap psi = compose_maps(
          lift_map(hg.conjugator_inverse, S),
          compose_maps(diag, compose_maps(lift_map(c2.henon->conjugator, S),
                                          lift_map(swap, S))));
      return make_certificate(psi, f, g);
    }
  }
  return std::nullopt;
}

struct ConjugacySolveOptions {
  GroebnerOptions gb{};
  long screen_max_period = 2;
  double screen_tol = 1e-6;
  int degree_cap = 4;
  bool run_screen = true;
};

/// Bounded-degree decision: invariant screen, coefficient system in the
/// cheaper direction (solving for psi inverse when deg f < deg g keeps
/// the equation degree at min(deg f, deg g)), Groebner solve, exact
/// candidate verification.  A trivial ideal refutes conjugacy with any
/// conjugator of degree <= D over every field extension; caps are
/// reported as undecided, never as refutations.
inline ConjugacyOutcome solve_bounded_degree(
    const PolyMap& f, const PolyMap& g, int D,
    const ConjugacySolveOptions& opt = {}) {
  ConjugacyOutcome out{ConjugacyOutcome::Status::undecided, std::nullopt,
                       std::nullopt, ""};
  if (opt.run_screen) {
    const ScreenResult s =
        screen_invariants(f, g, opt.screen_max_period, opt.screen_tol);
    if (!s.pass) {
      out.status = ConjugacyOutcome::Status::refuted;
      out.refutation = s.refutation;
      return out;
    }
  }

  const bool inverted = f.degree() < g.degree();
  const ConjugacySystem sys = inverted
                                  ? conjugacy_equations(g, f, D, opt.degree_cap)
                                  : conjugacy_equations(f, g, D, opt.degree_cap);
  const SolveResult res = solve_system(sys.equations, opt.gb);

  switch (res.status) {
    case SolveStatus::no_solutions:
      out.status = ConjugacyOutcome::Status::refuted;
      out.refutation = Refutation{
          Refutation::Reason::exhausted_degree_cap,
          "the coefficient ideal is trivial: no conjugator of degree <= " +
              std::to_string(D) + " exists over any field extension",
          false};
      return out;
    case SolveStatus::capped:
      out.status = ConjugacyOutcome::Status::undecided;
      out.note = res.note;
      return out;
    case SolveStatus::positive_dimensional:
      out.status = ConjugacyOutcome::Status::undecided;
      out.note = "solution variety not zero-dimensional: " + res.note;
      return out;
    case SolveStatus::finite:
    case SolveStatus::partial:
      break;
  }

  for (const std::vector<FieldElement>& pt : res.points) {
    PolyMap candidate = PolyMap::identity(sys.spec);
    try {
      candidate = sys.psi_from_point(pt);
      jung_decompose(candidate);
    } catch (const error&) {
      continue;  // degenerate coordinate vector
    }
    const PolyMap psi = inverted ? invert_map(candidate) : candidate;
    if (compose_maps(psi, f) == compose_maps(g, psi)) {
      out.status = ConjugacyOutcome::Status::certificate;
      out.certificate = make_certificate(psi, f, g);
      return out;
    }
  }

  out.status = ConjugacyOutcome::Status::residual;
  out.note = res.status == SolveStatus::partial
                 ? "zero-dimensional with roots outside the base field; " +
                       res.note
                 : "zero-dimensional but no candidate verified; " + res.note;
  return out;
}

/// All degree-one maps commuting with f, each verified exactly; the
/// discrete centralizer slice used by dedup and the structure checks.
inline std::vector<PolyMap> centralizer_degree_one(
    const PolyMap& f, const GroebnerOptions& gb = {}) {
  const ConjugacySystem sys = conjugacy_equations(f, f, 1);
  const SolveResult res = solve_system(sys.equations, gb);
  if (res.status == SolveStatus::capped)
    throw error(errc::undecided_at_cap, res.note);
  if (res.status == SolveStatus::positive_dimensional)
    throw error(errc::ill_conditioned,
                "degree-one centralizer system is not zero-dimensional");
  std::vector<PolyMap> out;
  for (const std::vector<FieldElement>& pt : res.points) {
    try {
      const PolyMap c = sys.psi_from_point(pt);
      if (!(compose_maps(c, f) == compose_maps(f, c))) continue;
      bool seen = false;
      for (const PolyMap& o : out) seen = seen || o == c;
      if (!seen) out.push_back(c);
    } catch (const error&) {
      continue;
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyMap& a, const PolyMap& b) {
    const std::string ka = a.p().to_string() + "|" + a.q().to_string();
    const std::string kb = b.p().to_string() + "|" + b.q().to_string();
    return ka < kb;
  });
  return out;
}

namespace detail {

inline std::string cert_key(const ConjugacyCertificate& c) {
  std::string fieldkey;
  for (const Int& v : c.psi.spec()->minpoly()) fieldkey += v.get_str() + ",";
  return fieldkey + "|" + c.psi.p().to_string() + "|" + c.psi.q().to_string();
}

}  // namespace detail

/// Quotient a certificate list by psi ~ psi o c, c running over the
/// powers of f within the degree cap composed with the degree-one
/// torsion of the centralizer; deterministic least-key representatives,
/// class sizes accumulated so the operation is idempotent.
inline std::vector<ConjugacyCertificate> dedup_modulo_centralizer(
    std::vector<ConjugacyCertificate> certs, const PolyMap& f, long cap) {
  if (certs.empty()) return certs;
  std::sort(certs.begin(), certs.end(),
            [](const ConjugacyCertificate& a, const ConjugacyCertificate& b) {
              return detail::cert_key(a) < detail::cert_key(b);
            });

  std::vector<ConjugacyCertificate> reps;
  std::vector<bool> claimed(certs.size(), false);
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (claimed[i]) continue;
    claimed[i] = true;
    ConjugacyCertificate rep = certs[i];
    const FieldSpecPtr S = rep.psi.spec();

    // Centralizer slice over this certificate's field.
    std::vector<PolyMap> cands{PolyMap::identity(S)};
    try {
      const PolyMap fS = lift_map(f, S);
      for (const PolyMap& t : centralizer_degree_one(fS))
        cands.push_back(t);
      const std::size_t ntorsion = cands.size();
      PolyMap fwd = fS;
      while (fwd.degree() <= cap) {
        for (std::size_t t = 0; t < ntorsion; ++t)
          cands.push_back(compose_maps(fwd, cands[t]));
        if (fwd.degree() > cap / fS.degree()) break;
        fwd = compose_maps(fwd, fS);
      }
      PolyMap bwd = invert_map(fS);
      const PolyMap bstep = bwd;
      while (bwd.degree() <= cap) {
        for (std::size_t t = 0; t < ntorsion; ++t)
          cands.push_back(compose_maps(bwd, cands[t]));
        if (bwd.degree() > cap / bstep.degree()) break;
        bwd = compose_maps(bwd, bstep);
      }
    } catch (const error&) {
      // Torsion search unavailable over this field: classes stay finer,
      // which only under-collapses and never merges distinct classes.
    }

    for (std::size_t j = i + 1; j < certs.size(); ++j) {
      if (claimed[j]) continue;
      if (!(*certs[j].psi.spec() == *S)) continue;
      bool related = false;
      for (const PolyMap& c : cands) {
        if (compose_maps(rep.psi, c) == certs[j].psi) {
          related = true;
          break;
        }
      }
      if (related) {
        claimed[j] = true;
        rep.dedup_class_size += certs[j].dedup_class_size;
      }
    }
    reps.push_back(std::move(rep));
  }
  return reps;
}

/// The sound-but-impractical completeness bound on conjugator degrees.
inline Int theorem_a_bound(long df, long dg) {
  if (df < 2 || dg < 2)
    throw error(errc::precondition,
                "degree bound applies to loxodromic maps (degrees >= 2)");
  Int base = Int(df) * Int(dg);
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), 29);
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), 57);
  return out;
}

}  // namespace planeauto
