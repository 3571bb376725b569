#pragma once

// Groebner machinery for the small zero-dimensional systems produced by
// conjugator and centralizer searches.  Exact arithmetic throughout; all
// caps surface as an explicit "capped" status, never as a wrong answer.

#include <complex>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "planeauto/errors.hpp"
#include "planeauto/field.hpp"
#include "planeauto/mpoly.hpp"
#include "planeauto/roots.hpp"

namespace planeauto {

struct GroebnerOptions {
  long max_pairs = 100000;        // S-pairs processed before giving up
  long max_height_digits = 10000; // decimal digits per rational coordinate
  std::size_t max_basis = 4096;
  long max_staircase = 100000;    // quotient-basis cells enumerated
};

struct GroebnerResult {
  std::vector<MPoly> basis;  // reduced basis when complete
  bool complete = false;
  bool trivial = false;      // basis is {1}: the system has no solutions
  std::string cap_note;
};

/// Full normal form: every term of the remainder is irreducible modulo
/// the leading terms of basis.
inline MPoly normal_form(MPoly p, const std::vector<MPoly>& basis) {
  MPoly out(p.spec(), p.nvars());
  while (!p.is_zero()) {
    const Exp e = p.leading_exp();
    const FieldElement c = p.leading_coeff();
    bool reduced = false;
    for (const MPoly& g : basis) {
      if (g.is_zero()) continue;
      if (detail::exp_divides(g.leading_exp(), e)) {
        p = p - g.mul_term(detail::exp_sub(e, g.leading_exp()),
                           c / g.leading_coeff());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.add_term(e, c);
      MPoly t(p.spec(), p.nvars());
      t.add_term(e, c);
      p = p - t;
    }
  }
  return out;
}

inline MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  const Exp lcm = detail::exp_lcm(f.leading_exp(), g.leading_exp());
  return f.mul_term(detail::exp_sub(lcm, f.leading_exp()),
                    f.leading_coeff().inverse()) -
         g.mul_term(detail::exp_sub(lcm, g.leading_exp()),
                    g.leading_coeff().inverse());
}

namespace detail {

/// Minimalize then tail-reduce; output sorted by leading exponent so the
/// reduced basis is the canonical one.
inline std::vector<MPoly> reduce_basis(std::vector<MPoly> basis) {
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || basis[j].is_zero()) continue;
      if (exp_divides(basis[j].leading_exp(), basis[i].leading_exp()) &&
          (basis[j].leading_exp() != basis[i].leading_exp() || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly r = normal_form(minimal[i], others);
    if (!r.is_zero()) out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) {
    return grevlex_cmp(a.leading_exp(), b.leading_exp()) < 0;
  });
  return out;
}

}  // namespace detail

/// Buchberger loop with normal selection (smallest lcm degree first) and
/// the coprime-lead and chain skip criteria.  `pair_budget`, when given,
/// is shared across calls so a recursive solve has one global cap.
inline GroebnerResult buchberger(const std::vector<MPoly>& gens,
                                 const GroebnerOptions& opt = {},
                                 long* pair_budget = nullptr) {
  GroebnerResult res;
  if (gens.empty()) {
    res.complete = true;
    return res;
  }
  const FieldSpecPtr spec = gens.front().spec();
  const int nvars = gens.front().nvars();
  auto make_trivial = [&]() {
    res.basis = {MPoly::constant(spec, nvars, Rat(1))};
    res.complete = true;
    res.trivial = true;
    return res;
  };

  std::vector<MPoly> basis;
  for (const MPoly& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return make_trivial();
    basis.push_back(g.monic());
  }
  if (basis.empty()) {
    res.complete = true;
    return res;
  }

  long local_budget = opt.max_pairs;
  long* budget = pair_budget ? pair_budget : &local_budget;

  // Pending pairs keyed by (lcm degree, i, j); processed set feeds the
  // chain criterion (a criterion skip counts as processed).
  using PairKey = std::tuple<long, int, int>;
  std::set<PairKey> pending;
  std::set<std::pair<int, int>> done;
  auto push_pair = [&](int i, int j) {
    const Exp lcm =
        detail::exp_lcm(basis[i].leading_exp(), basis[j].leading_exp());
    pending.emplace(detail::exp_total_degree(lcm), i, j);
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      push_pair(static_cast<int>(i), static_cast<int>(j));

  while (!pending.empty()) {
    if (*budget <= 0) {
      res.cap_note = "S-pair budget exhausted";
      return res;
    }
    --*budget;
    const int i = std::get<1>(*pending.begin());
    const int j = std::get<2>(*pending.begin());
    pending.erase(pending.begin());
    done.emplace(i, j);

    const Exp& li = basis[i].leading_exp();
    const Exp& lj = basis[j].leading_exp();
    const Exp lcm = detail::exp_lcm(li, lj);
    if (lcm == detail::exp_add(li, lj)) continue;  // coprime leads
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
      if (!detail::exp_divides(basis[k].leading_exp(), lcm)) continue;
      auto key = [&](int a, int b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done.count(key(i, static_cast<int>(k))) &&
          done.count(key(j, static_cast<int>(k))))
        chained = true;
    }
    if (chained) continue;

    MPoly h = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return make_trivial();
    h = h.monic();
    if (h.height_digits() > opt.max_height_digits) {
      res.cap_note = "coefficient height cap exceeded";
      return res;
    }
    if (basis.size() >= opt.max_basis) {
      res.cap_note = "basis size cap exceeded";
      return res;
    }
    basis.push_back(h);
    const int n = static_cast<int>(basis.size()) - 1;
    for (int k = 0; k < n; ++k) push_pair(k, n);
  }

  res.basis = detail::reduce_basis(std::move(basis));
  if (res.basis.size() == 1 && res.basis.front().is_constant())
    return make_trivial();
  res.complete = true;
  return res;
}

namespace detail {

/// Continued-fraction convergents of x, smallest denominators first.
inline std::vector<Rat> rational_candidates(double x, int max_terms = 24,
                                            double max_den = 1e12) {
  std::vector<Rat> out;
  if (!std::isfinite(x) || std::abs(x) > 1e18) return out;
  Int h0(0), h1(1), k0(1), k1(0);  // p_{-2}/q_{-2}, p_{-1}/q_{-1}
  double r = x;
  for (int t = 0; t < max_terms; ++t) {
    if (!std::isfinite(r) || std::abs(r) > 9e15) break;
    double fl = std::floor(r);
    Int a(fl);
    Int h2 = a * h1 + h0;
    Int k2 = a * k1 + k0;
    if (k2.get_d() > max_den) break;
    if (k2 != 0) out.emplace_back(Rat(h2) / Rat(k2));
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = r - fl;
    if (std::abs(frac) < 1e-14 * (1.0 + std::abs(x))) break;
    r = 1.0 / frac;
  }
  return out;
}

inline bool verify_root(const std::vector<FieldElement>& coeffs,
                        const FieldElement& r) {
  FieldElement acc = FieldElement::zero(r.spec());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * r + coeffs[i];
  return acc.is_zero();
}

}  // namespace detail

/// All roots of Σ coeffs[k]·x^k that lie in the coefficient field, found
/// by numeric isolation plus exact rational reconstruction, then verified
/// by exact substitution.  Degree-one is solved exactly; for higher
/// degree the candidate generation is best effort (an unreconstructed
/// root is simply not returned), so callers must not treat an empty
/// answer as proof of emptiness.
inline std::vector<FieldElement> field_roots(std::vector<FieldElement> coeffs) {
  std::vector<FieldElement> found;
  if (coeffs.empty()) return found;
  const FieldSpecPtr spec = coeffs.front().spec();
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() <= 1) return found;
  auto push_verified = [&](const FieldElement& cand) {
    if (!detail::verify_root(coeffs, cand)) return;
    for (const FieldElement& f : found)
      if (f == cand) return;
    found.push_back(cand);
  };
  if (coeffs.size() == 2) {
    push_verified(-(coeffs[0] / coeffs[1]));
    return found;
  }

  push_verified(FieldElement::zero(spec));
  push_verified(FieldElement::one(spec));
  push_verified(-FieldElement::one(spec));

  std::vector<cplx> numeric(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) numeric[i] = coeffs[i].embed();
  std::vector<cplx> zs;
  try {
    zs = univariate_roots(numeric);
  } catch (const error&) {
    return found;  // isolation failure: fall back to the cheap candidates
  }

  const bool rational_field = spec->is_rationals();
  const cplx tau = rational_field ? cplx(0.0, 0.0) : spec->embedded_root();
  for (const cplx& z : zs) {
    const double scale = 1.0 + std::abs(z);
    if (std::abs(z.imag()) < 1e-6 * scale)
      for (const Rat& a : detail::rational_candidates(z.real()))
        push_verified(FieldElement(spec, a));
    if (rational_field) continue;
    if (std::abs(tau.imag()) > 1e-9) {
      // Complex embedding: z = a + b·tau has a unique real solution pair.
      const double b0 = z.imag() / tau.imag();
      for (const Rat& b : detail::rational_candidates(b0, 16, 1e9)) {
        const double a0 = z.real() - b.get_d() * tau.real();
        for (const Rat& a : detail::rational_candidates(a0, 16, 1e9))
          push_verified(FieldElement(spec, std::vector<Rat>{a, b}));
      }
    } else if (std::abs(z.imag()) < 1e-6 * scale) {
      // Real embedding: try a pure radical multiple, then a small mixed
      // search over convergents of the rational part.
      for (const Rat& b : detail::rational_candidates(z.real() / tau.real()))
        push_verified(FieldElement(spec, std::vector<Rat>{Rat(0), b}));
      int tried = 0;
      for (const Rat& a : detail::rational_candidates(z.real(), 10, 1e4)) {
        if (++tried > 8) break;
        const double rem = (z.real() - a.get_d()) / tau.real();
        for (const Rat& b : detail::rational_candidates(rem, 10, 1e6))
          push_verified(FieldElement(spec, std::vector<Rat>{a, b}));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const FieldElement& a, const FieldElement& b) {
              return a.to_string() < b.to_string();
            });
  return found;
}

/// Univariate coefficient vector rendered as an MPoly in variable `var`.
inline MPoly MPolyFromUnivariate(const std::vector<FieldElement>& coeffs,
                                 int var, int nvars) {
  if (coeffs.empty()) throw error(errc::precondition, "empty coefficients");
  MPoly p(coeffs.front().spec(), nvars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exp e(nvars, 0);
    e[var] = static_cast<int>(k);
    p.add_term(e, coeffs[k]);
  }
  return p;
}

enum class SolveStatus {
  finite,               // zero-dimensional everywhere, extraction ran to the end
  no_solutions,         // the full ideal is trivial: certified empty
  capped,               // a Groebner cap fired; nothing is decided
  positive_dimensional, // a free variable survived; not a finite solve
  partial               // finite, but some eliminant had roots outside the field
};

struct SolveResult {
  SolveStatus status = SolveStatus::finite;
  std::vector<std::vector<FieldElement>> points;
  std::string note;  // cap note or residual eliminant description
};

namespace detail {

struct LinearStep {
  int var;
  MPoly expr;  // var := expr, expr free of every previously removed var
};

struct PreprocessOut {
  std::vector<MPoly> gens;
  bool inconsistent = false;
};

/// Iterated exact elimination of affine-linear generators; substitution
/// by a degree <= 1 expression never raises the degree of the rest.
inline PreprocessOut preprocess_linear(std::vector<MPoly> gens,
                                       std::vector<LinearStep>& steps) {
  PreprocessOut out;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<MPoly> keep;
    keep.reserve(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      MPoly& g = gens[gi];
      if (g.is_zero()) continue;
      if (g.is_constant()) {
        out.inconsistent = true;
        return out;
      }
      if (g.total_degree() == 1 && !progress) {
        int var = -1;
        for (const auto& [e, c] : g.terms())
          for (int i = g.nvars(); i-- > 0;)
            if (e[i] > 0) {
              var = std::max(var, i);
              break;
            }
        Exp ve(g.nvars(), 0);
        ve[var] = 1;
        const FieldElement cv = g.coeff(ve);
        MPoly rest = g;
        {
          MPoly t(g.spec(), g.nvars());
          t.add_term(ve, cv);
          rest = rest - t;
        }
        MPoly expr = rest * (-(cv.inverse()));
        for (std::size_t gj = 0; gj < gens.size(); ++gj)
          if (gj != gi) gens[gj] = gens[gj].substitute(var, expr);
        steps.push_back({var, expr});
        g = MPoly::zero(g.spec(), g.nvars());
        progress = true;
        continue;
      }
      keep.push_back(g);
    }
    if (!progress) {
      out.gens = std::move(keep);
      break;
    }
  }
  return out;
}

inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "u" + std::to_string(i);
  return names;
}

/// Monic minimal polynomial of variable `var` acting on the quotient,
/// via exact incremental Gaussian elimination over the staircase basis.
inline std::vector<FieldElement> eliminant_of(
    const std::vector<MPoly>& gb, int var, const std::vector<Exp>& staircase,
    const FieldSpecPtr& spec, int nvars) {
  std::map<Exp, std::size_t, GrevlexLess> index;
  for (std::size_t i = 0; i < staircase.size(); ++i)
    index.emplace(staircase[i], i);
  const std::size_t N = staircase.size();

  std::vector<std::vector<FieldElement>> echelon;   // reduced rows
  std::vector<std::vector<FieldElement>> combos;    // row = sum combo_t power_t
  std::vector<std::size_t> pivots;

  MPoly power = MPoly::constant(spec, nvars, Rat(1));
  const MPoly xv = MPoly::variable(spec, nvars, var);
  for (std::size_t k = 0;; ++k) {
    if (k > N)
      throw error(errc::ill_conditioned,
                  "eliminant dependency not found within quotient dimension");
    std::vector<FieldElement> row(N, FieldElement::zero(spec));
    for (const auto& [e, c] : power.terms()) {
      auto it = index.find(e);
      if (it == index.end())
        throw error(errc::ill_conditioned,
                    "normal form left the staircase basis");
      row[it->second] = c;
    }
    std::vector<FieldElement> combo(k + 1, FieldElement::zero(spec));
    combo[k] = FieldElement::one(spec);
    for (std::size_t t = 0; t < echelon.size(); ++t) {
      const FieldElement& lead = row[pivots[t]];
      if (lead.is_zero()) continue;
      const FieldElement f = lead / echelon[t][pivots[t]];
      for (std::size_t c2 = 0; c2 < N; ++c2)
        row[c2] = row[c2] - f * echelon[t][c2];
      for (std::size_t c2 = 0; c2 < combos[t].size(); ++c2)
        combo[c2] = combo[c2] - f * combos[t][c2];
    }
    std::size_t pivot = N;
    for (std::size_t c2 = 0; c2 < N; ++c2)
      if (!row[c2].is_zero()) {
        pivot = c2;
        break;
      }
    if (pivot == N) return combo;  // x^k + sum combo_t x^t vanishes: monic
    echelon.push_back(std::move(row));
    combos.push_back(std::move(combo));
    pivots.push_back(pivot);
    power = normal_form(power * xv, gb);
  }
}

struct SolveFrame {
  std::vector<std::optional<FieldElement>> assigned;
  std::vector<LinearStep> steps;
};

inline void solve_recurse(std::vector<MPoly> gens, SolveFrame frame,
                          const GroebnerOptions& opt, long* budget,
                          SolveResult& out, int depth) {
  const FieldSpecPtr spec =
      gens.empty() ? FieldSpec::rationals() : gens.front().spec();
  const int nvars = gens.empty() ? static_cast<int>(frame.assigned.size())
                                 : gens.front().nvars();
  if (depth > nvars + 2) {
    out.status = SolveStatus::capped;
    out.note = "solver recursion depth exceeded variable count";
    return;
  }

  PreprocessOut pre = preprocess_linear(std::move(gens), frame.steps);
  if (pre.inconsistent) return;  // this branch has no solutions

  if (pre.gens.empty()) {
    // Reconstruct: pivots first, then the linear steps newest-to-oldest.
    std::vector<std::optional<FieldElement>> point = frame.assigned;
    for (std::size_t s = frame.steps.size(); s-- > 0;) {
      const LinearStep& st = frame.steps[s];
      MPoly val = st.expr;
      for (int i = 0; i < nvars; ++i)
        if (val.depends_on(i)) {
          if (!point[i].has_value()) {
            out.status = SolveStatus::positive_dimensional;
            out.note = "free variable in back substitution";
            return;
          }
          val = val.eval_partial(i, *point[i]);
        }
      point[st.var] = val.constant_value();
    }
    for (int i = 0; i < nvars; ++i)
      if (!point[i].has_value()) {
        out.status = SolveStatus::positive_dimensional;
        out.note = "unconstrained variable";
        return;
      }
    std::vector<FieldElement> flat;
    flat.reserve(nvars);
    for (int i = 0; i < nvars; ++i) flat.push_back(*point[i]);
    out.points.push_back(std::move(flat));
    return;
  }

  GroebnerResult gb = buchberger(pre.gens, opt, budget);
  if (!gb.complete) {
    out.status = SolveStatus::capped;
    out.note = gb.cap_note;
    return;
  }
  if (gb.trivial) return;

  std::vector<bool> active(nvars, false);
  for (const MPoly& g : gb.basis)
    for (int i = 0; i < nvars; ++i)
      if (g.depends_on(i)) active[i] = true;

  std::vector<long> bound(nvars, 1);
  for (int i = 0; i < nvars; ++i) {
    if (!active[i]) continue;
    long k = -1;
    for (const MPoly& g : gb.basis) {
      const Exp& le = g.leading_exp();
      bool pure = le[i] > 0;
      for (int j = 0; j < nvars && pure; ++j)
        if (j != i && le[j] > 0) pure = false;
      if (pure) k = (k < 0) ? le[i] : std::min(k, static_cast<long>(le[i]));
    }
    if (k < 0) {
      out.status = SolveStatus::positive_dimensional;
      out.note = "no pure power leading term for variable " +
                 std::to_string(i);
      return;
    }
    bound[i] = k;
  }

  long cells = 1;
  for (int i = 0; i < nvars; ++i) {
    cells *= bound[i];
    if (cells > opt.max_staircase) {
      out.status = SolveStatus::capped;
      out.note = "staircase cell cap exceeded";
      return;
    }
  }
  std::vector<Exp> staircase;
  Exp cursor(nvars, 0);
  for (;;) {
    bool under = true;
    for (const MPoly& g : gb.basis)
      if (detail::exp_divides(g.leading_exp(), cursor)) {
        under = false;
        break;
      }
    if (under) staircase.push_back(cursor);
    int i = 0;
    while (i < nvars) {
      if (++cursor[i] < bound[i]) break;
      cursor[i] = 0;
      ++i;
    }
    if (i == nvars) break;
  }
  std::sort(staircase.begin(), staircase.end(), GrevlexLess{});

  int pivot_var = -1;
  for (int i = 0; i < nvars; ++i)
    if (active[i]) {
      pivot_var = i;
      break;
    }
  if (pivot_var < 0) {
    out.status = SolveStatus::positive_dimensional;
    out.note = "basis constrains no variable";
    return;
  }
  std::vector<FieldElement> elim =
      eliminant_of(gb.basis, pivot_var, staircase, spec, nvars);
  std::vector<FieldElement> roots(field_roots(elim));
  if (roots.size() + 1 < elim.size()) {
    if (out.status == SolveStatus::finite) out.status = SolveStatus::partial;
    if (out.note.empty())
      out.note = "eliminant with roots outside the field, variable u" +
                 std::to_string(pivot_var) + ": " +
                 MPolyFromUnivariate(elim, pivot_var, nvars)
                     .to_string(default_names(nvars));
  }
  for (const FieldElement& r : roots) {
    std::vector<MPoly> next;
    next.reserve(gb.basis.size());
    for (const MPoly& g : gb.basis) next.push_back(g.eval_partial(pivot_var, r));
    SolveFrame child = frame;
    child.assigned[pivot_var] = r;
    solve_recurse(std::move(next), std::move(child), opt, budget, out,
                  depth + 1);
    if (out.status == SolveStatus::capped) return;
  }
}

}  // namespace detail

/// Exact solve of a polynomial system expected to be zero-dimensional:
/// linear preprocessing, Buchberger, per-variable eliminants, in-field
/// root extraction, recursive substitution.  Points are exact and each
/// satisfies every generator; statuses other than `finite` say precisely
/// what is and is not certified.
inline SolveResult solve_system(const std::vector<MPoly>& gens,
                                const GroebnerOptions& opt = {}) {
  SolveResult out;
  if (gens.empty()) {
    out.status = SolveStatus::positive_dimensional;
    out.note = "empty generator list";
    return out;
  }
  const int nvars = gens.front().nvars();

  // Certify triviality on the full system first so `no_solutions` is a
  // statement about the whole ideal, not about one branch.
  {
    std::vector<detail::LinearStep> probe_steps;
    detail::PreprocessOut probe = detail::preprocess_linear(gens, probe_steps);
    if (probe.inconsistent) {
      out.status = SolveStatus::no_solutions;
      out.note = "a nonzero constant lies in the ideal";
      return out;
    }
    long budget = opt.max_pairs;
    GroebnerResult gb = buchberger(probe.gens, opt, &budget);
    if (!gb.complete) {
      out.status = SolveStatus::capped;
      out.note = gb.cap_note;
      return out;
    }
    if (gb.trivial) {
      out.status = SolveStatus::no_solutions;
      out.note = "Groebner basis is {1}";
      return out;
    }
  }

  long budget = opt.max_pairs;
  detail::SolveFrame frame;
  frame.assigned.assign(nvars, std::nullopt);
  detail::solve_recurse(gens, std::move(frame), opt, &budget, out, 0);

  std::sort(out.points.begin(), out.points.end(),
            [](const std::vector<FieldElement>& a,
               const std::vector<FieldElement>& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                const std::string sa = a[i].to_string(), sb = b[i].to_string();
                if (sa != sb) return sa < sb;
              }
              return false;
            });
  return out;
}

}  // namespace planeauto
