#ifndef PLANEAUTO_PERIODIC_HPP
#define PLANEAUTO_PERIODIC_HPP

/// Periodic orbits of factor words.
///
/// Fixed points of the n-th iterate are enumerated through the exact
/// eliminant Res_y(P - x, Q - y) of the exactly-composed iterate (P, Q),
/// so the root set is certified by the resultant rather than guessed from
/// orbit sampling.  Abscissae and ordinates are pinned by univariate
/// Newton at 256 bits against exact coefficients, certified through the
/// word-walk residual of H^n(z) - z, grouped into orbits of exact minimal
/// period, and decorated with the eigenvalues of the ordered Jacobian
/// product along the orbit, all at the same extended precision: words
/// produced by conjugation can carry coefficients large enough that plain
/// double evaluation is pure cancellation noise at the roots.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "planeauto/green.hpp"
#include "planeauto/resultant.hpp"
#include "planeauto/roots.hpp"

namespace planeauto {

struct PeriodicOrbit {
  long period = 1;  // exact minimal period
  std::vector<std::pair<cplx, cplx>> points;  // orbit in forward order
  cplx multiplier1, multiplier2;  // eigenvalues, |multiplier1| <= |multiplier2|
  std::string type;  // attracting / repelling / saddle / neutral / mixed
  double residual = 0.0;  // max ||H^period(z) - z|| over the orbit
};

struct PeriodicOptions {
  double tol = 1e-7;         // point identification tolerance
  double newton_tol = 1e-10; // required residual after polishing
  int newton_steps = 60;
};

namespace detail {

struct Mat2 {
  cplx a, b, c, d;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  cplx det() const { return a * d - b * c; }
  cplx tr() const { return a + d; }
};

inline std::pair<cplx, cplx> eigenvalues2(const Mat2& m) {
  cplx t = m.tr(), dt = m.det();
  cplx disc = std::sqrt(t * t - 4.0 * dt);
  cplx l1 = (t + disc) / 2.0, l2 = (t - disc) / 2.0;
  if (std::abs(l1) > std::abs(l2)) std::swap(l1, l2);
  return {l1, l2};
}

inline std::string orbit_type(const cplx& l1, const cplx& l2, double eps) {
  double a1 = std::abs(l1), a2 = std::abs(l2);
  bool n1 = std::fabs(a1 - 1.0) <= eps, n2 = std::fabs(a2 - 1.0) <= eps;
  if (n1 && n2) return "neutral";
  if (n1 || n2) return "mixed";
  if (a1 < 1.0 && a2 < 1.0) return "attracting";
  if (a1 > 1.0 && a2 > 1.0) return "repelling";
  return "saddle";
}

// High-precision arithmetic.  Double evaluation of a word carries a noise
// floor of roughly eps * sum_j |c_j| |x|^j per factor; large composed
// coefficients push that floor above any useful point tolerance, and the
// leftover point error contaminates multipliers through p''(x) dz.  All
// root refinement, certification, orbit walking, and Jacobian accumulation
// therefore run at 256 bits over the exact coefficients.

constexpr int kMpPrec = 256;

struct MpCplx {
  mpf_class re{0, kMpPrec}, im{0, kMpPrec};
  MpCplx() = default;
  explicit MpCplx(const cplx& z)
      : re(z.real(), kMpPrec), im(z.imag(), kMpPrec) {}
  cplx to_cplx() const { return {re.get_d(), im.get_d()}; }
};

inline MpCplx mp_one() {
  MpCplx r;
  r.re = 1;
  return r;
}

inline MpCplx mp_add(const MpCplx& x, const MpCplx& y) {
  MpCplx r;
  r.re = x.re + y.re;
  r.im = x.im + y.im;
  return r;
}

inline MpCplx mp_sub(const MpCplx& x, const MpCplx& y) {
  MpCplx r;
  r.re = x.re - y.re;
  r.im = x.im - y.im;
  return r;
}

inline MpCplx mp_mul(const MpCplx& x, const MpCplx& y) {
  MpCplx r;
  r.re = x.re * y.re - x.im * y.im;
  r.im = x.re * y.im + x.im * y.re;
  return r;
}

inline MpCplx mp_div(const MpCplx& x, const MpCplx& y) {
  mpf_class den(0, kMpPrec);
  den = y.re * y.re + y.im * y.im;
  MpCplx r;
  r.re = (x.re * y.re + x.im * y.im) / den;
  r.im = (x.im * y.re - x.re * y.im) / den;
  return r;
}

inline double mp_abs(const MpCplx& x) {
  return std::hypot(x.re.get_d(), x.im.get_d());
}

struct MpMat2 {
  MpCplx a, b, c, d;
};

inline MpMat2 mp_mat_mul(const MpMat2& x, const MpMat2& y) {
  MpMat2 r;
  r.a = mp_add(mp_mul(x.a, y.a), mp_mul(x.b, y.c));
  r.b = mp_add(mp_mul(x.a, y.b), mp_mul(x.b, y.d));
  r.c = mp_add(mp_mul(x.c, y.a), mp_mul(x.d, y.c));
  r.d = mp_add(mp_mul(x.c, y.b), mp_mul(x.d, y.d));
  return r;
}

struct MpFactor {
  MpCplx a;                   // shear scale
  std::vector<MpCplx> coeff;  // p by ascending degree
};

/// 1D Newton against kMpPrec-bit univariate coefficients, ascending order.
/// Good double seeds sit far inside the basin of the nearest root, so the
/// plain iteration converges quadratically to the working precision.
inline void mp_polish_1d(const std::vector<MpCplx>& c, MpCplx& z) {
  if (c.size() < 2) return;
  for (int it = 0; it < 64; ++it) {
    MpCplx p = c.back(), dp;
    for (std::size_t j = c.size() - 1; j-- > 0;) {
      dp = mp_add(mp_mul(dp, z), p);
      p = mp_add(mp_mul(p, z), c[j]);
    }
    if (mp_abs(dp) == 0.0) break;
    MpCplx step = mp_div(p, dp);
    z = mp_sub(z, step);
    if (mp_abs(step) <= 1e-60 * std::max(1.0, mp_abs(z))) break;
  }
}

/// Root of the field's minimal polynomial nearest the tracked embedding,
/// refined to kMpPrec bits from the double-precision seed.
inline MpCplx mp_generator(const FieldSpecPtr& s) {
  const std::vector<Int>& mp = s->minpoly();
  std::vector<MpCplx> c(mp.size());
  for (std::size_t i = 0; i < mp.size(); ++i) c[i].re = mp[i];
  MpCplx x(s->embedded_root());
  mp_polish_1d(c, x);
  return x;
}

/// Exact element to a kMpPrec-bit complex value, by Horner in the generator.
inline MpCplx mp_embed(const FieldElement& e, const MpCplx& theta) {
  const std::vector<Rat>& cs = e.coeffs();
  MpCplx out;
  for (std::size_t i = cs.size(); i-- > 0;) {
    out = mp_mul(out, theta);
    out.re += mpf_class(cs[i], kMpPrec);
  }
  return out;
}

inline std::vector<MpFactor> mp_embed_factors(
    const std::vector<HenonFactor>& word, const MpCplx& theta) {
  std::vector<MpFactor> out;
  out.reserve(word.size());
  for (const HenonFactor& h : word) {
    if (h.p.degree() < 2)
      throw error(errc::precondition, "factor degree must be at least 2");
    MpFactor f;
    f.a = mp_embed(h.a, theta);
    f.coeff.assign(std::size_t(h.p.degree()) + 1, MpCplx{});
    for (const auto& [m, c] : h.p.terms()) {
      if (m.j != 0)
        throw error(errc::precondition, "factor shift must depend on x only");
      f.coeff[std::size_t(m.i)] = mp_embed(c, theta);
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// Rows of a bivariate polynomial for high-precision slicing: row j holds
/// the coefficients in x of the y^j part, embedded at kMpPrec bits.
inline std::vector<std::vector<MpCplx>> mp_rows(const PlanePoly& p,
                                                const MpCplx& theta) {
  std::vector<std::vector<MpCplx>> rows;
  for (const auto& [m, c] : p.terms()) {
    if (rows.size() <= std::size_t(m.j)) rows.resize(std::size_t(m.j) + 1);
    auto& row = rows[std::size_t(m.j)];
    if (row.size() <= std::size_t(m.i)) row.resize(std::size_t(m.i) + 1);
    row[std::size_t(m.i)] = mp_embed(c, theta);
  }
  return rows;
}

/// Coefficients in y of p(x0, y).  The x-fold is done at kMpPrec bits:
/// slice coefficients of composed iterates with large entries cancel almost
/// completely near the roots, and a double fold leaves only noise, which
/// would seed the ordinate solve with spurious roots.  Trailing
/// coefficients that vanish at working precision are trimmed.
inline std::vector<MpCplx> mp_slice_y(
    const std::vector<std::vector<MpCplx>>& rows, const MpCplx& x) {
  std::vector<MpCplx> vals(rows.size());
  double maxabs = 0.0;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    MpCplx acc;
    for (std::size_t i = rows[j].size(); i-- > 0;)
      acc = mp_add(mp_mul(acc, x), rows[j][i]);
    vals[j] = acc;
    maxabs = std::max(maxabs, mp_abs(acc));
  }
  while (!vals.empty() && mp_abs(vals.back()) < 1e-25 * (1.0 + maxabs))
    vals.pop_back();
  return vals;
}

inline void mp_apply_word(const std::vector<MpFactor>& fs, MpCplx& x,
                          MpCplx& y) {
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    const MpFactor& f = *it;
    MpCplx p = f.coeff.back();
    for (std::size_t j = f.coeff.size() - 1; j-- > 0;)
      p = mp_add(mp_mul(p, x), f.coeff[j]);
    MpCplx nx = mp_add(mp_mul(f.a, y), p);
    y = x;
    x = nx;
  }
}

inline MpMat2 mp_word_jacobian_step(const std::vector<MpFactor>& fs, MpCplx& x,
                                    MpCplx& y) {
  MpMat2 J;
  J.a = mp_one();
  J.d = mp_one();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    const MpFactor& f = *it;
    MpCplx p = f.coeff.back(), dp;
    for (std::size_t j = f.coeff.size() - 1; j-- > 0;) {
      dp = mp_add(mp_mul(dp, x), p);
      p = mp_add(mp_mul(p, x), f.coeff[j]);
    }
    MpMat2 Jf;
    Jf.a = dp;
    Jf.b = f.a;
    Jf.c = mp_one();
    J = mp_mat_mul(Jf, J);
    MpCplx nx = mp_add(mp_mul(f.a, y), p);
    y = x;
    x = nx;
  }
  return J;
}

/// Newton for H^n(z) = z at kMpPrec bits from a double-accurate seed.
/// Returns the final residual max(|H^n(z) - z|) at the polished point.
inline double mp_polish(const std::vector<MpFactor>& fs, long n, MpCplx& zx,
                        MpCplx& zy) {
  for (int it = 0; it < 48; ++it) {
    MpCplx wx = zx, wy = zy;
    MpMat2 J;
    J.a = mp_one();
    J.d = mp_one();
    for (long k = 0; k < n; ++k)
      J = mp_mat_mul(mp_word_jacobian_step(fs, wx, wy), J);
    MpCplx gx = mp_sub(wx, zx), gy = mp_sub(wy, zy);
    double res = std::max(mp_abs(gx), mp_abs(gy));
    double sc = std::max({1.0, mp_abs(zx), mp_abs(zy)});
    if (res <= 1e-60 * sc) break;
    MpMat2 JG = J;
    JG.a.re -= 1;
    JG.d.re -= 1;
    MpCplx det = mp_sub(mp_mul(JG.a, JG.d), mp_mul(JG.b, JG.c));
    if (mp_abs(det) < 1e-40) break;  // parabolic: keep as-is
    zx = mp_sub(zx, mp_div(mp_sub(mp_mul(JG.d, gx), mp_mul(JG.b, gy)), det));
    zy = mp_sub(zy, mp_div(mp_sub(mp_mul(JG.a, gy), mp_mul(JG.c, gx)), det));
  }
  MpCplx wx = zx, wy = zy;
  for (long k = 0; k < n; ++k) mp_apply_word(fs, wx, wy);
  return std::max(mp_abs(mp_sub(wx, zx)), mp_abs(mp_sub(wy, zy)));
}

}  // namespace detail

/// All orbits of exact minimal period up to max_period.  Requires the
/// composed iterate degree d^max_period to stay at or below 1000.
inline std::vector<PeriodicOrbit> periodic_points(
    const std::vector<HenonFactor>& word, long max_period,
    const PeriodicOptions& opt = {}) {
  if (word.empty()) throw error(errc::precondition, "empty factor word");
  if (max_period < 1)
    throw error(errc::precondition, "max_period must be at least 1");
  const FieldSpecPtr& s = word.front().a.spec();
  detail::MpCplx theta;
  if (s->degree() > 1) theta = detail::mp_generator(s);
  std::vector<detail::MpFactor> mpw = detail::mp_embed_factors(word, theta);

  // Degree guard before any composition work.
  Int degn = 1;
  for (const HenonFactor& h : word) degn *= h.p.degree();
  Int dd = 1;
  for (long n = 0; n < max_period; ++n) {
    dd *= degn;
    if (dd > 1000)
      throw error(errc::precondition,
                  "iterate degree exceeds 1000; lower max_period");
  }

  PolyMap H = word.front().to_polymap();
  for (std::size_t i = 1; i < word.size(); ++i)
    H = compose_maps(H, word[i].to_polymap());

  std::vector<PeriodicOrbit> orbits;
  PolyMap Hn = PolyMap::identity(s);
  for (long n = 1; n <= max_period; ++n) {
    Hn = (n == 1) ? H : compose_maps(H, Hn);
    PlanePoly Px = Hn.p() - PlanePoly::var_x(s);
    PlanePoly Qy = Hn.q() - PlanePoly::var_y(s);
    PlanePoly elim = resultant_y(Px, Qy);
    if (elim.is_zero())
      throw error(errc::ill_conditioned,
                  "degenerate eliminant: fixed locus is not finite");
    if (elim.is_constant()) continue;  // no fixed points of this iterate

    std::vector<cplx> xc;
    for (const FieldElement& c : elim.univariate_x()) xc.push_back(c.embed());
    for (const cplx& c : xc)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw error(errc::ill_conditioned,
                    "eliminant coefficient overflows double precision");
    std::vector<cplx> xroots = univariate_roots(xc);

    const std::vector<std::vector<detail::MpCplx>> px_rows =
        detail::mp_rows(Px, theta);
    const std::vector<std::vector<detail::MpCplx>> qy_rows =
        detail::mp_rows(Qy, theta);

    std::vector<detail::MpCplx> elim_mp;
    for (const FieldElement& c : elim.univariate_x())
      elim_mp.push_back(detail::mp_embed(c, theta));

    // Back-substitute each abscissa and certify.  The abscissa is pinned
    // by 1D Newton against the exact eliminant and the ordinate by 1D
    // Newton against the exact slice; since H^n(z) - z is literally
    // (Px, Qy)(z), two pinned univariate roots already drive the word-walk
    // residual to working precision.  A joint 2D solve is kept only as a
    // fallback: its Jacobian is near-singular when periodic points
    // cluster, and a full step can then fling a good seed away.
    std::vector<std::pair<cplx, cplx>> found;
    auto note = [&](cplx x, cplx y) {
      for (const auto& q : found)
        if (std::abs(q.first - x) + std::abs(q.second - y) <= opt.tol) return;
      found.emplace_back(x, y);
    };
    auto certified = [&](double res, const cplx& x, const cplx& y) {
      return std::isfinite(x.real()) && std::isfinite(x.imag()) &&
             std::isfinite(y.real()) && std::isfinite(y.imag()) &&
             res <= opt.newton_tol * std::max({1.0, std::abs(x), std::abs(y)});
    };
    for (cplx x0 : xroots) {
      if (!std::isfinite(x0.real()) || !std::isfinite(x0.imag())) continue;
      detail::MpCplx X0(x0);
      detail::mp_polish_1d(elim_mp, X0);
      std::vector<detail::MpCplx> slice = detail::mp_slice_y(px_rows, X0);
      if (slice.size() <= 1)  // first component degenerate in y here
        slice = detail::mp_slice_y(qy_rows, X0);
      if (slice.size() <= 1) continue;
      std::vector<cplx> ycoef;
      ycoef.reserve(slice.size());
      bool slice_ok = true;
      for (const detail::MpCplx& v : slice) {
        cplx c = v.to_cplx();
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
          slice_ok = false;
        ycoef.push_back(c);
      }
      if (!slice_ok) continue;
      for (cplx y0 : univariate_roots(ycoef)) {
        if (!std::isfinite(y0.real()) || !std::isfinite(y0.imag())) continue;
        detail::MpCplx Y0(y0);
        detail::mp_polish_1d(slice, Y0);
        detail::MpCplx wx = X0, wy = Y0;
        for (long k = 0; k < n; ++k) detail::mp_apply_word(mpw, wx, wy);
        double res = std::max(detail::mp_abs(detail::mp_sub(wx, X0)),
                              detail::mp_abs(detail::mp_sub(wy, Y0)));
        cplx zx = X0.to_cplx(), zy = Y0.to_cplx();
        if (!certified(res, zx, zy)) {
          detail::MpCplx ax = X0, ay = Y0;
          res = detail::mp_polish(mpw, n, ax, ay);
          zx = ax.to_cplx();
          zy = ay.to_cplx();
          if (!certified(res, zx, zy)) continue;
        }
        note(zx, zy);
      }
    }

    // Drop points whose minimal period divides n properly.  The walk runs
    // at high precision: its outcome is compared at tolerances far below
    // the double evaluation noise of large-coefficient words.
    std::vector<std::pair<cplx, cplx>> fresh;
    for (const auto& z : found) {
      bool lower = false;
      for (long m = 1; m < n && !lower; ++m) {
        if (n % m != 0) continue;
        detail::MpCplx wx(z.first), wy(z.second);
        for (long k = 0; k < m; ++k) detail::mp_apply_word(mpw, wx, wy);
        cplx w(wx.to_cplx()), v(wy.to_cplx());
        double sc = std::max({1.0, std::abs(z.first), std::abs(z.second)});
        if (std::max(std::abs(w - z.first), std::abs(v - z.second)) <=
            10.0 * opt.tol * sc)
          lower = true;
      }
      if (!lower) fresh.push_back(z);
    }

    // Group into orbits by forward application.
    auto key_less = [](const std::pair<cplx, cplx>& a,
                       const std::pair<cplx, cplx>& b) {
      auto ka = std::array<double, 4>{a.first.real(), a.first.imag(),
                                      a.second.real(), a.second.imag()};
      auto kb = std::array<double, 4>{b.first.real(), b.first.imag(),
                                      b.second.real(), b.second.imag()};
      return ka < kb;
    };
    std::sort(fresh.begin(), fresh.end(), key_less);
    std::vector<bool> used(fresh.size(), false);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      if (used[i]) continue;
      PeriodicOrbit orb;
      orb.period = n;
      cplx cx = fresh[i].first, cy = fresh[i].second;
      for (long k = 0; k < n; ++k) {
        // Snap to the polished representative when one is close.
        std::size_t best = fresh.size();
        double bestd = 1e300;
        for (std::size_t j = 0; j < fresh.size(); ++j) {
          double dist =
              std::abs(fresh[j].first - cx) + std::abs(fresh[j].second - cy);
          if (dist < bestd) {
            bestd = dist;
            best = j;
          }
        }
        double sc = std::max({1.0, std::abs(cx), std::abs(cy)});
        if (best < fresh.size() && bestd <= 100.0 * opt.tol * sc) {
          used[best] = true;
          cx = fresh[best].first;
          cy = fresh[best].second;
        }
        orb.points.emplace_back(cx, cy);
        detail::MpCplx wx(cx), wy(cy);
        detail::mp_apply_word(mpw, wx, wy);
        cx = wx.to_cplx();
        cy = wy.to_cplx();
      }
      // Residual of the full cycle at the stored representative, measured
      // at high precision so it reflects the points as reported.
      {
        detail::MpCplx wx(orb.points[0].first), wy(orb.points[0].second);
        for (long k = 0; k < n; ++k) detail::mp_apply_word(mpw, wx, wy);
        orb.residual = std::max(
            detail::mp_abs(
                detail::mp_sub(wx, detail::MpCplx(orb.points[0].first))),
            detail::mp_abs(
                detail::mp_sub(wy, detail::MpCplx(orb.points[0].second))));
      }
      // Multipliers from the ordered Jacobian product along the orbit,
      // accumulated at high precision from a re-polished base point so the
      // double rounding of the stored points does not enter through p''.
      detail::MpCplx px(orb.points[0].first), py(orb.points[0].second);
      detail::mp_polish(mpw, n, px, py);
      detail::MpMat2 M;
      M.a = detail::mp_one();
      M.d = detail::mp_one();
      for (long k = 0; k < n; ++k)
        M = detail::mp_mat_mul(detail::mp_word_jacobian_step(mpw, px, py), M);
      auto [l1, l2] = detail::eigenvalues2(detail::Mat2{
          M.a.to_cplx(), M.b.to_cplx(), M.c.to_cplx(), M.d.to_cplx()});
      orb.multiplier1 = l1;
      orb.multiplier2 = l2;
      orb.type = detail::orbit_type(l1, l2, 1e-8);
      orbits.push_back(std::move(orb));
    }
  }
  return orbits;
}

/// Periodic orbits of an arbitrary loxodromic automorphism: classify, run
/// the word machinery, and pull points back through the conjugator.
/// Multipliers and periods are conjugation invariants and carry over.
inline std::vector<PeriodicOrbit> periodic_points(
    const PolyMap& f, long max_period, const PeriodicOptions& opt = {}) {
  ClassificationResult c = classify(f);
  if (c.cls != MapClass::loxodromic)
    throw error(errc::precondition,
                "periodic point enumeration needs a loxodromic map");
  std::vector<PeriodicOrbit> orbits =
      periodic_points(c.henon->factors, max_period, opt);
  const PolyMap& back = c.henon->conjugator_inverse;
  for (PeriodicOrbit& orb : orbits)
    for (auto& z : orb.points) z = back.eval_complex(z.first, z.second);
  return orbits;
}

/// Flat multiset of the multipliers of all orbits of exact period p,
/// deterministically ordered.
inline std::vector<cplx> multiplier_spectrum(
    const std::vector<HenonFactor>& word, long period,
    const PeriodicOptions& opt = {}) {
  std::vector<cplx> out;
  for (const PeriodicOrbit& orb : periodic_points(word, period, opt)) {
    if (orb.period != period) continue;
    out.push_back(orb.multiplier1);
    out.push_back(orb.multiplier2);
  }
  std::sort(out.begin(), out.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

/// Greedy multiset matching distance: max over matched pairs of |a - b|,
/// or infinity when the sizes differ.  Robust against sort instabilities
/// near ties.
inline double spectrum_match_distance(std::vector<cplx> a,
                                      std::vector<cplx> b) {
  if (a.size() != b.size())
    return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  std::vector<bool> used(b.size(), false);
  for (const cplx& v : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      double dist = std::abs(v - b[j]);
      if (dist < best) {
        best = dist;
        bi = j;
      }
    }
    if (bi == b.size()) return std::numeric_limits<double>::infinity();
    used[bi] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace planeauto

#endif  // PLANEAUTO_PERIODIC_HPP
