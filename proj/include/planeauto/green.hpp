#ifndef PLANEAUTO_GREEN_HPP
#define PLANEAUTO_GREEN_HPP

/// Escape-rate Green functions of compositions of Henon-type factors.
///
/// For H = h_1 o ... o h_s with h_i = (a_i y + p_i(x), x), deg p_i = d_i,
/// the forward Green function G+ (z) = lim d^{-n} log+ ||H^n z|| is computed
/// by orbit tracking with certified constants derived from the coefficients:
///
///   S_i = |a_i| + sum of |c_ij| below the lead,  l_i = |lead_i|,
///   R_i = max(1, 2 S_i / l_i, 4 / l_i),          R0  = max_i R_i.
///
/// The sector V+ = { |x| >= |y|, |x| >= R0 } is forward invariant, each
/// factor multiplies |x| by at least 2 there, and
/// (l_i/2) |x|^{d_i} <= |x'| <= (l_i + S_i) |x|^{d_i}.  Weighting factor i
/// by the product of the degrees applied after it gives per-step constants
/// used in the reported bounds:
///
///   Cdev  : tail bound   |G+ - d^{-n} log |x_n||  <=  Cdev d^{-n} / (d-1),
///   C_up  : global bound  G+ <= log+ ||z|| + C_up,
///   W_ell : exact log-lead sum, summing the tail in closed form once the
///           orbit is so deep in V+ that lower-order terms are negligible.
///
/// G- runs the same machinery on the reversed word of inverse factors:
/// h^{-1} = swap o ((1/a) y - p(x)/a, x) o swap, so G-(z) = G+ of the
/// reversed hat word at the swapped point.

#include <cmath>
#include <complex>
#include <vector>

#include "planeauto/automorphism.hpp"

namespace planeauto {

struct GreenEstimate {
  double value = 0.0;       // estimate of G at the point, >= 0
  long iterations_used = 0; // full word applications performed
  double error_bound = 0.0; // |true G - value| <= error_bound
  bool escaped = false;     // orbit certified to escape
};

struct GreenOptions {
  long max_iter = 200;
  double escape_radius = 0.0;  // 0: use the certified radius R0
};

namespace detail {

struct NumFactor {
  cplx a;
  std::vector<cplx> coeff;  // p_i, ascending powers
  long d = 0;
  double ell = 0.0;  // |lead|
  double S = 0.0;    // |a| + sum |c_j|, j < d
};

struct KernelData {
  std::vector<NumFactor> factors;  // factors[0] outermost
  double d = 1.0;                  // total degree, product of d_i
  double R0 = 1.0;
  double W_ell = 0.0;  // weighted sum of log l_i
  double Cdev = 0.0;   // weighted sum of max(|log m_i|, |log M_i|)
  double C_up = 0.0;   // W_M / (d - 1)
  double W_delta = 0.0;  // weighted sum of S_i / l_i (phase-2 slack)
};

inline KernelData build_kernel(const std::vector<NumFactor>& fs) {
  KernelData k;
  k.factors = fs;
  double weight = 1.0;  // product of degrees of factors applied after i
  double W_M = 0.0;
  for (const NumFactor& f : fs) {
    if (!(f.ell > 0.0) || !std::isfinite(f.S) || !(std::abs(f.a) > 0.0))
      throw error(errc::ill_conditioned,
                  "factor coefficients do not embed to usable doubles");
    double Ri = std::max({1.0, 2.0 * f.S / f.ell, 4.0 / f.ell});
    k.R0 = std::max(k.R0, Ri);
    double m = f.ell / 2.0, M = f.ell + f.S;
    k.W_ell += weight * std::log(f.ell);
    k.Cdev += weight * std::max(std::fabs(std::log(m)), std::fabs(std::log(M)));
    W_M += weight * std::log(std::max(M, 1.0));
    k.W_delta += weight * (f.S / f.ell);
    weight *= double(f.d);
  }
  k.d = weight;
  if (!(k.d >= 2.0))
    throw error(errc::precondition, "word must have total degree at least 2");
  k.C_up = W_M / (k.d - 1.0);
  return k;
}

inline void apply_word(const std::vector<NumFactor>& fs, cplx& x, cplx& y) {
  // factors[0] is outermost, so apply from the back.
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    const NumFactor& f = *it;
    cplx acc = f.coeff.back();
    for (std::size_t j = f.coeff.size() - 1; j-- > 0;)
      acc = acc * x + f.coeff[j];
    cplx nx = f.a * y + acc;
    y = x;
    x = nx;
  }
}

// Amplitude beyond which lower-order factor terms are below 1e-13 even
// after weighting; one word application from here cannot overflow for any
// realistic degree (1e15^d stays finite for d <= 20).
constexpr double kDeepAmplitude = 1e15;

inline GreenEstimate run_green(const KernelData& k, cplx x, cplx y,
                               const GreenOptions& opt) {
  if (!std::isfinite(std::abs(x)) || !std::isfinite(std::abs(y)))
    throw error(errc::precondition, "green function at a non-finite point");
  if (opt.max_iter < 1)
    throw error(errc::precondition, "max_iter must be positive");
  double R = std::max(k.R0, opt.escape_radius);
  const double logd = std::log(k.d);

  auto in_sector = [&](const cplx& px, const cplx& py) {
    return std::abs(px) >= std::abs(py) && std::abs(px) >= R;
  };

  GreenEstimate est;
  long n = 0;
  while (true) {
    double ax = std::abs(x);
    if (in_sector(x, y) && ax >= kDeepAmplitude) {
      // Closed-form tail: u_m telescopes with exact increment W_ell d^{-m}.
      double scale = std::exp(-double(n) * logd);
      double model_slack = 2.0 * (k.W_delta / kDeepAmplitude) / (k.d - 1.0);
      est.value = scale * (std::log(ax) + k.W_ell / (k.d - 1.0));
      est.error_bound = scale * model_slack +
                        1e-12 * (1.0 + std::fabs(est.value)) * double(n + 1);
      est.escaped = true;
      est.iterations_used = n;
      if (est.value < 0.0) est.value = 0.0;
      return est;
    }
    if (n >= opt.max_iter) break;
    apply_word(k.factors, x, y);
    ++n;
    if (!std::isfinite(std::abs(x)) || !std::isfinite(std::abs(y)))
      throw error(errc::ill_conditioned,
                  "orbit overflowed before certification");
  }

  est.iterations_used = n;
  double ax = std::abs(x);
  double scale = std::exp(-double(n) * logd);
  if (in_sector(x, y)) {
    // Escaping, but the budget ran out before the deep zone: report the
    // partial sum with the deviation tail bound.
    est.value = std::max(0.0, scale * std::log(ax));
    est.error_bound = k.Cdev * scale / (k.d - 1.0) +
                      1e-12 * (1.0 + std::fabs(est.value)) * double(n + 1);
    est.escaped = true;
    return est;
  }
  // No escape within budget: G = d^{-n} G(H^n z) <= d^{-n}(log+ ||.|| + C_up).
  est.value = 0.0;
  est.escaped = false;
  double lognorm = std::log(std::max({1.0, ax, std::abs(y)}));
  est.error_bound = scale * (lognorm + k.C_up);
  return est;
}

inline std::vector<NumFactor> embed_factors(
    const std::vector<HenonFactor>& hs) {
  std::vector<NumFactor> out;
  for (const HenonFactor& h : hs) {
    NumFactor f;
    long d = h.p.degree();
    if (d < 2)
      throw error(errc::precondition, "factor degree must be at least 2");
    f.d = d;
    f.a = h.a.embed();
    f.coeff.assign(std::size_t(d) + 1, cplx(0.0, 0.0));
    for (const auto& [m, c] : h.p.terms()) {
      if (m.j != 0)
        throw error(errc::precondition, "factor shift must depend on x only");
      f.coeff[std::size_t(m.i)] = c.embed();
    }
    f.S = std::abs(f.a);
    for (long j = 0; j < d; ++j) f.S += std::abs(f.coeff[std::size_t(j)]);
    f.ell = std::abs(f.coeff[std::size_t(d)]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

/// Numeric kernel for both Green functions of a composition of factors.
class GreenKernel {
 public:
  explicit GreenKernel(const std::vector<HenonFactor>& factors) {
    if (factors.empty())
      throw error(errc::precondition, "empty factor word");
    std::vector<detail::NumFactor> fwd = detail::embed_factors(factors);
    plus_ = detail::build_kernel(fwd);
    // Hat word: reversed inverse factors (1/a_i, -p_i / a_i).
    std::vector<detail::NumFactor> bwd;
    for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) {
      detail::NumFactor g = *it;
      g.a = 1.0 / g.a;
      for (auto& c : g.coeff) c = -c * g.a;
      g.ell = std::abs(g.coeff.back());
      g.S = std::abs(g.a);
      for (std::size_t j = 0; j + 1 < g.coeff.size(); ++j)
        g.S += std::abs(g.coeff[j]);
      bwd.push_back(std::move(g));
    }
    minus_ = detail::build_kernel(bwd);
  }

  explicit GreenKernel(const HenonForm& form) : GreenKernel(form.factors) {}

  double degree() const { return plus_.d; }
  double escape_radius() const { return std::max(plus_.R0, minus_.R0); }
  double c_upper_plus() const { return plus_.C_up; }
  double c_upper_minus() const { return minus_.C_up; }
  double c_dev_plus() const { return plus_.Cdev; }
  double c_dev_minus() const { return minus_.Cdev; }

  /// Constant C with |max(G+, G-) - log ||z||_2| <= C whenever
  /// ||z||_inf >= escape_radius().
  double criterion_constant() const {
    double half_log2 = 0.5 * std::log(2.0);
    return std::max({plus_.Cdev / (plus_.d - 1.0) + half_log2,
                     minus_.Cdev / (minus_.d - 1.0) + half_log2,
                     plus_.C_up, minus_.C_up}) +
           half_log2;
  }

  GreenEstimate plus(cplx x, cplx y, const GreenOptions& opt = {}) const {
    return detail::run_green(plus_, x, y, opt);
  }
  /// G- at (x, y) is G+ of the hat word at the swapped point.
  GreenEstimate minus(cplx x, cplx y, const GreenOptions& opt = {}) const {
    return detail::run_green(minus_, y, x, opt);
  }

 private:
  detail::KernelData plus_, minus_;
};

inline GreenEstimate green_plus(const HenonForm& form, cplx x, cplx y,
                                const GreenOptions& opt = {}) {
  return GreenKernel(form).plus(x, y, opt);
}

inline GreenEstimate green_minus(const HenonForm& form, cplx x, cplx y,
                                 const GreenOptions& opt = {}) {
  return GreenKernel(form).minus(x, y, opt);
}

// ---------------------------------------------------------------------------
// Raster sampling over an affine chart of a complex plane slice.

struct ChartSpec {
  cplx ox, oy;  // origin
  cplx ux, uy;  // first direction
  cplx vx, vy;  // second direction
  double r = 1.0;  // parameter box [-r, r]^2
};

struct RasterResult {
  long nx = 0, ny = 0;
  std::vector<double> values;  // row-major: values[iy * nx + ix]
  double g_max = 0.0;
};

inline RasterResult raster_slice(const GreenKernel& kernel,
                                 const ChartSpec& chart, long nx, long ny,
                                 const GreenOptions& opt = {}) {
  if (!(chart.r > 0.0) || !std::isfinite(chart.r))
    throw error(errc::invalid_radius, "chart radius must be positive");
  if (nx < 2 || ny < 2)
    throw error(errc::precondition, "raster needs at least 2x2 samples");
  if (nx > 8192 || ny > 8192)
    throw error(errc::resource_cap, "raster exceeds 8192 samples per axis");
  resource::check_budget(std::size_t(nx) * std::size_t(ny) * sizeof(double),
                         "raster grid");
  RasterResult out;
  out.nx = nx;
  out.ny = ny;
  out.values.resize(std::size_t(nx) * std::size_t(ny));
  for (long iy = 0; iy < ny; ++iy) {
    double t = -chart.r + 2.0 * chart.r * double(iy) / double(ny - 1);
    for (long ix = 0; ix < nx; ++ix) {
      double st = -chart.r + 2.0 * chart.r * double(ix) / double(nx - 1);
      cplx px = chart.ox + st * chart.ux + t * chart.vx;
      cplx py = chart.oy + st * chart.uy + t * chart.vy;
      double g = kernel.plus(px, py, opt).value;
      out.values[std::size_t(iy) * std::size_t(nx) + std::size_t(ix)] = g;
      out.g_max = std::max(out.g_max, g);
    }
  }
  return out;
}

}  // namespace planeauto

#endif  // PLANEAUTO_GREEN_HPP
