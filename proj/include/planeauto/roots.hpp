#ifndef PLANEAUTO_ROOTS_HPP
#define PLANEAUTO_ROOTS_HPP

/// Numeric root isolation for univariate complex polynomials: companion
/// matrix eigenvalues up to degree 200, Aberth iteration beyond, always
/// followed by a Newton polish.  Coefficients ascending, c[0] + c[1] z + ...

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "planeauto/errors.hpp"

namespace planeauto {

using cplx = std::complex<double>;

inline cplx poly_eval(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

inline std::vector<cplx> poly_derivative(const std::vector<cplx>& c) {
  std::vector<cplx> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(double(i) * c[i]);
  return d;
}

namespace detail {

inline std::vector<cplx> companion_roots(const std::vector<cplx>& c) {
  const std::size_t n = c.size() - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw error(errc::root_isolation, "companion eigensolver did not converge");
  }
  std::vector<cplx> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

inline std::vector<cplx> aberth_roots(const std::vector<cplx>& c) {
  const std::size_t n = c.size() - 1;
  const std::vector<cplx> dc = poly_derivative(c);
  // Cauchy bound on root magnitudes.
  double bound = 0;
  for (std::size_t i = 0; i < n; ++i)
    bound = std::max(bound, std::abs(c[i] / c[n]));
  bound += 1.0;
  std::vector<cplx> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    double ang = 2.0 * M_PI * double(i) / double(n) + 0.4;
    z[i] = 0.5 * bound * cplx(std::cos(ang), std::sin(ang));
  }
  for (int pass = 0; pass < 400; ++pass) {
    double moved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx p = poly_eval(c, z[i]);
      cplx dp = poly_eval(dc, z[i]);
      if (dp == cplx(0)) {
        z[i] += cplx(1e-8, 1e-8);
        continue;
      }
      cplx newton = p / dp;
      cplx sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      cplx w = newton / (1.0 - newton * sum);
      z[i] -= w;
      moved = std::max(moved, std::abs(w) / (1.0 + std::abs(z[i])));
    }
    if (moved < 1e-15) break;
  }
  return z;
}

}  // namespace detail

/// All complex roots (with multiplicity) of a nonzero polynomial.
inline std::vector<cplx> univariate_roots(std::vector<cplx> c) {
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  if (c.size() == 2) return {-c[0] / c[1]};
  std::vector<cplx> roots = (c.size() - 1 <= 200) ? detail::companion_roots(c)
                                                  : detail::aberth_roots(c);
  // Newton polish; keep the unpolished value if Newton wanders.
  const std::vector<cplx> dc = poly_derivative(c);
  for (cplx& r : roots) {
    cplx best = r;
    double besta = std::abs(poly_eval(c, r));
    cplx cur = r;
    for (int it = 0; it < 12; ++it) {
      cplx dp = poly_eval(dc, cur);
      if (dp == cplx(0)) break;
      cur -= poly_eval(c, cur) / dp;
      double a = std::abs(poly_eval(c, cur));
      if (a < besta) {
        besta = a;
        best = cur;
      }
    }
    r = best;
  }
  return roots;
}

}  // namespace planeauto

#endif  // PLANEAUTO_ROOTS_HPP
