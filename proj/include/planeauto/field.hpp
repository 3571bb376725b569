#ifndef PLANEAUTO_FIELD_HPP
#define PLANEAUTO_FIELD_HPP

/// Exact scalar arithmetic over Q or a simple extension Q(theta), theta
/// given by a monic integer minimal polynomial of degree >= 2.
/// Irreducibility of the minimal polynomial is a caller contract; the
/// constructor only screens for linear and quadratic integer factors
/// (coefficient bound 10^6, enumeration capped).  Elements are immutable
/// coefficient vectors in the power basis, always reduced mod the minpoly.

#include <algorithm>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planeauto/errors.hpp"
#include "planeauto/rational.hpp"
#include "planeauto/roots.hpp"

namespace planeauto {

namespace detail {

/// Dense univariate polynomials over Q, ascending coefficients.
using QPoly = std::vector<Rat>;

inline void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  qpoly_trim(out);
  return out;
}

inline QPoly qpoly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qpoly_trim(a);
  return a;
}

/// Remainder of a mod b (b nonzero).
inline QPoly qpoly_rem(QPoly a, const QPoly& b) {
  qpoly_trim(a);
  while (a.size() >= b.size()) {
    Rat q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    qpoly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

/// Extended Euclid: returns (g, u) with u*a == g (mod b), g = gcd(a, b).
inline std::pair<QPoly, QPoly> qpoly_half_egcd(QPoly a, QPoly b) {
  QPoly u0 = {Rat(1)}, u1 = {};
  qpoly_trim(a);
  qpoly_trim(b);
  while (!b.empty()) {
    // a = q b + r
    QPoly r = a, q;
    qpoly_trim(r);
    while (r.size() >= b.size() && !r.empty()) {
      Rat c = r.back() / b.back();
      std::size_t shift = r.size() - b.size();
      if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
      q[shift] += c;
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
      qpoly_trim(r);
    }
    QPoly u2 = qpoly_sub(u0, qpoly_mul(q, u1));
    u0 = std::move(u1);
    u1 = std::move(u2);
    a = std::move(b);
    b = std::move(r);
  }
  return {a, u0};
}

}  // namespace detail

/// Field description; immutable and shared by every value built over it.
class FieldSpec {
 public:
  /// The rational field Q.
  static std::shared_ptr<const FieldSpec> rationals() {
    static const std::shared_ptr<const FieldSpec> q(new FieldSpec());
    return q;
  }

  /// Simple extension by a monic integer minpoly (ascending, last entry 1,
  /// degree >= 2).  root_index selects an embedding among the complex roots
  /// sorted by descending real part, ties by descending imaginary part;
  /// the default (index 0) is the root with the largest real part.
  static std::shared_ptr<const FieldSpec> extension(std::vector<Int> minpoly,
                                                    std::size_t root_index = 0) {
    return std::shared_ptr<const FieldSpec>(
        new FieldSpec(std::move(minpoly), root_index));
  }

  bool is_rationals() const { return minpoly_.empty(); }
  std::size_t degree() const { return is_rationals() ? 1 : minpoly_.size() - 1; }
  const std::vector<Int>& minpoly() const { return minpoly_; }
  std::size_t root_index() const { return root_index_; }
  cplx embedded_root() const { return embedded_root_; }

  bool operator==(const FieldSpec& o) const {
    return minpoly_ == o.minpoly_ && root_index_ == o.root_index_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

 private:
  FieldSpec() = default;

  FieldSpec(std::vector<Int> minpoly, std::size_t root_index)
      : minpoly_(std::move(minpoly)), root_index_(root_index) {
    if (minpoly_.size() < 3)
      throw error(errc::precondition, "extension minpoly must have degree >= 2");
    if (minpoly_.back() != 1)
      throw error(errc::precondition, "extension minpoly must be monic");
    if (root_index_ >= minpoly_.size() - 1)
      throw error(errc::precondition, "embedding root index out of range");
    screen_irreducibility();
    isolate_root();
  }

  void screen_irreducibility() const {
    // Linear factors: integer roots divide the constant term.
    if (minpoly_.front() == 0)
      throw error(errc::precondition, "minpoly reducible: root 0");
    Int c0 = abs(minpoly_.front());
    std::size_t tested = 0;
    for (Int d = 1; d <= 1000000 && d * d <= c0 && tested < 4000; ++d) {
      if (c0 % d != 0) continue;
      const Int cands[4] = {d, Int(-d), Int(c0 / d), Int(-(c0 / d))};
      for (const Int& cand : cands) {
        if (cand > 1000000 || cand < -1000000) continue;
        ++tested;
        Int acc = 0;
        for (std::size_t i = minpoly_.size(); i-- > 0;)
          acc = acc * cand + minpoly_[i];
        if (acc == 0)
          throw error(errc::precondition, "minpoly reducible: rational root " +
                                              cand.get_str());
      }
    }
    // Quadratic integer factors x^2 + b x + c for degree >= 4 (capped probe).
    std::size_t m = minpoly_.size() - 1;
    if (m < 4) return;
    Int maxabs = 0;
    for (const Int& c : minpoly_) maxabs = std::max(maxabs, Int(abs(c)));
    long bbound = (maxabs < 50) ? maxabs.get_si() + 1 : 50;
    std::size_t probes = 0;
    for (Int d = 1; d <= 1000000 && d * d <= c0 && probes < 4000; ++d) {
      if (c0 % d != 0) continue;
      const Int cands[4] = {d, Int(-d), Int(c0 / d), Int(-(c0 / d))};
      for (const Int& cc : cands) {
        if (abs(cc) > 1000000) continue;
        for (long b = -bbound; b <= bbound; ++b) {
          ++probes;
          if (divisible_by_quadratic(b, cc))
            throw error(errc::precondition,
                        "minpoly reducible: quadratic factor found");
        }
      }
    }
  }

  bool divisible_by_quadratic(long b, const Int& c) const {
    // Synthetic division by x^2 + b x + c over Z.
    std::vector<Int> r(minpoly_.begin(), minpoly_.end());
    for (std::size_t i = r.size(); i-- > 2;) {
      Int q = r[i];
      r[i - 1] -= q * b;
      r[i - 2] -= q * c;
      r[i] = 0;
    }
    return r[0] == 0 && r[1] == 0;
  }

  void isolate_root() {
    std::vector<cplx> c(minpoly_.size());
    for (std::size_t i = 0; i < minpoly_.size(); ++i)
      c[i] = cplx(minpoly_[i].get_d(), 0.0);
    std::vector<cplx> roots = univariate_roots(c);
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
      double tol = 1e-9 * (1.0 + std::abs(a) + std::abs(b));
      if (std::abs(a.real() - b.real()) > tol) return a.real() > b.real();
      return a.imag() > b.imag();
    });
    embedded_root_ = roots.at(root_index_);
    double scale = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i)
      scale += std::abs(c[i]) * std::pow(std::abs(embedded_root_), double(i));
    if (std::abs(poly_eval(c, embedded_root_)) > 1e-10 * scale)
      throw error(errc::root_isolation,
                  "embedding root failed the residual check");
  }

  std::vector<Int> minpoly_;   // empty <=> Q
  std::size_t root_index_ = 0;
  cplx embedded_root_ = 0;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

inline void require_same_spec(const FieldSpec& a, const FieldSpec& b,
                              const char* where) {
  if (a != b) throw error(errc::spec_mismatch, where);
}

/// Immutable element of the field described by its spec.
class FieldElement {
 public:
  FieldElement() : spec_(FieldSpec::rationals()), c_(1, Rat(0)) {}

  FieldElement(FieldSpecPtr spec, Rat value) : spec_(std::move(spec)) {
    c_.assign(spec_->degree(), Rat(0));
    c_[0] = std::move(value);
    canonicalize();
  }

  /// Coefficients in the power basis 1, theta, ..., theta^(m-1).
  FieldElement(FieldSpecPtr spec, std::vector<Rat> coeffs)
      : spec_(std::move(spec)), c_(std::move(coeffs)) {
    if (c_.size() != spec_->degree())
      throw error(errc::precondition, "coefficient vector length mismatch");
    canonicalize();
  }

  static FieldElement zero(const FieldSpecPtr& spec) {
    return FieldElement(spec, Rat(0));
  }
  static FieldElement one(const FieldSpecPtr& spec) {
    return FieldElement(spec, Rat(1));
  }
  /// The generator theta (precondition: extension field).
  static FieldElement generator(const FieldSpecPtr& spec) {
    if (spec->is_rationals())
      throw error(errc::precondition, "Q has no generator element");
    std::vector<Rat> c(spec->degree(), Rat(0));
    c[1] = 1;
    return FieldElement(spec, std::move(c));
  }

  const FieldSpecPtr& spec() const { return spec_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  const Rat& as_rational() const {
    if (!is_rational())
      throw error(errc::precondition, "element is not rational");
    return c_[0];
  }

  bool operator==(const FieldElement& o) const {
    return *spec_ == *o.spec_ && c_ == o.c_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement operator-() const {
    std::vector<Rat> c = c_;
    for (Rat& x : c) x = -x;
    return FieldElement(spec_, std::move(c), no_check{});
  }

  FieldElement operator+(const FieldElement& o) const {
    require_same_spec(*spec_, *o.spec_, "field addition");
    std::vector<Rat> c = c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return FieldElement(spec_, std::move(c), no_check{});
  }

  FieldElement operator-(const FieldElement& o) const {
    require_same_spec(*spec_, *o.spec_, "field subtraction");
    std::vector<Rat> c = c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return FieldElement(spec_, std::move(c), no_check{});
  }

  FieldElement operator*(const FieldElement& o) const {
    require_same_spec(*spec_, *o.spec_, "field multiplication");
    if (spec_->is_rationals())
      return FieldElement(spec_, std::vector<Rat>{c_[0] * o.c_[0]}, no_check{});
    detail::QPoly prod = detail::qpoly_mul(c_, o.c_);
    detail::QPoly red = detail::qpoly_rem(std::move(prod), minpoly_q());
    red.resize(spec_->degree(), Rat(0));
    return FieldElement(spec_, std::move(red), no_check{});
  }

  /// Multiplicative inverse via extended Euclid against the minpoly.
  FieldElement inverse() const {
    if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
    if (spec_->is_rationals())
      return FieldElement(spec_, std::vector<Rat>{1 / c_[0]}, no_check{});
    detail::QPoly a = c_;
    detail::qpoly_trim(a);
    auto [g, u] = detail::qpoly_half_egcd(a, minpoly_q());
    if (g.size() != 1)
      throw error(errc::precondition,
                  "minpoly reducible: element has no inverse");
    for (Rat& x : u) x /= g[0];
    detail::QPoly red = detail::qpoly_rem(std::move(u), minpoly_q());
    red.resize(spec_->degree(), Rat(0));
    return FieldElement(spec_, std::move(red), no_check{});
  }

  FieldElement operator/(const FieldElement& o) const {
    require_same_spec(*spec_, *o.spec_, "field division");
    return *this * o.inverse();
  }

  FieldElement pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = one(spec_), b = *this;
    while (e > 0) {
      if (e & 1) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }

  /// Image under the fixed complex embedding of the spec.
  cplx embed() const {
    if (spec_->is_rationals()) return cplx(c_[0].get_d(), 0.0);
    cplx tau = spec_->embedded_root(), acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * tau + c_[i].get_d();
    return acc;
  }

  /// Largest decimal digit count across coefficient parts (cap accounting).
  std::size_t height_digits() const {
    std::size_t h = 0;
    for (const Rat& x : c_) h = std::max(h, digit_size(x));
    return h;
  }

  /// Canonical string in the generator t; parseable by the poly grammar.
  std::string to_string() const {
    if (spec_->is_rationals()) return rat_to_string(c_[0]);
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Rat mag = c_[i];
      bool neg = mag < 0;
      if (neg) mag = -mag;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (i == 0) {
        out += rat_to_string(mag);
      } else {
        if (mag != 1) out += rat_to_string(mag) + "*";
        out += (i == 1) ? "t" : "t^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  struct no_check {};
  FieldElement(FieldSpecPtr spec, std::vector<Rat> coeffs, no_check)
      : spec_(std::move(spec)), c_(std::move(coeffs)) {
    canonicalize();
  }

  detail::QPoly minpoly_q() const {
    detail::QPoly m(spec_->minpoly().size());
    for (std::size_t i = 0; i < m.size(); ++i)
      m[i] = Rat(spec_->minpoly()[i]);
    return m;
  }

  void canonicalize() {
    for (Rat& x : c_) x.canonicalize();
  }

  FieldSpecPtr spec_;
  std::vector<Rat> c_;
};

/// Lift a rational-field element into an extension of Q.
inline FieldElement lift_to(const FieldSpecPtr& target,
                            const FieldElement& v) {
  if (*v.spec() == *target) return v;
  if (!v.spec()->is_rationals() || !v.is_rational())
    throw error(errc::spec_mismatch, "only Q -> Q(theta) lifting is supported");
  return FieldElement(target, v.as_rational());
}

}  // namespace planeauto

#endif  // PLANEAUTO_FIELD_HPP
