#ifndef PLANEAUTO_POLY_HPP
#define PLANEAUTO_POLY_HPP

/// Sparse bivariate polynomials over a FieldSpec.  Terms live in a map under
/// the graded lexicographic order (total degree, then x exponent), which is
/// the canonical order for equality, printing, and leading-form queries.
/// Exponents are machine integers capped at 10^6; operations that would
/// exceed the cap abort with a resource-class error instead of wrapping.

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "planeauto/errors.hpp"
#include "planeauto/field.hpp"

namespace planeauto {

constexpr long kExponentCap = 1000000;

struct Mono2 {
  long i = 0;  // x exponent
  long j = 0;  // y exponent
  long degree() const { return i + j; }
  bool operator==(const Mono2& o) const { return i == o.i && j == o.j; }
};

/// Graded lex with x > y; map iteration is ascending, leading term at rbegin.
struct GrlexLess {
  bool operator()(const Mono2& a, const Mono2& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.i < b.i;
  }
};

class PlanePoly {
 public:
  using TermMap = std::map<Mono2, FieldElement, GrlexLess>;

  explicit PlanePoly(FieldSpecPtr spec) : spec_(std::move(spec)) {}

  static PlanePoly zero(const FieldSpecPtr& spec) { return PlanePoly(spec); }

  static PlanePoly constant(const FieldSpecPtr& spec, const FieldElement& c) {
    PlanePoly p(spec);
    p.add_term(0, 0, c);
    return p;
  }
  static PlanePoly constant(const FieldSpecPtr& spec, const Rat& c) {
    return constant(spec, FieldElement(spec, c));
  }
  static PlanePoly monomial(const FieldSpecPtr& spec, long i, long j,
                            const FieldElement& c) {
    PlanePoly p(spec);
    p.add_term(i, j, c);
    return p;
  }
  static PlanePoly var_x(const FieldSpecPtr& spec) {
    return monomial(spec, 1, 0, FieldElement::one(spec));
  }
  static PlanePoly var_y(const FieldSpecPtr& spec) {
    return monomial(spec, 0, 1, FieldElement::one(spec));
  }

  const FieldSpecPtr& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 is the zero-polynomial sentinel.
  long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  long degree_x() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.i);
    return d;
  }
  long degree_y() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.j);
    return d;
  }

  bool is_constant() const { return degree() <= 0; }
  bool depends_on_x() const { return degree_x() > 0; }
  bool depends_on_y() const { return degree_y() > 0; }

  FieldElement coefficient(long i, long j) const {
    auto it = terms_.find(Mono2{i, j});
    return it == terms_.end() ? FieldElement::zero(spec_) : it->second;
  }

  FieldElement constant_term() const { return coefficient(0, 0); }

  /// Homogeneous part of top degree.
  PlanePoly leading_form() const {
    PlanePoly out(spec_);
    long d = degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) out.add_term(m.i, m.j, c);
    return out;
  }

  bool operator==(const PlanePoly& o) const {
    return *spec_ == *o.spec_ && terms_ == o.terms_;
  }
  bool operator!=(const PlanePoly& o) const { return !(*this == o); }

  PlanePoly operator-() const {
    PlanePoly out(spec_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  PlanePoly operator+(const PlanePoly& o) const {
    require_same_spec(*spec_, *o.spec_, "poly addition");
    PlanePoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m.i, m.j, c);
    return out;
  }

  PlanePoly operator-(const PlanePoly& o) const {
    require_same_spec(*spec_, *o.spec_, "poly subtraction");
    PlanePoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m.i, m.j, -c);
    return out;
  }

  PlanePoly operator*(const PlanePoly& o) const {
    require_same_spec(*spec_, *o.spec_, "poly multiplication");
    resource::check_budget(
        (term_count() * o.term_count() + 1) * (64 + 48 * spec_->degree()),
        "poly multiplication");
    PlanePoly out(spec_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_)
        out.add_term(ma.i + mb.i, ma.j + mb.j, ca * cb);
    return out;
  }

  PlanePoly operator*(const FieldElement& s) const {
    PlanePoly out(spec_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.add_term(m.i, m.j, c * s);
    return out;
  }

  PlanePoly pow(long e) const {
    if (e < 0) throw error(errc::precondition, "negative polynomial power");
    PlanePoly acc = constant(spec_, Rat(1));
    PlanePoly b = *this;
    while (e > 0) {
      if (e & 1) acc = acc * b;
      if ((e >>= 1) > 0) b = b * b;
    }
    return acc;
  }

  /// Substitution (x, y) -> (px, py) by Horner accumulation over x powers,
  /// each x-slice itself accumulated by Horner over y powers.
  PlanePoly compose2(const PlanePoly& px, const PlanePoly& py) const {
    require_same_spec(*spec_, *px.spec_, "poly composition");
    require_same_spec(*spec_, *py.spec_, "poly composition");
    long dx = degree_x();
    if (dx < 0) return zero(spec_);
    // Slice A_i(y) for each x power.
    std::vector<std::vector<std::pair<long, FieldElement>>> slice(dx + 1);
    for (const auto& [m, c] : terms_) slice[m.i].emplace_back(m.j, c);
    PlanePoly acc = zero(spec_);
    for (long i = dx; i >= 0; --i) {
      if (!acc.is_zero()) acc = acc * px;
      // Horner over descending y powers within the slice.
      PlanePoly ai = zero(spec_);
      long prev = -1;
      for (auto it = slice[i].rbegin(); it != slice[i].rend(); ++it) {
        if (prev < 0) {
          ai = constant(spec_, it->second);
        } else {
          for (long k = 0; k < prev - it->first; ++k) ai = ai * py;
          ai = ai + constant(spec_, it->second);
        }
        prev = it->first;
      }
      if (prev > 0) ai = ai * py.pow(prev);
      else if (prev == 0) {
        // constant slice, nothing to multiply
      }
      if (!ai.is_zero()) acc = acc + ai;
    }
    return acc;
  }

  PlanePoly derivative_x() const {
    PlanePoly out(spec_);
    for (const auto& [m, c] : terms_)
      if (m.i > 0)
        out.add_term(m.i - 1, m.j, c * FieldElement(spec_, Rat(m.i)));
    return out;
  }

  PlanePoly derivative_y() const {
    PlanePoly out(spec_);
    for (const auto& [m, c] : terms_)
      if (m.j > 0)
        out.add_term(m.i, m.j - 1, c * FieldElement(spec_, Rat(m.j)));
    return out;
  }

  /// Exact evaluation at field points.
  FieldElement eval_exact(const FieldElement& x, const FieldElement& y) const {
    require_same_spec(*spec_, *x.spec(), "exact evaluation");
    require_same_spec(*spec_, *y.spec(), "exact evaluation");
    FieldElement acc = FieldElement::zero(spec_);
    for (const auto& [m, c] : terms_)
      acc = acc + c * x.pow(m.i) * y.pow(m.j);
    return acc;
  }

  /// Numeric evaluation.  Overflow propagates as non-finite values that the
  /// escape logic consumes; it never traps.
  cplx eval_complex(cplx x, cplx y) const {
    cplx acc = 0;
    for (const auto& [m, c] : terms_) {
      cplx t = c.embed();
      // exponentiation by squaring in doubles
      cplx bx = x;
      long e = m.i;
      while (e > 0) {
        if (e & 1) t *= bx;
        bx *= bx;
        e >>= 1;
      }
      cplx by = y;
      e = m.j;
      while (e > 0) {
        if (e & 1) t *= by;
        by *= by;
        e >>= 1;
      }
      acc += t;
    }
    return acc;
  }

  /// Dense ascending coefficients along x (precondition: no y dependence).
  std::vector<FieldElement> univariate_x() const {
    if (depends_on_y())
      throw error(errc::precondition, "polynomial depends on y");
    std::vector<FieldElement> out(std::max<long>(degree_x() + 1, 1),
                                  FieldElement::zero(spec_));
    for (const auto& [m, c] : terms_) out[m.i] = c;
    return out;
  }

  std::vector<FieldElement> univariate_y() const {
    if (depends_on_x())
      throw error(errc::precondition, "polynomial depends on x");
    std::vector<FieldElement> out(std::max<long>(degree_y() + 1, 1),
                                  FieldElement::zero(spec_));
    for (const auto& [m, c] : terms_) out[m.j] = c;
    return out;
  }

  /// Largest coefficient height in decimal digits (cap accounting).
  std::size_t height_digits() const {
    std::size_t h = 1;
    for (const auto& [m, c] : terms_) h = std::max(h, c.height_digits());
    return h;
  }

  /// Canonical printer: descending graded-lex terms, exact coefficients.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Mono2& m = it->first;
      const FieldElement& c = it->second;
      std::string coeff;
      bool neg = false;
      if (single_signed(c, neg, coeff)) {
        // coeff holds the magnitude part ("" when it is 1 and mono nonempty)
      } else {
        coeff = "(" + c.to_string() + ")";
        neg = false;
      }
      std::string mono;
      if (m.i > 0) mono += (m.i == 1) ? "x" : "x^" + std::to_string(m.i);
      if (m.j > 0) {
        if (!mono.empty()) mono += "*";
        mono += (m.j == 1) ? "y" : "y^" + std::to_string(m.j);
      }
      std::string body;
      if (coeff.empty() && mono.empty()) body = "1";
      else if (coeff.empty()) body = mono;
      else if (mono.empty()) body = coeff;
      else body = coeff + "*" + mono;
      if (out.empty()) {
        out = (neg ? "-" : "") + body;
      } else {
        out += (neg ? " - " : " + ") + body;
      }
    }
    return out;
  }

  /// Insert-or-accumulate; drops terms that cancel to zero.
  void add_term(long i, long j, const FieldElement& c) {
    if (c.is_zero()) return;
    if (i < 0 || j < 0)
      throw error(errc::precondition, "negative exponent");
    if (i > kExponentCap || j > kExponentCap)
      throw error(errc::exponent_cap, "monomial exponent beyond 10^6");
    Mono2 m{i, j};
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  /// True when c prints as sign * simple product (rational or c_k * t^k).
  static bool single_signed(const FieldElement& c, bool& neg,
                            std::string& body) {
    const std::vector<Rat>& v = c.coeffs();
    std::size_t nonzero = 0, idx = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) {
        ++nonzero;
        idx = k;
      }
    if (nonzero != 1) return false;
    Rat mag = v[idx];
    neg = mag < 0;
    if (neg) mag = -mag;
    std::string t;
    if (idx > 0) t = (idx == 1) ? "t" : "t^" + std::to_string(idx);
    if (mag == 1 && idx > 0) body = t;
    else if (idx > 0) body = rat_to_string(mag) + "*" + t;
    else body = rat_to_string(mag);
    if (mag == 1 && idx == 0) body.clear();  // bare 1: let caller elide
    return true;
  }

  FieldSpecPtr spec_;
  TermMap terms_;
};

inline PlanePoly operator*(const FieldElement& s, const PlanePoly& p) {
  return p * s;
}

}  // namespace planeauto

#endif  // PLANEAUTO_POLY_HPP
