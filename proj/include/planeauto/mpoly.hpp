#pragma once

// Sparse multivariate polynomials over a field tower element, ordered by
// graded reverse lexicographic comparison.  Sized for the small systems
// this library produces (conjugator coefficient equations, centralizer
// equations), not for general computer algebra workloads.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "planeauto/errors.hpp"
#include "planeauto/field.hpp"

namespace planeauto {

/// Exponent vector of fixed length nvars.
using Exp = std::vector<int>;

namespace detail {

inline long exp_total_degree(const Exp& e) {
  long d = 0;
  for (int v : e) d += v;
  return d;
}

/// Three-way grevlex comparison: higher total degree is larger; on ties
/// the monomial whose last differing exponent is smaller is the larger
/// one.  Returns <0 when a precedes b in ascending order.
inline int grevlex_cmp(const Exp& a, const Exp& b) {
  long da = exp_total_degree(a), db = exp_total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    int ai = i < a.size() ? a[i] : 0;
    int bi = i < b.size() ? b[i] : 0;
    if (ai != bi) return ai > bi ? -1 : 1;
  }
  return 0;
}

struct GrevlexLess {
  bool operator()(const Exp& a, const Exp& b) const {
    return grevlex_cmp(a, b) < 0;
  }
};

inline bool exp_divides(const Exp& a, const Exp& b) {
  // a | b componentwise.
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
  Exp r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Exp exp_add(const Exp& a, const Exp& b) {
  Exp r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
  Exp r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

inline long rat_digits(const Rat& v) {
  return static_cast<long>(mpz_sizeinbase(v.get_num().get_mpz_t(), 10) +
                           mpz_sizeinbase(v.get_den().get_mpz_t(), 10));
}

}  // namespace detail

class MPoly {
 public:
  using TermMap = std::map<Exp, FieldElement, detail::GrevlexLess>;

  MPoly(FieldSpecPtr spec, int nvars) : spec_(std::move(spec)), nvars_(nvars) {
    if (nvars_ < 0) throw error(errc::precondition, "negative variable count");
  }

  static MPoly zero(const FieldSpecPtr& spec, int nvars) {
    return MPoly(spec, nvars);
  }
  static MPoly constant(const FieldSpecPtr& spec, int nvars,
                        const FieldElement& c) {
    MPoly p(spec, nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
  }
  static MPoly constant(const FieldSpecPtr& spec, int nvars, const Rat& c) {
    return constant(spec, nvars, FieldElement(spec, c));
  }
  static MPoly variable(const FieldSpecPtr& spec, int nvars, int i) {
    if (i < 0 || i >= nvars)
      throw error(errc::precondition, "variable index out of range");
    Exp e(nvars, 0);
    e[i] = 1;
    MPoly p(spec, nvars);
    p.add_term(e, FieldElement::one(spec));
    return p;
  }

  const FieldSpecPtr& spec() const { return spec_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  long total_degree() const {
    return terms_.empty() ? -1
                          : detail::exp_total_degree(terms_.rbegin()->first);
  }
  bool is_constant() const { return total_degree() <= 0; }
  FieldElement constant_value() const {
    return terms_.empty() ? FieldElement::zero(spec_)
                          : terms_.begin()->second;
  }

  const Exp& leading_exp() const {
    if (terms_.empty()) throw error(errc::precondition, "leading term of 0");
    return terms_.rbegin()->first;
  }
  const FieldElement& leading_coeff() const {
    if (terms_.empty()) throw error(errc::precondition, "leading term of 0");
    return terms_.rbegin()->second;
  }

  FieldElement coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement::zero(spec_) : it->second;
  }

  void add_term(const Exp& e, const FieldElement& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw error(errc::precondition, "exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly out(spec_, nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  MPoly operator+(const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
  }
  MPoly operator-(const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly out(spec_, nvars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_)
        out.add_term(detail::exp_add(ea, eb), ca * cb);
    return out;
  }
  MPoly operator*(const FieldElement& s) const {
    MPoly out(spec_, nvars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }
  /// this * s * x^shift, the building block of polynomial reduction.
  MPoly mul_term(const Exp& shift, const FieldElement& s) const {
    MPoly out(spec_, nvars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_)
      out.add_term(detail::exp_add(e, shift), c * s);
    return out;
  }

  bool operator==(const MPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly monic() const {
    if (terms_.empty()) return *this;
    return *this * leading_coeff().inverse();
  }

  /// Substitute variable i by an arbitrary polynomial (same arity).
  MPoly substitute(int i, const MPoly& repl) const {
    std::vector<MPoly> pows{constant(spec_, nvars_, Rat(1))};
    MPoly out(spec_, nvars_);
    for (const auto& [e, c] : terms_) {
      int k = e[i];
      while (static_cast<int>(pows.size()) <= k)
        pows.push_back(pows.back() * repl);
      Exp rest = e;
      rest[i] = 0;
      out = out + pows[k].mul_term(rest, c);
    }
    return out;
  }

  /// Substitute variable i by a field constant.
  MPoly eval_partial(int i, const FieldElement& value) const {
    MPoly out(spec_, nvars_);
    std::vector<FieldElement> pows{FieldElement::one(spec_)};
    for (const auto& [e, c] : terms_) {
      int k = e[i];
      while (static_cast<int>(pows.size()) <= k)
        pows.push_back(pows.back() * value);
      Exp rest = e;
      rest[i] = 0;
      out.add_term(rest, c * pows[k]);
    }
    return out;
  }

  FieldElement eval(const std::vector<FieldElement>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw error(errc::precondition, "evaluation point arity mismatch");
    FieldElement acc = FieldElement::zero(spec_);
    for (const auto& [e, c] : terms_) {
      FieldElement t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }

  bool depends_on(int i) const {
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) return true;
    return false;
  }

  /// Decimal-digit size of the largest rational coordinate, the quantity
  /// bounded by the Groebner height cap.
  long height_digits() const {
    long h = 0;
    for (const auto& [e, c] : terms_)
      for (const Rat& r : c.coeffs())
        h = std::max(h, detail::rat_digits(r));
    return h;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        if (it->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (i < static_cast<int>(names.size()))
                    ? names[i]
                    : "u" + std::to_string(i);
        if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
      }
      std::string coeff = it->second.to_string();
      if (coeff.find_first_of("+-") != std::string::npos &&
          coeff.find_first_of("+-") != 0)
        coeff = "(" + coeff + ")";
      if (mono.empty())
        out += coeff;
      else if (it->second.is_one())
        out += mono;
      else
        out += coeff + "*" + mono;
    }
    return out;
  }

 private:
  FieldSpecPtr spec_;
  int nvars_;
  TermMap terms_;
};

inline MPoly operator*(const FieldElement& s, const MPoly& p) { return p * s; }

}  // namespace planeauto
