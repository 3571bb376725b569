#ifndef PLANEAUTO_PARSE_HPP
#define PLANEAUTO_PARSE_HPP

/// Recursive-descent parser for the polynomial grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' INT]
///   atom   := INT ['/' INT] | 't' | 'x' | 'y' | '(' expr ')'
/// Rejections carry the byte offset.  The generator t is only admitted when
/// the field has one.  Exponents above 10^6 are an exponent-cap error.

#include <cctype>
#include <string>
#include <utility>

#include "planeauto/errors.hpp"
#include "planeauto/poly.hpp"

namespace planeauto {

namespace detail {

class PolyParser {
 public:
  PolyParser(FieldSpecPtr spec, const std::string& text)
      : spec_(std::move(spec)), s_(text) {}

  PlanePoly run() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty polynomial");
    PlanePoly p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw error(errc::syntax_error,
                "at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected integer");
    return Int(s_.substr(start, pos_ - start));
  }

  PlanePoly expr() {
    bool neg = accept('-');
    PlanePoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  PlanePoly term() {
    PlanePoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  PlanePoly factor() {
    PlanePoly base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("exponent must be a nonnegative integer literal");
      Int e = integer();
      if (e > kExponentCap)
        throw error(errc::exponent_cap,
                    "at offset " + std::to_string(pos_) +
                        ": exponent beyond 10^6");
      return base.pow(e.get_si());
    }
    return base;
  }

  PlanePoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      if (accept('/')) {
        std::size_t at = pos_;
        Int den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        return PlanePoly::constant(spec_, Rat(num, den));
      }
      return PlanePoly::constant(spec_, Rat(num));
    }
    if (c == 'x') {
      ++pos_;
      return PlanePoly::var_x(spec_);
    }
    if (c == 'y') {
      ++pos_;
      return PlanePoly::var_y(spec_);
    }
    if (c == 't') {
      if (spec_->is_rationals())
        fail("generator t is not available over Q");
      ++pos_;
      return PlanePoly::constant(spec_, FieldElement::generator(spec_));
    }
    if (c == '(') {
      ++pos_;
      PlanePoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  FieldSpecPtr spec_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse source text into a polynomial over the given field.
inline PlanePoly parse_poly(const FieldSpecPtr& spec, const std::string& text) {
  return detail::PolyParser(spec, text).run();
}

}  // namespace planeauto

#endif  // PLANEAUTO_PARSE_HPP
