#ifndef PLANEAUTO_RATIONAL_HPP
#define PLANEAUTO_RATIONAL_HPP

/// Thin helpers around GMP rationals and integers: canonical printing,
/// exact integer roots, powers, and digit-size measures used by caps.

#include <optional>
#include <string>

#include <gmpxx.h>

#include "planeauto/errors.hpp"

namespace planeauto {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_pow(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw error(errc::division_by_zero, "0^negative");
    Rat inv = 1 / base;
    return rat_pow(inv, -exp);
  }
  Rat acc = 1, b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

/// Exact integer n-th root: returns r with r^n == v when one exists.
inline std::optional<Int> exact_root(const Int& v, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (v < 0 && n % 2 == 0) return std::nullopt;
  Int r;
  int exactp = mpz_root(r.get_mpz_t(), v.get_mpz_t(), n);
  if (!exactp) return std::nullopt;
  return r;
}

/// Exact rational n-th root of p/q in lowest terms (needs both parts exact).
inline std::optional<Rat> exact_root(const Rat& v, unsigned long n) {
  Rat c = v;
  c.canonicalize();
  auto num = exact_root(Int(c.get_num()), n);
  auto den = exact_root(Int(c.get_den()), n);
  if (!num || !den) return std::nullopt;
  return Rat(*num, *den);
}

/// Decimal digit count of |v| (0 counts as one digit).
inline std::size_t digit_size(const Int& v) {
  if (v == 0) return 1;
  return mpz_sizeinbase(v.get_mpz_t(), 10);
}

inline std::size_t digit_size(const Rat& v) {
  return digit_size(Int(v.get_num())) + digit_size(Int(v.get_den()));
}

/// Canonical decimal form: "n" for integers, "n/d" otherwise.
inline std::string rat_to_string(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace planeauto

#endif  // PLANEAUTO_RATIONAL_HPP
