#ifndef PLANEAUTO_ERRORS_HPP
#define PLANEAUTO_ERRORS_HPP

/// Error taxonomy shared by every module.  All failures surface as typed
/// exceptions; nothing is silently approximated or silently extended.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace planeauto {

enum class errc {
  spec_mismatch,         // operands built over different field specs
  division_by_zero,      // field division by zero
  syntax_error,          // parser rejection, message carries the offset
  exponent_cap,          // monomial exponent beyond 10^6
  resource_cap,          // PLANEAUTO_CAP_MB or an internal term budget hit
  not_an_automorphism,   // degree reduction failed / Jacobian not constant
  field_extension_needed,// normalization needs a root outside the field
  reducible_radical,     // binomial minpoly reducible, root in subextension
  root_isolation,        // numeric root isolation failed residual check
  invalid_radius,        // escape radius below the filtration radius
  precondition,          // documented op precondition violated
  undecided_at_cap,      // Groebner caps hit before a decision
  ill_conditioned        // numeric clustering / refinement failure
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::spec_mismatch: return "spec-mismatch";
    case errc::division_by_zero: return "division-by-zero";
    case errc::syntax_error: return "syntax-error";
    case errc::exponent_cap: return "exponent-cap";
    case errc::resource_cap: return "resource-cap";
    case errc::not_an_automorphism: return "not-an-automorphism";
    case errc::field_extension_needed: return "field-extension-needed";
    case errc::reducible_radical: return "reducible-radical";
    case errc::root_isolation: return "root-isolation";
    case errc::invalid_radius: return "invalid-radius";
    case errc::precondition: return "precondition";
    case errc::undecided_at_cap: return "undecided-at-cap";
    case errc::ill_conditioned: return "ill-conditioned";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

/// Raised when a normalization step needs a root not present in the current
/// field.  Carries the monic integer minimal polynomial (ascending
/// coefficients, last entry 1) that would provide it.
class field_extension_needed : public error {
 public:
  field_extension_needed(const std::string& what,
                         std::vector<mpz_class> suggested)
      : error(errc::field_extension_needed, what),
        suggested_minpoly_(std::move(suggested)) {}
  const std::vector<mpz_class>& suggested_minpoly() const {
    return suggested_minpoly_;
  }

 private:
  std::vector<mpz_class> suggested_minpoly_;
};

namespace resource {

/// Memory budget in bytes from PLANEAUTO_CAP_MB (0 = unlimited).
inline std::size_t budget_bytes() {
  static const std::size_t cached = [] {
    const char* env = std::getenv("PLANEAUTO_CAP_MB");
    if (!env) return std::size_t{0};
    long mb = std::atol(env);
    return mb > 0 ? static_cast<std::size_t>(mb) * 1024 * 1024 : std::size_t{0};
  }();
  return cached;
}

/// Approximate accounting: callers estimate the bytes a pending operation
/// will materialize and abort before allocating past the cap.
inline void check_budget(std::size_t projected_bytes, const char* where) {
  std::size_t cap = budget_bytes();
  if (cap != 0 && projected_bytes > cap) {
    throw error(errc::resource_cap,
                std::string(where) + " would exceed PLANEAUTO_CAP_MB");
  }
}

}  // namespace resource
}  // namespace planeauto

#endif  // PLANEAUTO_ERRORS_HPP
