#pragma once

// Serialization boundary: JSON for maps, fields, classifications,
// certificates, refutations, periodic orbits, and run reports; PGM and
// CSV emission for raster slices.  Output is deterministic (sorted keys,
// fixed float formatting) and every exact number travels as the decimal
// numerator/denominator string of a rational.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planeauto/automorphism.hpp"
#include "planeauto/conjugacy.hpp"
#include "planeauto/errors.hpp"
#include "planeauto/field.hpp"
#include "planeauto/green.hpp"
#include "planeauto/parse.hpp"
#include "planeauto/periodic.hpp"
#include "planeauto/poly.hpp"

namespace planeauto {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Exact numbers and fields

inline std::string rat_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw error(errc::syntax_error, "not a rational: " + s);
  }
}

inline json field_to_json(const FieldSpecPtr& spec) {
  if (spec->is_rationals()) return json("Q");
  json mp = json::array();
  for (const Int& c : spec->minpoly()) mp.push_back(c.get_str());
  return json{{"minpoly", mp}, {"root", spec->root_index()}};
}

inline FieldSpecPtr field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    throw error(errc::syntax_error, "unknown field name: " + j.get<std::string>());
  }
  if (!j.is_object() || !j.contains("minpoly"))
    throw error(errc::syntax_error, "field must be \"Q\" or {minpoly, root}");
  std::vector<Int> mp;
  for (const auto& c : j.at("minpoly")) mp.emplace_back(c.get<std::string>());
  const int root = j.value("root", 0);
  return FieldSpec::extension(mp, root);
}

inline json element_to_json(const FieldElement& v) {
  if (v.spec()->is_rationals()) return json(rat_string(v.coeffs().front()));
  json out = json::array();
  for (const Rat& c : v.coeffs()) out.push_back(rat_string(c));
  return out;
}

// ---------------------------------------------------------------------------
// Maps

inline json map_to_json(const PolyMap& m) {
  return json{{"field", field_to_json(m.spec())},
              {"p", m.p().to_string()},
              {"q", m.q().to_string()}};
}

inline PolyMap map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q"))
    throw error(errc::syntax_error, "map JSON needs fields p and q");
  const FieldSpecPtr spec =
      j.contains("field") ? field_from_json(j.at("field"))
                          : FieldSpec::rationals();
  return PolyMap(parse_poly(spec, j.at("p").get<std::string>()),
                 parse_poly(spec, j.at("q").get<std::string>()));
}

// ---------------------------------------------------------------------------
// Classification, certificates, refutations

inline json classification_to_json(const ClassificationResult& c) {
  json out;
  out["class"] = c.cls == MapClass::loxodromic ? "loxodromic" : "elliptic";
  out["lambda1"] = c.lambda1.get_str();
  if (c.henon.has_value()) {
    json factors = json::array();
    for (const HenonFactor& h : c.henon->factors)
      factors.push_back(json{{"a", element_to_json(h.a)},
                             {"p", h.p.to_string()}});
    out["henon_factors"] = factors;
    out["conjugator"] = map_to_json(c.henon->conjugator);
  }
  return out;
}

inline json certificate_to_json(const ConjugacyCertificate& c) {
  return json{{"psi", map_to_json(c.psi)},
              {"field", field_to_json(c.psi.spec())},
              {"verified", c.checked_identity},
              {"dedup_class_size", c.dedup_class_size},
              {"witness_factors", c.automorphism_witness.factors.size()}};
}

inline json refutation_to_json(const Refutation& r) {
  return json{{"reason", refutation_reason_name(r.reason)},
              {"data", r.data},
              {"numeric", r.numeric}};
}

// ---------------------------------------------------------------------------
// Numeric payloads

namespace detail {

/// Fixed shortest-round-trip float formatting keeps reports byte-stable.
inline std::string double_string(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline json cplx_to_json(const cplx& z) {
  return json{{"re", double_string(z.real())}, {"im", double_string(z.imag())}};
}

}  // namespace detail

inline json green_to_json(const GreenEstimate& e) {
  return json{{"value", detail::double_string(e.value)},
              {"error_bound", detail::double_string(e.error_bound)},
              {"iterations", e.iterations_used},
              {"escaped", e.escaped}};
}

inline json orbits_to_json(const std::vector<PeriodicOrbit>& orbits) {
  json out = json::array();
  for (const PeriodicOrbit& o : orbits) {
    json pts = json::array();
    for (const auto& [x, y] : o.points)
      pts.push_back(json{{"x", detail::cplx_to_json(x)},
                         {"y", detail::cplx_to_json(y)}});
    out.push_back(json{{"period", o.period},
                       {"points", pts},
                       {"multiplier1", detail::cplx_to_json(o.multiplier1)},
                       {"multiplier2", detail::cplx_to_json(o.multiplier2)},
                       {"type", o.type},
                       {"residual", detail::double_string(o.residual)}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Raster emission

/// Plain PGM (P2), intensities quantized to 0..65535 against the grid
/// maximum, which is recorded in a header comment for dequantization.
inline void write_pgm(std::ostream& os, const RasterResult& r) {
  os << "P2\n";
  os << "# G_max=" << detail::double_string(r.g_max) << "\n";
  os << r.nx << " " << r.ny << "\n65535\n";
  const double scale = r.g_max > 0.0 ? 65535.0 / r.g_max : 0.0;
  for (long iy = 0; iy < r.ny; ++iy) {
    for (long ix = 0; ix < r.nx; ++ix) {
      const double v = r.values[std::size_t(iy) * std::size_t(r.nx) +
                                std::size_t(ix)];
      const long q = std::lround(v * scale);
      os << (ix ? " " : "") << std::clamp(q, 0L, 65535L);
    }
    os << "\n";
  }
}

inline void write_csv(std::ostream& os, const RasterResult& r) {
  os << "ix,iy,value\n";
  for (long iy = 0; iy < r.ny; ++iy)
    for (long ix = 0; ix < r.nx; ++ix)
      os << ix << "," << iy << ","
         << detail::double_string(
                r.values[std::size_t(iy) * std::size_t(r.nx) +
                         std::size_t(ix)])
         << "\n";
}

// ---------------------------------------------------------------------------
// Run reports

/// FNV-1a over the raw input bytes; stable digest for reproducing runs.
inline std::string digest_bytes(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

struct RunReport {
  std::string command;                  // argv echo
  std::string inputs_digest;            // digest of all input bytes
  json outputs = json::object();        // subcommand payload
  std::vector<std::string> caps_hit;    // resource caps that fired
  double timing_ms = 0.0;               // excluded from reproducibility

  json to_json() const {
    return json{{"command", command},
                {"inputs_digest", inputs_digest},
                {"outputs", outputs},
                {"caps_hit", caps_hit},
                {"timing_ms", detail::double_string(timing_ms)}};
  }
};

}  // namespace planeauto
