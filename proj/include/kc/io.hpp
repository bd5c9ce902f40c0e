#ifndef KC_IO_HPP
#define KC_IO_HPP

#include <openssl/evp.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kc/blanchfield.hpp"
#include "kc/family.hpp"
#include "kc/seifert.hpp"
#include "kc/signature.hpp"

namespace kc {

// nlohmann::json keeps object keys sorted, so dump() is canonical: identical
// values serialize to identical bytes.  Big integers and rationals travel as
// decimal strings to avoid JSON number precision limits.
using Json = nlohmann::json;

inline std::string canonical_dump(const Json& j) { return j.dump(); }

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

// ---- Laurent polynomials: {"terms": [[exponent, "num/den"], ...]} ascending

inline Json laurent_to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (auto& [e, c] : f.terms()) terms.push_back(Json::array({e, rat_to_string(c)}));
  return Json{{"terms", std::move(terms)}};
}

inline LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("laurent: expected {\"terms\": [...]}");
  LaurentPoly f;
  long prev = 0;
  bool first = true;
  for (auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() ||
        !t[1].is_string())
      throw std::invalid_argument("laurent: term must be [exponent, \"num/den\"]");
    long e = t[0].get<long>();
    if (!first && e <= prev)
      throw std::invalid_argument("laurent: exponents must be ascending");
    prev = e;
    first = false;
    f.set(e, rat_from_string(t[1].get<std::string>()));
  }
  return f;
}

inline Json poly_to_json(const Poly& f) {
  return laurent_to_json(LaurentPoly::from_poly(f));
}

// ---- Integer matrices: {"matrix": [[int, ...], ...]}

inline Json imat_to_json(const IMat& m) {
  Json rows = Json::array();
  for (auto& r : m) {
    Json row = Json::array();
    for (auto& e : r) {
      if (!e.fits_slong_p()) throw std::invalid_argument("matrix entry too large");
      row.push_back(e.get_si());
    }
    rows.push_back(std::move(row));
  }
  return Json{{"matrix", std::move(rows)}};
}

inline IMat imat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
    throw std::invalid_argument("matrix: expected {\"matrix\": [[...], ...]}");
  IMat m;
  for (auto& row : j["matrix"]) {
    if (!row.is_array()) throw std::invalid_argument("matrix: row must be an array");
    std::vector<Int> r;
    for (auto& e : row) {
      if (!e.is_number_integer())
        throw std::invalid_argument("matrix: entries must be integers");
      r.push_back(Int(e.get<long>()));
    }
    m.push_back(std::move(r));
  }
  return m;
}

inline Json seifert_to_json(const SeifertMatrix& v) { return imat_to_json(v.entries()); }

inline SeifertMatrix seifert_from_json(const Json& j) {
  return SeifertMatrix::validate(imat_from_json(j));
}

// ---- Metabolizers: {"basis": [[int, ...], ...]} (2g rows, g columns)

inline Json metabolizer_to_json(const Metabolizer& m) {
  Json j = imat_to_json(m.basis);
  return Json{{"basis", std::move(j["matrix"])}};
}

inline Metabolizer metabolizer_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis"))
    throw std::invalid_argument("metabolizer: expected {\"basis\": [[...], ...]}");
  return Metabolizer{imat_from_json(Json{{"matrix", j["basis"]}})};
}

// ---- Signature values and profiles

inline Json sig_value_to_json(const SigValue& s) {
  return Json{{"nullity", s.nullity}, {"signature", s.signature}};
}

// Jump angles as the minimal polynomial of 2cos(theta) plus an isolating
// interval refined below 2^-10 so output is reproducible.
inline Json angle_to_json(const AlgebraicAngle& a) {
  const RealAlgebraic& s = a.two_cos();
  s.refine_below(Rat(1, 1024));
  return Json{{"two_cos",
               Json{{"hi", rat_to_string(s.hi())},
                    {"lo", rat_to_string(s.lo())},
                    {"minpoly", poly_to_json(s.minpoly())}}}};
}

inline Json profile_to_json(const SignatureProfile& p) {
  Json jumps = Json::array();
  for (auto& a : p.jumps) jumps.push_back(angle_to_json(a));
  Json arcs = Json::array();
  for (long v : p.arc_values) arcs.push_back(v);
  return Json{{"arc_values", std::move(arcs)}, {"jumps", std::move(jumps)}};
}

inline Json interval_to_json(const RatI& i) {
  return Json{{"hi", rat_to_string(i.hi)}, {"lo", rat_to_string(i.lo)}};
}

// ---- Family descriptors; multiplicities as decimal strings

inline Json family_to_json(const FamilyDescriptor& f) {
  Json companions = Json::array();
  for (auto& c : f.companions) {
    Json summands = Json::array();
    for (auto& s : c.expr.summands)
      summands.push_back(Json{{"m", s.base.m},
                              {"mirrored", s.mirrored},
                              {"multiplicity", s.multiplicity.get_str()}});
    Json witness{{"integral_hi", rat_to_string(c.witness.integral_hi)},
                 {"integral_lo", rat_to_string(c.witness.integral_lo)},
                 {"kind", c.witness.kind},
                 {"m_hi", c.witness.m_hi},
                 {"m_lo", c.witness.m_lo},
                 {"multiplicity", c.witness.multiplicity.get_str()},
                 {"per_copy_sum", c.witness.per_copy_sum},
                 {"root_count", c.witness.root_count}};
    companions.push_back(Json{{"prime", c.prime},
                              {"summands", std::move(summands)},
                              {"witness", std::move(witness)}});
  }
  Json bound{{"provenance", f.bound.provenance}, {"value", f.bound.C.get_str()}};
  Json m = seifert_to_json(f.seifert);
  return Json{{"bound", std::move(bound)},
              {"companions", std::move(companions)},
              {"genus", f.genus},
              {"matrix", std::move(m["matrix"])}};
}

inline FamilyDescriptor family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j.contains("bound") ||
      !j.contains("companions") || !j.contains("genus"))
    throw std::invalid_argument("family: missing required field");
  FamilyDescriptor f{seifert_from_json(Json{{"matrix", j["matrix"]}}),
                     j["genus"].get<long>(),
                     CGBound{Int(j["bound"]["value"].get<std::string>()),
                             j["bound"]["provenance"].get<std::string>()},
                     {}};
  if (sgn(f.bound.C) <= 0) throw std::invalid_argument("family: bound must be positive");
  for (auto& cj : j["companions"]) {
    Companion c;
    c.prime = cj["prime"].get<long>();
    for (auto& sj : cj["summands"])
      c.expr.summands.push_back({twist_matrix(sj["m"].get<long>()),
                                 sj["mirrored"].get<bool>(),
                                 Int(sj["multiplicity"].get<std::string>())});
    const Json& w = cj["witness"];
    c.witness = {w["kind"].get<std::string>(),
                 w["m_lo"].get<long>(),
                 w["m_hi"].get<long>(),
                 w["root_count"].get<long>(),
                 w["per_copy_sum"].get<long>(),
                 Int(w["multiplicity"].get<std::string>()),
                 rat_from_string(w["integral_lo"].get<std::string>()),
                 rat_from_string(w["integral_hi"].get<std::string>())};
    f.companions.push_back(std::move(c));
  }
  return f;
}

inline std::string family_hash(const FamilyDescriptor& f) {
  return sha256_hex(canonical_dump(family_to_json(f)));
}

}  // namespace kc

#endif
