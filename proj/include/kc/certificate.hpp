#ifndef KC_CERTIFICATE_HPP
#define KC_CERTIFICATE_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kc/blanchfield.hpp"
#include "kc/family.hpp"
#include "kc/io.hpp"

namespace kc {

// Machine-checkable certificate: a list of named arithmetic checks with exact
// witness data, and a verdict that is positive only when every check passes.
// The topological steps of the underlying obstruction theory are cited, not
// re-proved; the certificate covers every arithmetic premise they consume.
struct Certificate {
  std::string kind;  // "LinearCombination" | "CoprimeSplit"
  std::string family_sha256;
  Json inputs;  // combination vector, or (index, n, target polynomial)
  struct Check {
    std::string name;
    std::string witness;
    bool pass = false;
  };
  std::vector<Check> checks;
  std::string verdict;  // OBSTRUCTED | NOT_CONCORDANT_BY_SPLITTING | INCONCLUSIVE

  bool all_checks_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Verdict recomputed from the stored witness flags alone; re-verification
// never re-runs the synthesis.
inline std::string reverify(const Certificate& c) {
  std::string positive =
      c.kind == "LinearCombination" ? "OBSTRUCTED" : "NOT_CONCORDANT_BY_SPLITTING";
  return c.all_checks_pass() ? positive : "INCONCLUSIVE";
}

inline Json certificate_to_json(const Certificate& c) {
  Json checks = Json::array();
  for (auto& ch : c.checks)
    checks.push_back(
        Json{{"name", ch.name}, {"pass", ch.pass}, {"witness", ch.witness}});
  return Json{{"checks", std::move(checks)},
              {"family_sha256", c.family_sha256},
              {"inputs", c.inputs},
              {"kind", c.kind},
              {"verdict", c.verdict}};
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.family_sha256 = j.at("family_sha256").get<std::string>();
  c.inputs = j.at("inputs");
  for (auto& ch : j.at("checks"))
    c.checks.push_back({ch.at("name").get<std::string>(),
                        ch.at("witness").get<std::string>(),
                        ch.at("pass").get<bool>()});
  c.verdict = j.at("verdict").get<std::string>();
  return c;
}

// Obstruction for the linear combination sum_i a_i J_i of the family's
// companions: after sign normalization, the finite-cyclic signature bound at
// the first active prime must exceed the universal bound, while the remaining
// companions contribute exactly zero there.
inline Certificate certify_linear_combination(const FamilyDescriptor& f,
                                              const std::vector<Int>& a) {
  if (a.size() != f.companions.size())
    throw std::invalid_argument(
        "certify_linear_combination: combination length must match family size");
  size_t i0 = a.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) {
      i0 = i;
      break;
    }
  if (i0 == a.size())
    throw std::invalid_argument("certify_linear_combination: a must be nonzero");

  Certificate cert;
  cert.kind = "LinearCombination";
  cert.family_sha256 = family_hash(f);

  // normalize the sign of the first nonzero entry (replacing the combination
  // by its inverse when needed)
  std::vector<Int> b = a;
  if (sgn(b[i0]) < 0)
    for (auto& x : b) x = -x;
  {
    Json combo = Json::array();
    for (auto& x : a) combo.push_back(x.get_str());
    cert.inputs = Json{{"combo", std::move(combo)}};
  }
  {
    std::ostringstream w;
    w << "a = (";
    for (size_t i = 0; i < b.size(); ++i) w << (i ? "," : "") << b[i].get_str();
    w << "), first nonzero at " << (i0 + 1);
    cert.checks.push_back({"reindex", w.str(), true});
  }

  ConditionReport rep = verify_lemma_conditions(f);
  for (auto& item : rep.items) cert.checks.push_back({item.name, item.witness, item.pass});

  const Companion& j1 = f.companions[i0];
  long p1 = j1.prime;
  AlexanderData ad = alexander(f.seifert);
  {
    Int ak = abs(ad.top_coeff);
    bool deg_ok = ad.degree >= 2;
    bool prime_ok = Int(p1) > ak;
    bool gen_ok = prime_ok && eta_generation_check(f.seifert, p1);
    std::ostringstream w;
    w << "deg = " << ad.degree << ", p_1 = " << p1 << " vs a_K = " << ak.get_str()
      << ", generation mod p_1: " << (gen_ok ? "yes" : "no");
    cert.checks.push_back({"generation", w.str(), deg_ok && prime_ok && gen_ok});
  }
  {
    Int total = expr_sig_sum(j1.expr, p1);
    Int target = Int(p1) * f.bound.C;
    std::ostringstream w;
    Int per(j1.witness.per_copy_sum);
    if (per * j1.witness.multiplicity == total)
      w << "(1/" << p1 << ")·(" << j1.witness.per_copy_sum << "·"
        << j1.witness.multiplicity.get_str() << ") > " << f.bound.C.get_str();
    else
      w << "(1/" << p1 << ")·" << total.get_str() << " > "
        << f.bound.C.get_str();
    cert.checks.push_back({"rho_bound", w.str(), total > target});
  }

  cert.verdict = reverify(cert);
  return cert;
}

// Non-concordance of n copies of the base knot to any knot whose Alexander
// polynomial is coprime to delta_K: the splitting argument needs a nonzero
// half-rank self-annihilating submodule, nonsingularity of the Blanchfield
// form on generators, the companion's certified positive integral, and the
// vanishing of the base knot's own signature integral.
inline Certificate certify_coprime_nonconcordance(const FamilyDescriptor& f,
                                                  size_t index, const Int& n,
                                                  const LaurentPoly& delta_other) {
  if (sgn(n) == 0)
    throw std::invalid_argument("certify_coprime_nonconcordance: n must be nonzero");
  if (index < 1 || index > f.companions.size())
    throw std::invalid_argument("certify_coprime_nonconcordance: index out of range");
  if (delta_other.is_zero())
    throw std::invalid_argument("certify_coprime_nonconcordance: zero polynomial");

  Certificate cert;
  cert.kind = "CoprimeSplit";
  cert.family_sha256 = family_hash(f);
  cert.inputs = Json{{"delta_other", laurent_to_json(delta_other)},
                     {"index", index},
                     {"n", n.get_str()}};

  AlexanderData ad = alexander(f.seifert);
  {
    LaurentPoly g = gcd_poly(delta_other, ad.delta);
    cert.checks.push_back({"coprime", "gcd = " + g.to_string(), g.breadth() == 0});
  }
  {
    Int an = abs(n);
    std::ostringstream w;
    Int ndeg = Int(ad.degree) * an;
    w << "deg Δ = " << ad.degree << ", deg Δ_nK = |n|·deg Δ = " << ndeg.get_str();
    cert.checks.push_back({"delta_nontrivial", w.str(), ad.degree >= 2});
  }
  {
    const Companion& ci = f.companions[index - 1];
    RatI integral = expr_sig_integral(ci.expr, Rat(1, 1000));
    std::ostringstream w;
    w << "integral > " << rat_to_string(integral.lo) << " vs C_K = "
      << f.bound.C.get_str();
    cert.checks.push_back(
        {"integral_exceeds", w.str(), integral.lo > Rat(f.bound.C)});
  }
  {
    AlexanderModule m = present_module(f.seifert);
    size_t dim = f.seifert.dim();
    bool ok = true;
    size_t tested = 0;
    for (size_t i = 0; i < dim && ok; ++i) {
      std::vector<LaurentPoly> ei(dim);
      ei[i] = LaurentPoly(Rat(1));
      if (module_element_is_zero(m, ei)) continue;
      ++tested;
      bool paired = false;
      for (size_t j = 0; j < dim && !paired; ++j) {
        std::vector<LaurentPoly> ej(dim);
        ej[j] = LaurentPoly(Rat(1));
        if (!bl_pair(f.seifert, ei, ej).is_zero()) paired = true;
      }
      ok = paired;
    }
    std::ostringstream w;
    w << tested << " nonzero generators, all pair nontrivially: "
      << (ok ? "yes" : "no");
    cert.checks.push_back({"blanchfield_nonsingular", w.str(), ok});
  }
  {
    SignatureProfile prof = sig_profile(f.seifert);
    bool zero = prof.identically_zero();
    cert.checks.push_back({"base_integral_zero",
                           zero ? "signature profile identically zero, integral = 0"
                                : "signature profile not identically zero",
                           zero});
  }

  cert.verdict = reverify(cert);
  return cert;
}

}  // namespace kc

#endif
