#ifndef KC_ALG_CONCORDANCE_HPP
#define KC_ALG_CONCORDANCE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kc/imatrix.hpp"
#include "kc/seifert.hpp"
#include "kc/zfactor.hpp"

namespace kc {

// Fox-Milnor condition: delta = f(t) f(1/t) up to units.  Decided by pairing
// each irreducible factor with its conjugate; self-conjugate factors need
// even multiplicity.
inline bool fox_milnor(const LaurentPoly& delta) {
  if (delta.is_zero()) throw std::invalid_argument("fox_milnor: zero polynomial");
  if (delta.breadth() == 0) return true;
  auto fac = factor_rational(delta);
  std::map<std::map<long, Rat>, int> mult;
  for (auto& [f, m] : fac.factors) mult[f.terms()] = m;
  for (auto& [f, m] : fac.factors) {
    LaurentPoly fc = f.conj().canonical();
    if (fc == f) {
      if (m % 2 != 0) return false;
    } else {
      auto it = mult.find(fc.terms());
      if (it == mult.end() || it->second != m) return false;
    }
  }
  return true;
}

// Basis of a rank-g subgroup of Z^{2g}, candidate metabolizer for V.
struct Metabolizer {
  IMat basis;  // 2g rows, g columns
};

// True iff the columns of h span a primitive rank-g summand on which the
// Seifert form vanishes (both pairing orders).
inline bool verify_metabolizer(const SeifertMatrix& v, const IMat& h) {
  size_t n = v.dim(), g = v.genus();
  if (rows(h) != n) throw std::invalid_argument("metabolizer: row count must be 2g");
  for (auto& r : h)
    if (r.size() != g) throw std::invalid_argument("metabolizer: column count must be g");
  if (g == 0) return true;
  std::vector<Int> inv = smith_invariants(h);
  if (inv.size() != g) return false;
  for (auto& d : inv)
    if (d != 1) return false;
  for (size_t a = 0; a < g; ++a)
    for (size_t b = 0; b < g; ++b) {
      Int acc(0);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) acc += h[i][a] * v.at(i, j) * h[j][b];
      if (acc != 0) return false;
    }
  return true;
}

namespace detail {

// Primitive vectors in [-B, B]^n with positive first nonzero entry, in
// lexicographic order.
inline std::vector<std::vector<Int>> isotropic_candidates(const SeifertMatrix& v,
                                                          long bound) {
  size_t n = v.dim();
  std::vector<std::vector<Int>> out;
  std::vector<long> x(n, bound);
  for (;;) {
    // keep one vector per +- pair: first nonzero entry positive
    size_t fz = 0;
    while (fz < n && x[fz] == 0) ++fz;
    if (fz < n && x[fz] > 0) {
      Int g(0), self(0);
      std::vector<Int> vec(n);
      for (size_t i = 0; i < n; ++i) {
        vec[i] = x[i];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), vec[i].get_mpz_t());
      }
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) self += vec[i] * v.at(i, j) * vec[j];
      if (g == 1 && self == 0) out.push_back(std::move(vec));
    }
    size_t k = n;
    while (k > 0 && x[k - 1] == -bound) x[--k] = bound;
    if (k == 0) break;
    --x[k - 1];
  }
  return out;
}

inline bool extend_metabolizer(const SeifertMatrix& v,
                               const std::vector<std::vector<Int>>& cands,
                               std::vector<std::vector<Int>>& chosen, size_t from) {
  size_t g = v.genus(), n = v.dim();
  if (chosen.size() == g) {
    IMat h(n, std::vector<Int>(g));
    for (size_t c = 0; c < g; ++c)
      for (size_t i = 0; i < n; ++i) h[i][c] = chosen[c][i];
    return verify_metabolizer(v, h);
  }
  for (size_t c = from; c < cands.size(); ++c) {
    bool ok = true;
    for (auto& y : chosen) {
      Int xy(0), yx(0);
      for (size_t i = 0; i < n && ok; ++i)
        for (size_t j = 0; j < n; ++j) {
          xy += cands[c][i] * v.at(i, j) * y[j];
          yx += y[i] * v.at(i, j) * cands[c][j];
        }
      if (xy != 0 || yx != 0) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(cands[c]);
    if (extend_metabolizer(v, cands, chosen, c + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

// Bounded-height search; absence does not certify nonexistence.  The first
// metabolizer in lexicographic order of the chosen column vectors is returned.
inline std::optional<Metabolizer> search_metabolizer(const SeifertMatrix& v,
                                                     long height_bound) {
  if (height_bound < 1) throw std::invalid_argument("height bound must be positive");
  size_t n = v.dim(), g = v.genus();
  if (g == 0) return Metabolizer{IMat{}};
  auto cands = detail::isotropic_candidates(v, height_bound);
  std::vector<std::vector<Int>> chosen;
  if (!detail::extend_metabolizer(v, cands, chosen, 0)) return std::nullopt;
  IMat h(n, std::vector<Int>(g));
  for (size_t c = 0; c < g; ++c)
    for (size_t i = 0; i < n; ++i) h[i][c] = chosen[c][i];
  return Metabolizer{std::move(h)};
}

// Policy gate for "algebraically slice" in the forge: Fox-Milnor is
// mandatory; beyond it, accept a user certificate, a bounded search hit, or
// an explicit override.
struct SlicePolicy {
  std::optional<IMat> certificate;
  long search_bound = 1;
  bool override_flag = false;
};

struct SliceValidation {
  bool accepted = false;
  bool fox_milnor_ok = false;
  std::string how;  // "certificate" | "search" | "override" | ""
  std::optional<Metabolizer> metabolizer;
};

inline SliceValidation validate_algebraically_slice(const SeifertMatrix& v,
                                                    const SlicePolicy& policy) {
  SliceValidation out;
  out.fox_milnor_ok = fox_milnor(alexander(v).delta);
  if (!out.fox_milnor_ok) return out;
  if (policy.certificate) {
    if (verify_metabolizer(v, *policy.certificate)) {
      out.accepted = true;
      out.how = "certificate";
      out.metabolizer = Metabolizer{*policy.certificate};
      return out;
    }
    return out;  // a supplied certificate that fails is a hard reject
  }
  if (auto m = search_metabolizer(v, policy.search_bound)) {
    out.accepted = true;
    out.how = "search";
    out.metabolizer = std::move(m);
    return out;
  }
  if (policy.override_flag) {
    out.accepted = true;
    out.how = "override";
  }
  return out;
}

}  // namespace kc

#endif
