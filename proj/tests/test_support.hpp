#ifndef KC_TEST_SUPPORT_HPP
#define KC_TEST_SUPPORT_HPP

#include <random>

#include "kc/imatrix.hpp"
#include "kc/seifert.hpp"

namespace kctest {

// Random valid Seifert matrix: symplectic skew part plus a symmetric
// perturbation, optionally scrambled by a unimodular congruence.
// With planted = true the upper-left g x g block is zero, so the first g
// standard basis vectors span a metabolizer (before scrambling).
inline kc::SeifertMatrix random_seifert(std::mt19937& rng, int max_g, int max_entry,
                                        bool scramble = true, bool planted = false) {
  std::uniform_int_distribution<int> dg(planted ? 1 : 0, max_g),
      de(-max_entry, max_entry);
  size_t g = (size_t)dg(rng);
  size_t n = 2 * g;
  kc::IMat s(n, std::vector<kc::Int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      kc::Int e(de(rng));
      s[i][j] = e;
      s[j][i] = e;
    }
  if (planted)
    for (size_t i = 0; i < g; ++i)
      for (size_t j = 0; j < g; ++j) s[i][j] = 0;
  for (size_t i = 0; i < g; ++i) s[i][g + i] += 1;  // V - V^T = [[0,I],[-I,0]]
  if (scramble && n > 0) {
    kc::IMat p = kc::random_unimodular(n, rng);
    s = kc::mat_mul(kc::mat_mul(kc::transpose(p), s), p);
  }
  return kc::SeifertMatrix::validate(std::move(s));
}

inline kc::SeifertMatrix seifert2x2(long a, long b, long c, long d) {
  return kc::SeifertMatrix::validate(
      {{kc::Int(a), kc::Int(b)}, {kc::Int(c), kc::Int(d)}});
}

inline kc::SeifertMatrix trefoil() { return seifert2x2(-1, 1, 0, -1); }
inline kc::SeifertMatrix v_six() { return seifert2x2(0, 2, 1, 0); }
inline kc::SeifertMatrix unknot() { return kc::SeifertMatrix::validate({}); }

}  // namespace kctest

#endif
