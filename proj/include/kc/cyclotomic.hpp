#ifndef KC_CYCLOTOMIC_HPP
#define KC_CYCLOTOMIC_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "kc/algebraic.hpp"
#include "kc/laurent.hpp"
#include "kc/poly.hpp"

namespace kc {

// d-th cyclotomic polynomial, computed by the recursive division
// x^d - 1 = prod_{e | d} Phi_e.  Memoized.
inline const Poly& cyclotomic(long d) {
  static std::map<long, Poly> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Rat> v(d + 1, Rat(0));
  v[0] = Rat(-1);
  v[d] = Rat(1);
  Poly f(std::move(v));
  for (long e = 1; e < d; ++e)
    if (d % e == 0) f = f / cyclotomic(e);
  return cache.emplace(d, std::move(f)).first->second;
}

// An element of the cyclotomic field Q(zeta_d), represented as a polynomial in
// zeta_d reduced modulo Phi_d.  The normal form makes the zero test exact.
struct CycloElt {
  long d = 1;
  Poly rep;  // deg < phi(d)

  bool is_zero() const { return rep.is_zero(); }
};

// Exact evaluation f(zeta_d^r) for a Laurent polynomial f.
inline CycloElt eval_root_of_unity(const LaurentPoly& f, long d, long r) {
  if (d < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<Rat> acc(d, Rat(0));
  for (auto& [e, c] : f.terms()) {
    long k = ((e * r) % d + d) % d;
    acc[k] += c;
  }
  Poly raw(std::move(acc));
  return CycloElt{d, raw % cyclotomic(d)};
}

inline long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

// Minimal polynomial (in s) of 2 cos(2 pi / d'), via the palindromic
// transform of Phi_{d'}; valid for d' >= 3.
inline const Poly& two_cos_minpoly(long dprime) {
  static std::map<long, Poly> cache;
  auto it = cache.find(dprime);
  if (it != cache.end()) return it->second;
  if (dprime < 3) throw std::invalid_argument("two_cos_minpoly needs order >= 3");
  Poly psi = palindromic_to_s(cyclotomic(dprime));
  auto prim = primitive_part(psi);
  return cache.emplace(dprime, from_int_coeffs(prim.coeffs)).first->second;
}

// Exact angle of the root of unity e^{2 pi i r / d} as an AlgebraicAngle.
// Requires the point to differ from +-1.  The conjugate flag of the matching
// UnitPoint is r > d/2 (lower half plane).
inline AlgebraicAngle angle_of_root_of_unity(long d, long r) {
  r = ((r % d) + d) % d;
  long g = std::gcd(r == 0 ? d : r, d);
  long dp = d / g, rp = (r / g) % dp;
  if (dp <= 2) throw std::invalid_argument("angle undefined at t = +-1");
  long k0 = std::min(rp, dp - rp);
  const Poly& psi = two_cos_minpoly(dp);
  auto intervals = isolate_roots(psi, Rat(-2), Rat(2));
  // roots ascending in s correspond to k = min(r', d'-r') descending
  std::vector<long> ks;
  for (long k = 1; 2 * k < dp; ++k)
    if (std::gcd(k, dp) == 1) ks.push_back(k);
  if (intervals.size() != ks.size())
    throw std::logic_error("cyclotomic root isolation mismatch");
  size_t pos = 0;
  while (pos < ks.size() && ks[pos] != k0) ++pos;
  size_t idx = ks.size() - 1 - pos;
  auto [lo, hi] = intervals[idx];
  return AlgebraicAngle(RealAlgebraic(psi, lo, hi));
}

}  // namespace kc

#endif
