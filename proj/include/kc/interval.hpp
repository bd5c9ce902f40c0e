#ifndef KC_INTERVAL_HPP
#define KC_INTERVAL_HPP

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kc/rational.hpp"

namespace kc {

// Closed rational interval; arithmetic is exact, so enclosures stay certified.
// round_out coarsens endpoints to dyadic rationals to keep sizes bounded.
struct RatI {
  Rat lo, hi;

  RatI() : lo(0), hi(0) {}
  explicit RatI(const Rat& v) : lo(v), hi(v) {}
  RatI(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::logic_error("RatI: inverted interval");
  }

  Rat width() const { return hi - lo; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  int sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;  // undecided
  }
  Rat mid() const { return (lo + hi) / 2; }
};

inline RatI operator+(const RatI& a, const RatI& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline RatI operator-(const RatI& a, const RatI& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline RatI operator-(const RatI& a) { return {-a.hi, -a.lo}; }

inline RatI operator*(const RatI& a, const RatI& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline RatI operator*(const RatI& a, const Rat& c) {
  return sgn(c) >= 0 ? RatI{a.lo * c, a.hi * c} : RatI{a.hi * c, a.lo * c};
}

inline RatI operator/(const RatI& a, const RatI& b) {
  if (b.contains_zero()) throw std::domain_error("RatI: division by interval containing 0");
  RatI inv{Rat(1) / b.hi, Rat(1) / b.lo};
  return a * inv;
}

inline RatI round_out(const RatI& a, long prec) {
  Int scale = pow_int(Int(2), prec);
  Rat s(scale);
  return {Rat(rat_floor(a.lo * s)) / s, Rat(rat_ceil(a.hi * s)) / s};
}

// enclosure of sqrt(x) for x >= 0
inline RatI sqrt_enclosure(const RatI& x, long prec) {
  if (sgn(x.lo) < 0) throw std::domain_error("sqrt of negative interval");
  Int N = pow_int(Int(2), prec);
  auto bound = [&](const Rat& a, bool up) {
    Int pq = num(a) * den(a) * N * N;
    Int t;
    mpz_sqrt(t.get_mpz_t(), pq.get_mpz_t());
    if (up) t += 1;
    Int d = den(a) * N;
    Rat r(t, d);
    r.canonicalize();
    return r;
  };
  return {bound(x.lo, false), bound(x.hi, true)};
}

// enclosure of arctan(y) for y >= 0, via argument halving and the Maclaurin
// series with alternating-series remainder bound
inline RatI atan_enclosure(RatI y, long prec) {
  if (sgn(y.lo) < 0) throw std::domain_error("atan_enclosure needs y >= 0");
  long wp = prec + 8;
  int halvings = 0;
  RatI one{Rat(1)};
  while (y.hi > Rat(1, 2)) {
    RatI s = sqrt_enclosure(one + y * y, wp);
    y = round_out(y / (one + s), wp);
    ++halvings;
    if (halvings > 64) throw std::logic_error("atan reduction runaway");
  }
  // sum_{k} (-1)^k y^{2k+1} / (2k+1), remainder bounded by the next term
  RatI sum{Rat(0)};
  RatI p = y;  // y^{2k+1}
  RatI y2 = round_out(y * y, wp);
  long k = 0;
  Rat tol = Rat(1) / Rat(pow_int(Int(2), wp));
  for (;;) {
    Rat denom(2 * k + 1);
    RatI term{p.lo / denom, p.hi / denom};
    if (k % 2 == 0)
      sum = sum + term;
    else
      sum = sum - term;
    // bound on the next term magnitude
    Rat next_bound = p.hi * y2.hi / Rat(2 * k + 3);
    if (next_bound <= tol) {
      sum = sum + RatI{-next_bound, next_bound};
      break;
    }
    p = round_out(p * y2, wp);
    sum = round_out(sum, wp);
    ++k;
    if (k > 4 * wp) throw std::logic_error("atan series runaway");
  }
  Rat mult = pow_rat(Rat(2), halvings);
  return sum * mult;
}

inline const RatI& pi_enclosure(long prec) {
  static std::map<long, RatI> cache;
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;
  RatI a = atan_enclosure(RatI{Rat(1, 5)}, prec + 8);
  RatI b = atan_enclosure(RatI{Rat(1, 239)}, prec + 8);
  RatI pi = a * Rat(16) - b * Rat(4);
  return cache.emplace(prec, round_out(pi, prec)).first->second;
}

// enclosure of arccos(x) for x strictly inside (-1, 1):
// arccos x = 2 arctan( sqrt((1-x)/(1+x)) )
inline RatI acos_enclosure(const RatI& x, long prec) {
  if (!(x.lo > Rat(-1) && x.hi < Rat(1)))
    throw std::domain_error("acos_enclosure needs x inside (-1,1)");
  long wp = prec + 8;
  RatI one{Rat(1)};
  RatI ratio = (one - x) / (one + x);
  RatI r = sqrt_enclosure(round_out(ratio, wp), wp);
  return atan_enclosure(r, wp) * Rat(2);
}

}  // namespace kc

#endif
