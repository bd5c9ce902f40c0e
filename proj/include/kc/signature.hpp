#ifndef KC_SIGNATURE_HPP
#define KC_SIGNATURE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kc/algebraic.hpp"
#include "kc/cyclotomic.hpp"
#include "kc/interval.hpp"
#include "kc/numberfield.hpp"
#include "kc/seifert.hpp"

namespace kc {

struct SigValue {
  long signature = 0;
  long nullity = 0;
};

namespace detail {

// Signature and nullity of a symmetric matrix over an exact real field, by
// symmetric congruence elimination with certified pivot signs.
inline std::pair<long, long> sym_signature(std::vector<std::vector<NFElt>> m) {
  long pos = 0, neg = 0, null = 0;
  std::vector<size_t> act(m.size());
  for (size_t i = 0; i < m.size(); ++i) act[i] = i;
  while (!act.empty()) {
    size_t n = act.size();
    size_t piv = n;
    int psign = 0;
    for (size_t k = 0; k < n && piv == n; ++k) {
      int s = m[act[k]][act[k]].sign();
      if (s != 0) {
        piv = k;
        psign = s;
      }
    }
    if (piv == n) {
      // all active diagonal entries vanish; look for an off-diagonal entry
      size_t oi = n, oj = n;
      for (size_t i = 0; i < n && oi == n; ++i)
        for (size_t j = i + 1; j < n && oi == n; ++j)
          if (m[act[i]][act[j]].sign() != 0) {
            oi = i;
            oj = j;
          }
      if (oi == n) {
        null += (long)n;
        break;
      }
      // congruence by (row_i += row_j; col_i += col_j): the (i,i) entry
      // becomes 2 m_ij != 0
      size_t a = act[oi], b = act[oj];
      for (size_t k : act) m[a][k] = m[a][k] + m[b][k];
      for (size_t k : act) m[k][a] = m[k][a] + m[k][b];
      continue;
    }
    size_t p = act[piv];
    if (psign > 0)
      ++pos;
    else
      ++neg;
    NFElt d = m[p][p];
    std::vector<size_t> rest;
    for (size_t k = 0; k < n; ++k)
      if (k != piv) rest.push_back(act[k]);
    for (size_t i : rest) {
      NFElt f = m[i][p] / d;
      for (size_t j : rest) m[i][j] = m[i][j] - f * m[p][j];
    }
    act = std::move(rest);
  }
  return {pos - neg, null};
}

// Dummy coefficient field for purely rational computations.
inline const NFCtxPtr& rational_ctx() {
  static NFCtxPtr ctx =
      std::make_shared<NFContext>(AlgebraicAngle::from_cos(Rat(1, 2)));
  return ctx;
}

// Rational 2cos sample strictly between two consecutive jump angles; the
// endpoints are optional (absent = circle points t = 1 / t = -1).
inline Rat sample_two_cos_between(const AlgebraicAngle* smaller_angle,
                                  const AlgebraicAngle* larger_angle) {
  // smaller angle <=> larger 2cos value
  Rat hi(2), lo(-2);
  if (smaller_angle && larger_angle) {
    for (;;) {
      const RealAlgebraic& a = smaller_angle->two_cos();
      const RealAlgebraic& b = larger_angle->two_cos();
      if (b.hi() < a.lo()) return (b.hi() + a.lo()) / 2;
      a.refine();
      b.refine();
    }
  }
  if (smaller_angle) {
    const RealAlgebraic& a = smaller_angle->two_cos();
    while (!(a.lo() > lo)) a.refine();
    return (a.lo() + lo) / 2;
  }
  if (larger_angle) {
    const RealAlgebraic& b = larger_angle->two_cos();
    while (!(b.hi() < hi)) b.refine();
    return (b.hi() + hi) / 2;
  }
  return Rat(0);
}

}  // namespace detail

inline SigValue lt_signature(const SeifertMatrix& v, const UnitPoint& w);

namespace detail {

// Signature at the interior angle theta via the Hermitian form
// (1-w)V + (1-conj w)V^T realified and made block-rational: with
// c = cos t, s = sin t, the form is X + iY for X = (1-c)(V+V^T),
// Y = -s(V-V^T) = -s A; congruence of [[X, -Y],[Y, X]] by diag(I, (1/s)I)
// yields [[X, A],[-A, X/(1-c^2)]], all entries in Q(2cos t).
inline std::pair<long, long> signature_at_angle(const SeifertMatrix& v,
                                                const AlgebraicAngle& theta) {
  size_t n = v.dim();
  if (n == 0) return {0, 0};
  auto ctx = std::make_shared<NFContext>(theta);
  // 1 - c = 1 - a/2 and u = 1 - a^2/4 = s^2 as elements of Q(a)
  Poly one_minus_c = ctx->reduce(Poly(std::vector<Rat>{Rat(1), Rat(-1, 2)}));
  Poly inv_u = ctx->invert_base(ctx->u());
  auto base = [&](const Poly& p) { return NFElt(ctx, p); };
  std::vector<std::vector<NFElt>> m(2 * n, std::vector<NFElt>(2 * n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat sym(v.at(i, j) + v.at(j, i));
      Rat skew(v.at(i, j) - v.at(j, i));
      m[i][j] = base(one_minus_c * sym);
      m[n + i][n + j] = base(ctx->reduce(one_minus_c * inv_u) * sym);
      m[i][n + j] = NFElt::rational(ctx, skew);
      m[n + i][j] = NFElt::rational(ctx, -skew);
    }
  auto [sig2, null2] = sym_signature(std::move(m));
  if (sig2 % 2 != 0 || null2 % 2 != 0)
    throw std::logic_error("realified signature must be even");
  return {sig2 / 2, null2 / 2};
}

}  // namespace detail

// Exact Levine-Tristram signature and nullity at a unit-circle point.  At
// singular interior points (roots of delta) the signature reported is the
// two-sided average of the adjacent arc values, with positive nullity.
inline SigValue lt_signature(const SeifertMatrix& v, const UnitPoint& w) {
  size_t n = v.dim();
  if (w.is_one()) return {0, (long)n};
  if (w.is_minus_one()) {
    // 2(V + V^T); never singular since delta(-1) is odd
    auto ctx = detail::rational_ctx();
    std::vector<std::vector<NFElt>> m(n, std::vector<NFElt>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        m[i][j] = NFElt::rational(ctx, Rat(2 * (v.at(i, j) + v.at(j, i))));
    auto [sig, null] = detail::sym_signature(std::move(m));
    if (null != 0) throw std::logic_error("singular form at t = -1");
    return {sig, null};
  }
  AlgebraicAngle theta = w.kind == UnitPoint::Kind::RootOfUnity
                             ? angle_of_root_of_unity(w.d, w.r)
                             : *w.angle;
  auto [sig, null] = detail::signature_at_angle(v, theta);
  if (null == 0) return {sig, null};
  // singular point: theta is a jump angle of delta; average the two arcs
  LaurentPoly delta = alexander(v).delta;
  UnitCircleRoots roots = unit_circle_roots(delta);
  size_t idx = roots.angles.size();
  for (size_t i = 0; i < roots.angles.size(); ++i)
    if (compare_angle(theta, roots.angles[i]) == 0) idx = i;
  if (idx == roots.angles.size())
    throw std::logic_error("singular point not among the jump angles");
  const AlgebraicAngle* left = idx > 0 ? &roots.angles[idx - 1] : nullptr;
  const AlgebraicAngle* right =
      idx + 1 < roots.angles.size() ? &roots.angles[idx + 1] : nullptr;
  Rat sl = detail::sample_two_cos_between(left, &roots.angles[idx]);
  Rat sr = detail::sample_two_cos_between(&roots.angles[idx], right);
  long vl = lt_signature(v, UnitPoint::from_angle(AlgebraicAngle::from_cos(sl / 2)))
                .signature;
  long vr = lt_signature(v, UnitPoint::from_angle(AlgebraicAngle::from_cos(sr / 2)))
                .signature;
  if ((vl + vr) % 2 != 0)
    throw std::logic_error("arc values of unequal parity at a jump");
  return {(vl + vr) / 2, null};
}

namespace detail {
inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}
}  // namespace detail

// Sum of signatures over all p-th roots of unity (r = 0 contributes 0).
inline long sig_sum(const SeifertMatrix& v, long p) {
  if (!detail::is_prime(p)) throw std::invalid_argument("sig_sum: p must be prime");
  LaurentPoly delta = alexander(v).delta;
  for (long r = 1; r < p; ++r)
    if (eval_root_of_unity(delta, p, r).is_zero())
      throw std::domain_error("sig_sum: singular evaluation point r = " +
                              std::to_string(r) + " of order " + std::to_string(p));
  if (p == 2) return lt_signature(v, UnitPoint::minus_one()).signature;
  long sum = 0;
  for (long r = 1; 2 * r < p; ++r)
    sum += 2 * lt_signature(v, UnitPoint::root_of_unity(p, r)).signature;
  return sum;
}

// Step-function profile on the upper half circle: jump angles (the unimodular
// roots of delta) and the constant value on each open arc, including the arcs
// touching t = 1 and t = -1.  sigma(1) = 0 by convention.
struct SignatureProfile {
  std::vector<AlgebraicAngle> jumps;
  std::vector<long> arc_values;  // size jumps.size() + 1

  bool identically_zero() const {
    for (long v : arc_values)
      if (v != 0) return false;
    return true;
  }
};

inline SignatureProfile sig_profile(const SeifertMatrix& v) {
  SignatureProfile out;
  LaurentPoly delta = alexander(v).delta;
  out.jumps = unit_circle_roots(delta).angles;
  size_t k = out.jumps.size();
  for (size_t arc = 0; arc <= k; ++arc) {
    const AlgebraicAngle* sm = arc > 0 ? &out.jumps[arc - 1] : nullptr;
    const AlgebraicAngle* lg = arc < k ? &out.jumps[arc] : nullptr;
    Rat s = detail::sample_two_cos_between(sm, lg);
    SigValue sv =
        lt_signature(v, UnitPoint::from_angle(AlgebraicAngle::from_cos(s / 2)));
    if (sv.nullity != 0) throw std::logic_error("singular sample inside an arc");
    if (sv.signature % 2 != 0) throw std::logic_error("odd arc value");
    out.arc_values.push_back(sv.signature);
  }
  return out;
}

// Certified enclosure of the normalized signature integral over the circle
// (Haar measure of total mass 1); exact zero when the profile vanishes.
inline RatI sig_integral(const SeifertMatrix& v, const Rat& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("sig_integral: tol must be positive");
  SignatureProfile prof = sig_profile(v);
  if (prof.identically_zero()) return RatI{Rat(0)};
  for (long prec = 32;; prec *= 2) {
    const RatI& pi = pi_enclosure(prec);
    // theta_i enclosures from the refined 2cos intervals
    std::vector<RatI> theta;
    theta.push_back(RatI{Rat(0)});
    Rat w = Rat(1) / Rat(pow_int(Int(2), prec));
    for (auto& a : prof.jumps) {
      a.two_cos().refine_below(w);
      RatI c{a.two_cos().lo() / 2, a.two_cos().hi() / 2};
      theta.push_back(acos_enclosure(c, prec));
    }
    theta.push_back(pi);
    RatI acc{Rat(0)};
    for (size_t arc = 0; arc < prof.arc_values.size(); ++arc) {
      RatI len{theta[arc + 1].lo - theta[arc].hi, theta[arc + 1].hi - theta[arc].lo};
      acc = acc + len * Rat(prof.arc_values[arc]);
    }
    RatI result = acc / pi;
    if (result.width() <= tol) return result;
  }
}

}  // namespace kc

#endif
