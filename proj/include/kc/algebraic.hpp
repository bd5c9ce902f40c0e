#ifndef KC_ALGEBRAIC_HPP
#define KC_ALGEBRAIC_HPP

#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kc/laurent.hpp"
#include "kc/poly.hpp"
#include "kc/sturm.hpp"
#include "kc/zfactor.hpp"

namespace kc {

// A real algebraic number: irreducible primitive integer minimal polynomial
// together with an isolating interval whose endpoints are not roots.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rat(0)) {}

  explicit RealAlgebraic(const Rat& q)
      : minpoly_(from_int_coeffs(
            primitive_part(Poly(std::vector<Rat>{-q, Rat(1)})).coeffs)),
        lo_(q - 1), hi_(q + 1) {}

  RealAlgebraic(Poly minpoly, Rat lo, Rat hi)
      : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (minpoly_.degree() < 1) throw std::invalid_argument("constant minpoly");
  }

  const Poly& minpoly() const { return minpoly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  bool is_rational() const { return minpoly_.degree() == 1; }
  Rat rational_value() const {
    assert(is_rational());
    return -minpoly_.coeff(0) / minpoly_.coeff(1);
  }

  void refine() const {
    if (is_rational()) {
      Rat v = rational_value();
      Rat w = (hi_ - lo_) / 4;
      lo_ = v - w;
      hi_ = v + w;
      return;
    }
    refine_root(minpoly_, lo_, hi_);
  }

  void refine_below(const Rat& width) const {
    while (hi_ - lo_ > width) refine();
  }

  double approx() const {
    refine_below(Rat(1, 1000000));
    return to_double((lo_ + hi_) / 2);
  }

  bool same_number(const RealAlgebraic& o) const;

 private:
  Poly minpoly_;
  mutable Rat lo_, hi_;
};

// three-way comparison: -1, 0, +1 for a < b, a == b, a > b
inline int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) {
    Rat d = a.rational_value() - b.rational_value();
    return sgn(d);
  }
  bool same_poly = a.minpoly() == b.minpoly();
  SturmChain chain(a.minpoly());
  for (;;) {
    if (a.hi() < b.lo()) return -1;
    if (b.hi() < a.lo()) return 1;
    if (same_poly) {
      Rat lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
      if (chain.count_roots(lo, hi) == 1) return 0;
    }
    a.refine();
    b.refine();
  }
}

inline bool RealAlgebraic::same_number(const RealAlgebraic& o) const {
  return compare(*this, o) == 0;
}

// Exact point angle theta = arccos(s0/2) in (0, pi), where s0 is the unique
// root of an irreducible polynomial in s = t + 1/t inside the isolating
// interval, which lies in (-2, 2).
class AlgebraicAngle {
 public:
  explicit AlgebraicAngle(RealAlgebraic two_cos) : two_cos_(std::move(two_cos)) {
    if (!(two_cos_.lo() >= Rat(-2) && two_cos_.hi() <= Rat(2)))
      throw std::invalid_argument("AlgebraicAngle: interval not inside (-2,2)");
  }

  static AlgebraicAngle from_cos(const Rat& c) {
    if (!(c > -1 && c < 1)) throw std::invalid_argument("cos must lie in (-1,1)");
    RealAlgebraic s(Rat(2) * c);
    // tighten the default interval into (-2, 2)
    Rat gap_hi = Rat(2) - 2 * c, gap_lo = Rat(2) + 2 * c;
    s.refine_below(std::min(gap_hi, gap_lo) / 2);
    return AlgebraicAngle(s);
  }

  // the algebraic number 2 cos(theta)
  const RealAlgebraic& two_cos() const { return two_cos_; }

  bool is_rational_cos() const { return two_cos_.is_rational(); }
  Rat cos_value() const { return two_cos_.rational_value() / 2; }

  double approx_radians() const { return std::acos(two_cos_.approx() / 2); }

 private:
  RealAlgebraic two_cos_;
};

// angle order: theta increasing <=> 2cos(theta) decreasing
inline int compare_angle(const AlgebraicAngle& a, const AlgebraicAngle& b) {
  return -compare(a.two_cos(), b.two_cos());
}

// A point on the unit circle: either an exact root of unity e^{2 pi i r / d}
// or e^{+-i theta} for an algebraic angle.
struct UnitPoint {
  enum class Kind { RootOfUnity, Angle } kind;
  long d = 1, r = 0;                   // RootOfUnity
  std::optional<AlgebraicAngle> angle; // Angle
  bool conjugate = false;

  static UnitPoint root_of_unity(long d, long r) {
    if (d < 1) throw std::invalid_argument("order must be positive");
    r %= d;
    if (r < 0) r += d;
    return UnitPoint{Kind::RootOfUnity, d, r, std::nullopt, false};
  }
  static UnitPoint from_angle(AlgebraicAngle a, bool conj = false) {
    return UnitPoint{Kind::Angle, 1, 0, std::move(a), conj};
  }
  static UnitPoint one() { return root_of_unity(1, 0); }
  static UnitPoint minus_one() { return root_of_unity(2, 1); }

  bool is_one() const { return kind == Kind::RootOfUnity && r == 0; }
  bool is_minus_one() const { return kind == Kind::RootOfUnity && d == 2 * r; }
};

// Unimodular roots of f away from t = +-1, one angle per conjugate pair,
// without multiplicity, sorted by increasing angle.  Roots at t = +-1 are
// reported as flags.
struct UnitCircleRoots {
  std::vector<AlgebraicAngle> angles;
  bool root_at_one = false;
  bool root_at_minus_one = false;
};

// h(t)/t^m as a polynomial in s = t + 1/t, for palindromic h of degree 2m.
inline Poly palindromic_to_s(const Poly& h) {
  int m = h.degree() / 2;
  assert(h.degree() == 2 * m);
  Poly C_prev(Rat(2));                               // t^0 + t^0
  Poly C_cur = Poly::monomial(1);                    // t + 1/t
  Poly s = Poly::monomial(1);
  Poly out = Poly(h.coeff(m)) * Rat(1);
  for (int j = 1; j <= m; ++j) {
    assert(h.coeff(m + j) == h.coeff(m - j));
    out = out + C_cur * h.coeff(m + j);
    Poly next = s * C_cur - C_prev;
    C_prev = C_cur;
    C_cur = next;
  }
  return out;
}

inline UnitCircleRoots unit_circle_roots(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("unit_circle_roots: zero input");
  UnitCircleRoots out;
  Poly p = f.to_poly();
  if (p.degree() == 0) return out;
  out.root_at_one = sgn(p.eval(Rat(1))) == 0;
  out.root_at_minus_one = sgn(p.eval(Rat(-1))) == 0;
  Poly h = poly_gcd(p, p.reverse());
  h = squarefree_part(h);
  // strip roots at +-1
  for (Rat r : {Rat(1), Rat(-1)}) {
    Poly lin(std::vector<Rat>{-r, Rat(1)});
    while (sgn(h.eval(r)) == 0) h = h / lin;
  }
  if (h.degree() < 2) return out;
  auto prim = primitive_part(h);
  h = from_int_coeffs(prim.coeffs);
  Poly P = palindromic_to_s(h);
  auto fac = factor_rational(LaurentPoly::from_poly(P));
  for (auto& [g, mult] : fac.factors) {
    Poly gp = g.to_poly();
    if (gp.degree() < 1) continue;
    for (auto& [lo, hi] : isolate_roots(gp, Rat(-2), Rat(2)))
      out.angles.emplace_back(RealAlgebraic(gp, lo, hi));
  }
  std::sort(out.angles.begin(), out.angles.end(),
            [](const AlgebraicAngle& a, const AlgebraicAngle& b) {
              return compare_angle(a, b) < 0;
            });
  return out;
}

}  // namespace kc

#endif
