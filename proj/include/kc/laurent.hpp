#ifndef KC_LAURENT_HPP
#define KC_LAURENT_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "kc/poly.hpp"
#include "kc/rational.hpp"

namespace kc {

// Laurent polynomial over the rationals: finitely many terms c * t^e with
// integer exponent e of either sign. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& c) {
    if (sgn(c) != 0) terms_[0] = c;
  }

  static LaurentPoly term(long e, const Rat& c) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_[e] = c;
    return p;
  }

  static LaurentPoly from_poly(const Poly& f, long shift = 0) {
    LaurentPoly p;
    for (int i = 0; i <= f.degree(); ++i)
      if (sgn(f.coeff(i)) != 0) p.terms_[i + shift] = f.coeff(i);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.count(0) && terms_.at(0) == 1; }
  const std::map<long, Rat>& terms() const { return terms_; }

  long min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of zero");
    return terms_.begin()->first;
  }
  long max_exp() const {
    if (is_zero()) throw std::domain_error("max_exp of zero");
    return terms_.rbegin()->first;
  }
  // Exponent span; equals deg of the shifted ordinary polynomial.
  long breadth() const { return is_zero() ? -1 : max_exp() - min_exp(); }

  Rat coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void set(long e, const Rat& c) {
    if (sgn(c) == 0)
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : terms_)
      for (auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
  }
  LaurentPoly operator*(const Rat& c) const {
    LaurentPoly r;
    for (auto& [e, x] : terms_) r.set(e, x * c);
    return r;
  }

  // t -> 1/t
  LaurentPoly conj() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  // Shift so that the minimum exponent is 0; ordinary polynomial form.
  Poly to_poly() const {
    if (is_zero()) return Poly();
    long m = min_exp();
    std::vector<Rat> v(max_exp() - m + 1, Rat(0));
    for (auto& [e, c] : terms_) v[e - m] = c;
    return Poly(std::move(v));
  }

  Rat eval(const Rat& x) const {
    if (sgn(x) == 0) throw std::domain_error("LaurentPoly eval at 0");
    Rat r(0);
    for (auto& [e, c] : terms_) r += c * pow_rat(x, e);
    return r;
  }

  // Canonical representative modulo units +-t^k: minimum exponent 0, integer
  // primitive coefficients scaled back to... we keep rational coefficients but
  // normalize so that the leading coefficient is positive and the coefficient
  // tuple is the primitive integer one divided by nothing. Alexander
  // polynomials of knots have integer coefficients; generic inputs keep a
  // positive-leading-coefficient normalization with content reduced to a
  // primitive integer vector.
  LaurentPoly canonical() const {
    if (is_zero()) return LaurentPoly();
    Poly p = to_poly();
    auto pp = primitive_part(p);
    return from_poly(from_int_coeffs(pp.coeffs));
  }

  bool equals_up_to_units(const LaurentPoly& o) const {
    return canonical() == o.canonical();
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rat a = c;
      if (first) {
        if (sgn(a) < 0) os << "-", a = -a;
      } else {
        os << (sgn(a) < 0 ? "-" : "+");
        if (sgn(a) < 0) a = -a;
      }
      bool unit_coeff = (a == 1) && e != 0;
      if (!unit_coeff) os << rat_to_string(a);
      if (e != 0) {
        if (!unit_coeff) os << "*";
        os << "t";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::map<long, Rat> terms_;
};

inline LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

// Monic-normalized gcd up to units +-t^k; gcd(f, 0) = canonical(f).
inline LaurentPoly gcd_poly(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero()) return g.canonical();
  if (g.is_zero()) return f.canonical();
  Poly d = poly_gcd(f.to_poly(), g.to_poly());
  return LaurentPoly::from_poly(d).canonical();
}

inline bool coprime(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("coprime: zero input");
  return gcd_poly(a, b).breadth() == 0;
}

// x^deg * p(1/x) for an ordinary polynomial viewed inside the Laurent ring;
// conjugate factor in the Fox-Milnor sense.
inline LaurentPoly laurent_conj_canonical(const LaurentPoly& f) {
  return f.conj().canonical();
}

inline LaurentPoly laurent_pow(const LaurentPoly& f, unsigned long e) {
  LaurentPoly r{Rat(1)}, b = f;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

}  // namespace kc

#endif
