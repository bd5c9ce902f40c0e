#ifndef KC_POLY_HPP
#define KC_POLY_HPP

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kc/rational.hpp"

namespace kc {

// Dense univariate polynomial over the rationals. The zero polynomial is
// represented by an empty coefficient vector; degree(0) = -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c) {
    if (sgn(c) != 0) coeffs_ = {c};
  }
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(int deg, const Rat& c = Rat(1)) {
    if (sgn(c) == 0) return Poly();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return (int)coeffs_.size() - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const {
    if (i < 0 || i > degree()) return Rat(0);
    return coeffs_[i];
  }
  const Rat& lc() const {
    assert(!is_zero());
    return coeffs_.back();
  }

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly operator+(const Poly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Poly(std::move(v));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
      for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(v));
  }

  Poly operator*(const Rat& c) const {
    Poly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
  }

  // Euclidean division; returns (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly r(*this), q;
    if (degree() >= d.degree()) {
      q.coeffs_.assign(degree() - d.degree() + 1, Rat(0));
      while (!r.is_zero() && r.degree() >= d.degree()) {
        Rat f = r.lc() / d.lc();
        int k = r.degree() - d.degree();
        q.coeffs_[k] = f;
        for (int i = 0; i <= d.degree(); ++i) r.coeffs_[i + k] -= f * d.coeffs_[i];
        r.trim();
      }
      q.trim();
    }
    return {q, r};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  bool divides(const Poly& f) const { return f.divmod(*this).second.is_zero(); }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat((long)i);
    return Poly(std::move(v));
  }

  Rat eval(const Rat& x) const {
    Rat r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly monic() const {
    if (is_zero()) return Poly();
    return *this * (Rat(1) / lc());
  }

  // f(x) -> f(x + a)
  Poly shift_arg(const Rat& a) const {
    Poly r, x(std::vector<Rat>{a, Rat(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + Poly(*it);
    return r;
  }

  // Reverse coefficients: x^deg * f(1/x).
  Poly reverse() const {
    std::vector<Rat> v(coeffs_.rbegin(), coeffs_.rend());
    return Poly(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

// Monic gcd; gcd(f, 0) = monic(f).
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Poly poly_pow(const Poly& f, unsigned e) {
  Poly r{Rat(1)}, b = f;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// Largest squarefree divisor, monic.
inline Poly squarefree_part(const Poly& f) {
  if (f.degree() < 1) return f.monic();
  Poly g = poly_gcd(f, f.derivative());
  return (f / g).monic();
}

// Clears denominators and content: returns (integer-coefficient primitive poly
// with positive leading coefficient) and the rational c with f = c * primitive.
struct PrimitivePart {
  std::vector<Int> coeffs;  // primitive, positive leading coefficient
  Rat content;
};

inline PrimitivePart primitive_part(const Poly& f) {
  if (f.is_zero()) return {{}, Rat(0)};
  Int l(1);
  for (auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> v;
  v.reserve(f.coeffs().size());
  Int g(0);
  for (auto& c : f.coeffs()) {
    Rat t = c * Rat(l);
    assert(den(t) == 1);
    v.push_back(num(t));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
  }
  if (sgn(v.back()) < 0) g = -g;
  for (auto& c : v) c /= g;
  return {std::move(v), Rat(g) / Rat(l)};
}

inline Poly from_int_coeffs(const std::vector<Int>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (auto& x : v) c.emplace_back(x);
  return Poly(std::move(c));
}

}  // namespace kc

#endif
