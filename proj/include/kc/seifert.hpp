#ifndef KC_SEIFERT_HPP
#define KC_SEIFERT_HPP

#include <stdexcept>
#include <utility>

#include "kc/imatrix.hpp"
#include "kc/laurent.hpp"
#include "kc/poly.hpp"

namespace kc {

// Integer Seifert matrix of even dimension 2g with unimodular skew part
// det(V - V^T) = 1.  The 0x0 matrix is the unknot.
class SeifertMatrix {
 public:
  static SeifertMatrix validate(IMat m) {
    if (!is_square(m)) throw std::invalid_argument("Seifert matrix must be square");
    if (rows(m) % 2 != 0) throw std::invalid_argument("Seifert matrix dimension must be even");
    IMat skew(rows(m), std::vector<Int>(rows(m)));
    for (size_t i = 0; i < rows(m); ++i)
      for (size_t j = 0; j < rows(m); ++j) skew[i][j] = m[i][j] - m[j][i];
    if (rows(m) > 0 && det_int(skew) != 1)
      throw std::invalid_argument("det(V - V^T) must be 1");
    return SeifertMatrix(std::move(m));
  }

  size_t dim() const { return rows(m_); }
  size_t genus() const { return dim() / 2; }
  const IMat& entries() const { return m_; }
  const Int& at(size_t i, size_t j) const { return m_[i][j]; }

  bool operator==(const SeifertMatrix& o) const { return m_ == o.m_; }

 private:
  explicit SeifertMatrix(IMat m) : m_(std::move(m)) {}
  IMat m_;
};

struct AlexanderData {
  LaurentPoly delta;  // canonical
  Int top_coeff;
  long degree = 0;
};

// det(V - t V^T), by evaluation at 2g+1 rational points and Lagrange
// interpolation; exact since the degree is at most 2g.
inline Poly alexander_raw(const SeifertMatrix& v) {
  size_t n = v.dim();
  if (n == 0) return Poly(Rat(1));
  std::vector<Rat> xs, ys;
  for (size_t k = 0; k <= n; ++k) {
    Rat t((long)k);
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[i][j] = Rat(v.at(i, j)) - t * Rat(v.at(j, i));
    xs.push_back(t);
    ys.push_back(det_rat(std::move(a)));
  }
  Poly p;
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly li(Rat(1));
    Rat denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      li = li * Poly(std::vector<Rat>{-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    p = p + li * (ys[i] / denom);
  }
  return p;
}

inline AlexanderData alexander(const SeifertMatrix& v) {
  LaurentPoly delta = LaurentPoly::from_poly(alexander_raw(v)).canonical();
  Rat at_one = delta.is_zero() ? Rat(0) : delta.eval(Rat(1));
  if (!(at_one == 1 || at_one == -1))
    throw std::logic_error("alexander: |delta(1)| != 1 on a validated matrix");
  AlexanderData d;
  d.degree = delta.breadth();
  Rat top = delta.coeff(delta.max_exp());
  if (den(top) != 1) throw std::logic_error("alexander: non-integer coefficients");
  d.top_coeff = num(top);
  d.delta = std::move(delta);
  return d;
}

// 0 iff |delta(-1)| = +-1 mod 8.
inline int arf(const SeifertMatrix& v) {
  Rat dm = alexander(v).delta.eval(Rat(-1));
  Int a = num(dm);
  if (sgn(a) < 0) a = -a;
  Int r = a % 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

inline SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  size_t na = a.dim(), nb = b.dim();
  IMat m(na + nb, std::vector<Int>(na + nb, 0));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j) m[i][j] = a.at(i, j);
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = 0; j < nb; ++j) m[na + i][na + j] = b.at(i, j);
  return SeifertMatrix::validate(std::move(m));
}

// Mirror image: -V^T (negates all signatures).
inline SeifertMatrix mirror(const SeifertMatrix& v) {
  size_t n = v.dim();
  IMat m(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = -v.at(j, i);
  return SeifertMatrix::validate(std::move(m));
}

// Concordance inverse convention: -V.
inline SeifertMatrix inverse_knot(const SeifertMatrix& v) {
  size_t n = v.dim();
  IMat m(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = -v.at(i, j);
  return SeifertMatrix::validate(std::move(m));
}

}  // namespace kc

#endif
