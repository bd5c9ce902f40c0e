#ifndef KC_IMATRIX_HPP
#define KC_IMATRIX_HPP

#include <cstdlib>
#include <random>
#include <stdexcept>
#include <vector>

#include "kc/rational.hpp"

namespace kc {

// Dense integer matrix, row-major.
using IMat = std::vector<std::vector<Int>>;

inline size_t rows(const IMat& m) { return m.size(); }
inline size_t cols(const IMat& m) { return m.empty() ? 0 : m[0].size(); }

inline bool is_square(const IMat& m) {
  for (auto& r : m)
    if (r.size() != m.size()) return false;
  return true;
}

inline IMat identity_mat(size_t n) {
  IMat m(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IMat transpose(const IMat& m) {
  IMat t(cols(m), std::vector<Int>(rows(m)));
  for (size_t i = 0; i < rows(m); ++i)
    for (size_t j = 0; j < cols(m); ++j) t[j][i] = m[i][j];
  return t;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
  if (cols(a) != rows(b)) throw std::invalid_argument("mat_mul: shape mismatch");
  IMat c(rows(a), std::vector<Int>(cols(b), 0));
  for (size_t i = 0; i < rows(a); ++i)
    for (size_t k = 0; k < cols(a); ++k)
      for (size_t j = 0; j < cols(b); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Int bilinear(const std::vector<Int>& x, const IMat& m, const std::vector<Int>& y) {
  if (x.size() != rows(m) || y.size() != cols(m))
    throw std::invalid_argument("bilinear: shape mismatch");
  Int acc(0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) acc += x[i] * m[i][j] * y[j];
  return acc;
}

// Exact determinant via rational Gaussian elimination.
inline Rat det_rat(std::vector<std::vector<Rat>> a) {
  size_t n = a.size();
  Rat d(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      d = -d;
    }
    d *= a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return d;
}

inline Int det_int(const IMat& m) {
  if (!is_square(m)) throw std::invalid_argument("det of non-square matrix");
  std::vector<std::vector<Rat>> a(rows(m), std::vector<Rat>(rows(m)));
  for (size_t i = 0; i < rows(m); ++i)
    for (size_t j = 0; j < rows(m); ++j) a[i][j] = Rat(m[i][j]);
  Rat d = det_rat(std::move(a));
  if (den(d) != 1) throw std::logic_error("det_int: non-integer determinant");
  return num(d);
}

// Invariant factors d_1 | d_2 | ... of an integer matrix (Smith normal form
// diagonal, nonnegative, zeros trailing).
inline std::vector<Int> smith_invariants(IMat a) {
  size_t nr = rows(a), nc = cols(a);
  size_t t = 0;
  auto abs_int = [](const Int& x) { return Int(abs(x)); };
  while (t < nr && t < nc) {
    // locate a nonzero entry of minimal absolute value in the trailing block
    size_t pi = nr, pj = nc;
    for (size_t i = t; i < nr; ++i)
      for (size_t j = t; j < nc; ++j)
        if (sgn(a[i][j]) != 0 &&
            (pi == nr || abs_int(a[i][j]) < abs_int(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == nr) break;  // all zero
    std::swap(a[t], a[pi]);
    for (size_t i = t; i < nr; ++i) std::swap(a[i][t], a[i][pj]);
    // reduce row and column by the pivot; repeat pivot search while remainders
    // survive
    for (size_t i = t + 1; i < nr; ++i) {
      Int q = a[i][t] / a[t][t];
      for (size_t j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
    }
    for (size_t j = t + 1; j < nc; ++j) {
      Int q = a[t][j] / a[t][t];
      for (size_t i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
    }
    bool zeroed = true;
    for (size_t i = t + 1; i < nr; ++i)
      if (sgn(a[i][t]) != 0) zeroed = false;
    for (size_t j = t + 1; j < nc; ++j)
      if (sgn(a[t][j]) != 0) zeroed = false;
    if (!zeroed) continue;  // smaller pivot appeared; redo this step
    // pivot must divide the rest of the block for true invariant factors
    bool divides_all = true;
    for (size_t i = t + 1; i < nr && divides_all; ++i)
      for (size_t j = t + 1; j < nc && divides_all; ++j)
        if (sgn(a[i][j] % a[t][t]) != 0) divides_all = false;
    if (!divides_all) {
      for (size_t i = t + 1; i < nr; ++i)
        for (size_t j = t + 1; j < nc; ++j)
          if (sgn(a[i][j] % a[t][t]) != 0) {
            for (size_t jj = t; jj < nc; ++jj) a[t][jj] += a[i][jj];
            goto retry;
          }
    retry:
      continue;
    }
    ++t;
  }
  std::vector<Int> d;
  for (size_t i = 0; i < std::min(nr, nc); ++i) {
    Int v = i < t ? a[i][i] : Int(0);
    d.push_back(abs_int(v));
  }
  return d;
}

// Random unimodular matrix: a product of elementary shears and signed swaps.
inline IMat random_unimodular(size_t n, std::mt19937& rng, int ops = -1) {
  IMat p = identity_mat(n);
  if (n < 2) return p;
  if (ops < 0) ops = (int)(2 * n);
  std::uniform_int_distribution<size_t> di(0, n - 1);
  std::uniform_int_distribution<int> dc(-1, 1), dk(0, 3);
  for (int s = 0; s < ops; ++s) {
    size_t i = di(rng), j = di(rng);
    if (i == j) continue;
    if (dk(rng) == 0) {
      // signed swap keeps det = +1
      for (size_t k = 0; k < n; ++k) {
        std::swap(p[i][k], p[j][k]);
        p[i][k] = -p[i][k];
      }
    } else {
      int c = dc(rng);
      if (c == 0) c = 1;
      for (size_t k = 0; k < n; ++k) p[i][k] += c * p[j][k];
    }
  }
  return p;
}

}  // namespace kc

#endif
