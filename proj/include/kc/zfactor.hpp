#ifndef KC_ZFACTOR_HPP
#define KC_ZFACTOR_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kc/laurent.hpp"
#include "kc/poly.hpp"
#include "kc/rational.hpp"

namespace kc {
namespace detail {

// ---- polynomials over GF(p), p a small odd prime, dense vector<long> ----

inline void gfp_trim(std::vector<long>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<long> gfp_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  gfp_trim(r);
  return r;
}

inline long gfp_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

inline std::pair<std::vector<long>, std::vector<long>> gfp_divmod(std::vector<long> a,
                                                                  const std::vector<long>& b,
                                                                  long p) {
  std::vector<long> q;
  if (b.empty()) throw std::domain_error("gfp division by zero");
  long li = gfp_inv(b.back(), p);
  if (a.size() >= b.size()) {
    q.assign(a.size() - b.size() + 1, 0);
    for (int k = (int)a.size() - (int)b.size(); k >= 0; --k) {
      long f = a[k + b.size() - 1] * li % p;
      q[k] = f;
      if (f)
        for (size_t i = 0; i < b.size(); ++i) {
          a[k + i] = (a[k + i] - f * b[i]) % p;
          if (a[k + i] < 0) a[k + i] += p;
        }
    }
  }
  gfp_trim(a);
  return {q, a};
}

inline std::vector<long> gfp_mod(const std::vector<long>& a, const std::vector<long>& b, long p) {
  return gfp_divmod(a, b, p).second;
}

inline std::vector<long> gfp_gcd(std::vector<long> a, std::vector<long> b, long p) {
  while (!b.empty()) {
    auto r = gfp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long li = gfp_inv(a.back(), p);
    for (auto& c : a) c = c * li % p;
  }
  return a;
}

// extended gcd: s*a + t*b = g (monic)
inline void gfp_extgcd(std::vector<long> a, std::vector<long> b, long p, std::vector<long>& g,
                       std::vector<long>& s, std::vector<long>& t) {
  std::vector<long> s0{1}, s1, t0, t1{1};
  while (!b.empty()) {
    auto [q, r] = gfp_divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
    auto step = [&](std::vector<long>& x0, std::vector<long>& x1) {
      auto qx = gfp_mul(q, x1, p);
      std::vector<long> nx(std::max(x0.size(), qx.size()), 0);
      for (size_t i = 0; i < x0.size(); ++i) nx[i] = x0[i];
      for (size_t i = 0; i < qx.size(); ++i) {
        nx[i] = (nx[i] - qx[i]) % p;
        if (nx[i] < 0) nx[i] += p;
      }
      gfp_trim(nx);
      x0 = std::move(x1);
      x1 = std::move(nx);
    };
    step(s0, s1);
    step(t0, t1);
  }
  long li = a.empty() ? 1 : gfp_inv(a.back(), p);
  auto scale = [&](std::vector<long>& v) {
    for (auto& c : v) c = c * li % p;
  };
  scale(a);
  scale(s0);
  scale(t0);
  g = std::move(a);
  s = std::move(s0);
  t = std::move(t0);
}

inline std::vector<long> gfp_powmod_x(long e, const std::vector<long>& f, long p) {
  // x^e mod f
  std::vector<long> r{1}, b{0, 1};
  b = gfp_mod(b, f, p);
  while (e) {
    if (e & 1) r = gfp_mod(gfp_mul(r, b, p), f, p);
    b = gfp_mod(gfp_mul(b, b, p), f, p);
    e >>= 1;
  }
  return r;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
inline std::vector<std::vector<long>> berlekamp(const std::vector<long>& f, long p) {
  int n = (int)f.size() - 1;
  if (n <= 1) return {f};
  // Q[i] = x^{i p} mod f as coefficient rows
  std::vector<std::vector<long>> Q(n, std::vector<long>(n, 0));
  std::vector<long> xp = gfp_powmod_x(p, f, p);
  std::vector<long> cur{1};
  for (int i = 0; i < n; ++i) {
    for (size_t j = 0; j < cur.size(); ++j) Q[i][j] = cur[j];
    cur = gfp_mod(gfp_mul(cur, xp, p), f, p);
  }
  // nullspace of (Q^T - I)
  std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      M[i][j] = Q[j][i] % p;
      if (i == j) M[i][j] = (M[i][j] - 1 + p) % p;
    }
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int row = rank; row < n; ++row)
      if (M[row][col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[rank]);
    long inv = gfp_inv(M[rank][col], p);
    for (int j = 0; j < n; ++j) M[rank][j] = M[rank][j] * inv % p;
    for (int row = 0; row < n; ++row)
      if (row != rank && M[row][col] != 0) {
        long f2 = M[row][col];
        for (int j = 0; j < n; ++j) {
          M[row][j] = (M[row][j] - f2 * M[rank][j]) % p;
          if (M[row][j] < 0) M[row][j] += p;
        }
      }
    pivot_col[rank++] = col;
  }
  std::vector<std::vector<long>> basis;
  std::vector<char> is_pivot(n, 0);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = 1;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<long> v(n, 0);
    v[col] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = (p - M[i][col]) % p;
    gfp_trim(v);
    basis.push_back(std::move(v));
  }
  size_t r = basis.size();
  std::vector<std::vector<long>> factors{f};
  for (const auto& v : basis) {
    if (factors.size() >= r) break;
    if (v.size() <= 1) continue;  // constant vector splits nothing
    std::vector<std::vector<long>> next;
    for (auto& u : factors) {
      if ((int)u.size() - 1 <= 1) {
        next.push_back(u);
        continue;
      }
      std::vector<std::vector<long>> pieces;
      std::vector<long> rem = u;
      for (long s = 0; s < p && (int)rem.size() - 1 > 0; ++s) {
        std::vector<long> vs = v;
        if (vs.empty()) vs.assign(1, 0);
        vs[0] = (vs[0] - s % p + p) % p;
        gfp_trim(vs);
        auto d = gfp_gcd(rem, vs, p);
        if ((int)d.size() - 1 > 0 && d.size() < rem.size()) {
          pieces.push_back(d);
          rem = gfp_divmod(rem, d, p).first;
        }
      }
      if ((int)rem.size() - 1 > 0) pieces.push_back(rem);
      if (pieces.empty()) pieces.push_back(u);
      for (auto& w : pieces) next.push_back(std::move(w));
    }
    factors = std::move(next);
  }
  return factors;
}

// ---- Hensel lifting ----

inline std::vector<Int> zmul(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

inline std::vector<long> zreduce(const std::vector<Int>& a, long p) {
  std::vector<long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Int m = a[i] % p;
    long v = (long)m.get_si();
    if (v < 0) v += p;
    r[i] = v;
  }
  gfp_trim(r);
  return r;
}

// Lift f = g*h (mod p) to mod p^k; f, g, h monic.  Linear steps.
inline void hensel_pair(const std::vector<Int>& f, std::vector<Int>& g, std::vector<Int>& h,
                        long p, int k) {
  std::vector<long> sg, tg, gg;
  gfp_extgcd(zreduce(g, p), zreduce(h, p), p, gg, sg, tg);
  // sg*g + tg*h = 1 mod p
  Int pj(p);
  for (int j = 1; j < k; ++j) {
    // e = (f - g h) / p^j
    std::vector<Int> gh = zmul(g, h);
    std::vector<Int> e(std::max(f.size(), gh.size()), Int(0));
    for (size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& c : e) c /= pj;
    std::vector<long> ep = zreduce(e, p);
    // u = (tg*e) mod g ; v = sg*e + ((tg*e) div g) * h
    auto te = gfp_mul(tg, ep, p);
    auto [q, u] = gfp_divmod(te, zreduce(g, p), p);
    auto v = gfp_mul(sg, ep, p);
    auto qh = gfp_mul(q, zreduce(h, p), p);
    std::vector<long> vv(std::max(v.size(), qh.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) vv[i] = v[i];
    for (size_t i = 0; i < qh.size(); ++i) vv[i] = (vv[i] + qh[i]) % p;
    gfp_trim(vv);
    if (g.size() < u.size() + 0) g.resize(u.size(), Int(0));
    for (size_t i = 0; i < u.size(); ++i) g[i] += pj * u[i];
    if (h.size() < vv.size()) h.resize(vv.size(), Int(0));
    for (size_t i = 0; i < vv.size(); ++i) h[i] += pj * vv[i];
    pj *= p;
  }
}

inline std::vector<std::vector<Int>> hensel_multi(const std::vector<Int>& f,
                                                  const std::vector<std::vector<long>>& gs,
                                                  long p, int k) {
  if (gs.size() == 1) {
    // the lifted factor is f itself reduced mod p^k
    Int pk = pow_int(Int(p), k);
    std::vector<Int> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      r[i] = f[i] % pk;
      if (r[i] < 0) r[i] += pk;
    }
    return {r};
  }
  size_t half = gs.size() / 2;
  std::vector<long> g0{1}, h0{1};
  for (size_t i = 0; i < half; ++i) g0 = gfp_mul(g0, gs[i], p);
  for (size_t i = half; i < gs.size(); ++i) h0 = gfp_mul(h0, gs[i], p);
  std::vector<Int> g(g0.begin(), g0.end()), h(h0.begin(), h0.end());
  hensel_pair(f, g, h, p, k);
  std::vector<std::vector<long>> left(gs.begin(), gs.begin() + half),
      right(gs.begin() + half, gs.end());
  auto lf = hensel_multi(g, left, p, k);
  auto rf = hensel_multi(h, right, p, k);
  lf.insert(lf.end(), rf.begin(), rf.end());
  return lf;
}

inline bool z_divides(const std::vector<Int>& d, const std::vector<Int>& f) {
  // exact division test of integer polynomials, d monic-or-not with lc dividing
  std::vector<Int> r = f;
  if (d.empty()) return false;
  while (r.size() >= d.size()) {
    if (r.back() % d.back() != 0) return false;
    Int q = r.back() / d.back();
    size_t k = r.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) r[k + i] -= q * d[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) return true;
  }
  return r.empty();
}

inline std::vector<Int> primitive_int(std::vector<Int> v) {
  Int g(0);
  for (auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return v;
  if (sgn(v.back()) < 0) g = -g;
  for (auto& c : v) c /= g;
  return v;
}

// Zassenhaus factorization of a monic squarefree integer polynomial.
inline std::vector<std::vector<Int>> factor_monic_squarefree(std::vector<Int> f) {
  int n = (int)f.size() - 1;
  if (n <= 1) return {f};
  // choose a prime keeping f squarefree mod p
  long p = 0;
  static const long primes[] = {3,  5,  7,  11, 13, 17, 19, 23,  29,  31,  37,  41,  43,
                                47, 53, 59, 61, 67, 71, 73, 79,  83,  89,  97,  101, 103,
                                107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};
  std::vector<std::vector<long>> modular;
  for (long cand : primes) {
    auto fp = zreduce(f, cand);
    if ((int)fp.size() - 1 != n) continue;  // lc divisible by p
    // derivative mod p
    std::vector<long> dfp;
    for (size_t i = 1; i < fp.size(); ++i) dfp.push_back((long)(i % cand) * fp[i] % cand);
    gfp_trim(dfp);
    if (gfp_gcd(fp, dfp, cand).size() == 1) {
      p = cand;
      long li = gfp_inv(fp.back(), cand);
      for (auto& c : fp) c = c * li % cand;
      modular = berlekamp(fp, cand);
      break;
    }
  }
  if (p == 0) throw std::runtime_error("factor: no good small prime found");
  if (modular.size() == 1) return {f};
  std::sort(modular.begin(), modular.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  // Mignotte-style coefficient bound for monic factors
  Int norm2(0);
  for (auto& c : f) norm2 += c * c;
  Int B = (pow_int(Int(2), n) * (sqrt(norm2) + 1) + 1) * 2;
  int k = 1;
  Int pk(p);
  while (pk <= B) {
    pk *= p;
    ++k;
  }
  auto lifted = hensel_multi(f, modular, p, k);
  auto sym = [&](std::vector<Int> v) {
    for (auto& c : v) {
      c %= pk;
      if (c < 0) c += pk;
      if (2 * c > pk) c -= pk;
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  std::vector<std::vector<Int>> result;
  std::vector<int> avail(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) avail[i] = (int)i;
  std::vector<Int> rem = f;
  size_t s = 1;
  while (2 * s <= avail.size()) {
    bool found = false;
    std::vector<int> idx(s);
    // iterate over s-subsets of avail
    std::vector<size_t> c(s);
    for (size_t i = 0; i < s; ++i) c[i] = i;
    while (true) {
      std::vector<Int> cand{Int(1)};
      for (size_t i = 0; i < s; ++i) {
        cand = zmul(cand, lifted[avail[c[i]]]);
        cand = [&] {
          for (auto& x : cand) {
            x %= pk;
            if (x < 0) x += pk;
          }
          return cand;
        }();
      }
      cand = sym(cand);
      if (z_divides(cand, rem)) {
        result.push_back(cand);
        // divide out
        std::vector<Int> q;
        {
          std::vector<Int> r2 = rem;
          q.assign(r2.size() - cand.size() + 1, Int(0));
          while (r2.size() >= cand.size()) {
            Int qq = r2.back() / cand.back();
            size_t kk = r2.size() - cand.size();
            q[kk] = qq;
            for (size_t i = 0; i < cand.size(); ++i) r2[kk + i] -= qq * cand[i];
            while (!r2.empty() && r2.back() == 0) r2.pop_back();
            if (r2.empty()) break;
          }
        }
        rem = q;
        std::vector<int> navail;
        for (size_t i = 0, j = 0; i < avail.size(); ++i) {
          if (j < s && c[j] == i)
            ++j;
          else
            navail.push_back(avail[i]);
        }
        avail = std::move(navail);
        found = true;
        break;
      }
      // next combination
      int i = (int)s - 1;
      while (i >= 0 && c[i] == avail.size() - s + i) --i;
      if (i < 0) break;
      ++c[i];
      for (size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if ((int)rem.size() - 1 > 0) result.push_back(rem);
  return result;
}

// General primitive squarefree integer polynomial (possibly non-monic lc):
// factor via the monic transform F(x) = a^{n-1} f(x/a).
inline std::vector<std::vector<Int>> factor_primitive_squarefree(std::vector<Int> f) {
  int n = (int)f.size() - 1;
  if (n <= 0) return {};
  if (n == 1) return {f};
  Int a = f.back();
  if (a == 1) return factor_monic_squarefree(f);
  std::vector<Int> F(f.size());
  // F_i = f_i * a^{n-1-i}
  Int pw(1);
  F[n] = 1;
  for (int i = n - 1; i >= 0; --i) {
    pw *= a;  // a^{n-i}
    F[i] = f[i] * pw / a;
  }
  auto gs = factor_monic_squarefree(F);
  std::vector<std::vector<Int>> out;
  for (auto& G : gs) {
    // g(x) = primitive part of G(a x)
    std::vector<Int> g(G.size());
    Int q(1);
    for (size_t i = 0; i < G.size(); ++i) {
      g[i] = G[i] * q;
      q *= a;
    }
    out.push_back(primitive_int(std::move(g)));
  }
  return out;
}

}  // namespace detail

// Irreducible factorization over the rationals.  Factors are canonical Laurent
// polynomials (primitive integer coefficients, positive leading coefficient,
// minimum exponent 0); the product of factors^multiplicity equals the input up
// to a unit +-t^k and a rational constant.
struct Factorization {
  std::vector<std::pair<LaurentPoly, int>> factors;
};

inline Factorization factor_rational(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("factor_rational: zero input");
  Factorization out;
  Poly p = f.to_poly();
  if (p.degree() == 0) return out;
  // Yun's squarefree decomposition
  Poly g = poly_gcd(p, p.derivative());
  Poly c = p / g, d = (p.derivative() / g) - c.derivative();
  int mult = 0;
  while (c.degree() > 0) {
    ++mult;
    Poly q = poly_gcd(c, d);
    if (q.degree() > 0) {
      auto prim = primitive_part(q);
      for (auto& fac : detail::factor_primitive_squarefree(prim.coeffs))
        out.factors.emplace_back(LaurentPoly::from_poly(from_int_coeffs(fac)).canonical(), mult);
    }
    c = c / q;
    d = d / q - c.derivative();
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.breadth() != b.first.breadth()) return a.first.breadth() < b.first.breadth();
    auto pa = a.first.to_poly(), pb = b.first.to_poly();
    for (int i = (int)pa.degree(); i >= 0; --i)
      if (pa.coeff(i) != pb.coeff(i)) return pa.coeff(i) < pb.coeff(i);
    return a.second < b.second;
  });
  return out;
}

inline bool is_irreducible(const LaurentPoly& f) {
  auto fac = factor_rational(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1 &&
         fac.factors[0].first.breadth() == f.breadth();
}

}  // namespace kc

#endif
