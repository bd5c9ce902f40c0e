#ifndef KC_STURM_HPP
#define KC_STURM_HPP

#include <utility>
#include <vector>

#include "kc/poly.hpp"

namespace kc {

// Sturm chain of a squarefree polynomial; used for exact real-root counting
// and isolation over the rationals.
class SturmChain {
 public:
  explicit SturmChain(const Poly& f) {
    Poly a = f, b = f.derivative();
    chain_.push_back(a);
    while (!b.is_zero()) {
      chain_.push_back(b);
      Poly r = -(a % b);
      a = std::move(b);
      b = std::move(r);
    }
  }

  int sign_changes_at(const Rat& x) const {
    int changes = 0, prev = 0;
    for (const auto& p : chain_) {
      int s = sgn(p.eval(x));
      if (s != 0) {
        if (prev != 0 && s != prev) ++changes;
        prev = s;
      }
    }
    return changes;
  }

  // number of distinct real roots in the open interval (a, b); endpoints must
  // not be roots of the leading polynomial for the count to be exact there.
  int count_roots(const Rat& a, const Rat& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
  }

 private:
  std::vector<Poly> chain_;
};

// Isolating intervals (lo, hi) for the distinct real roots of a squarefree f
// inside (a, b), in increasing order.  Endpoints are never roots.
inline std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& f, Rat a, Rat b) {
  std::vector<std::pair<Rat, Rat>> out;
  if (f.degree() < 1) return out;
  SturmChain chain(f);
  // nudge endpoints off roots of f
  Rat step = (b - a) / 1024;
  while (sgn(f.eval(a)) == 0) a += step, step /= 2;
  step = (b - a) / 1024;
  while (sgn(f.eval(b)) == 0) b -= step, step /= 2;
  struct Seg {
    Rat lo, hi;
    int n;
  };
  std::vector<Seg> work{{a, b, chain.count_roots(a, b)}};
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    Rat delta = (s.hi - s.lo) / 1024;
    while (sgn(f.eval(mid)) == 0) mid += delta, delta /= 2;
    int left = chain.count_roots(s.lo, mid);
    work.push_back({s.lo, mid, left});
    work.push_back({mid, s.hi, s.n - left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

// Shrink an isolating interval of squarefree f by bisection.
inline void refine_root(const Poly& f, Rat& lo, Rat& hi) {
  Rat mid = (lo + hi) / 2;
  int sm = sgn(f.eval(mid));
  if (sm == 0) {
    // exact rational root; collapse around it
    Rat w = (hi - lo) / 4;
    lo = mid - w;
    hi = mid + w;
    return;
  }
  if (sm == sgn(f.eval(lo)))
    lo = mid;
  else
    hi = mid;
}

}  // namespace kc

#endif
