#ifndef KC_FAMILY_HPP
#define KC_FAMILY_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kc/alg_concordance.hpp"
#include "kc/signature.hpp"

namespace kc {

// Twist-knot catalog entry: Seifert matrix [[-1,1],[0,-m]], Alexander
// polynomial m t^2 + (1-2m) t + m, one conjugate pair of unimodular roots at
// cos theta_m = (2m-1)/(2m); sigma = -2 on (theta_m, pi], 0 before.
struct CatalogRef {
  long m = 1;

  SeifertMatrix matrix() const {
    return SeifertMatrix::validate({{Int(-1), Int(1)}, {Int(0), Int(-m)}});
  }
  Rat cos_theta() const { return Rat(2 * m - 1, 2 * m); }
  AlgebraicAngle jump_angle() const { return AlgebraicAngle::from_cos(cos_theta()); }
};

inline CatalogRef twist_matrix(long m) {
  if (m < 1) throw std::invalid_argument("twist_matrix: m must be >= 1");
  return CatalogRef{m};
}

// Formal connected sum of catalog knots with mirror flags and big-integer
// multiplicities.  Invariants are computed summand-wise and combined by
// additivity; the block matrix is never materialized at scale.
struct KnotExpr {
  struct Summand {
    CatalogRef base;
    bool mirrored = false;
    Int multiplicity;
  };
  std::vector<Summand> summands;

  KnotExpr scaled(const Int& n) const {
    KnotExpr e = *this;
    for (auto& s : e.summands) s.multiplicity *= n;
    return e;
  }
};

inline int expr_arf(const KnotExpr& e) {
  long acc = 0;
  for (auto& s : e.summands) {
    Int par = s.multiplicity % 2;
    if (par != 0) acc += arf(s.base.matrix());
  }
  return (int)(acc % 2);
}

inline Int expr_sig_sum(const KnotExpr& e, long p) {
  Int acc(0);
  for (auto& s : e.summands) {
    long per = sig_sum(s.base.matrix(), p);
    if (s.mirrored) per = -per;
    acc += s.multiplicity * per;
  }
  return acc;
}

// Interval containing the normalized signature integral of the expression.
inline RatI expr_sig_integral(const KnotExpr& e, const Rat& tol) {
  RatI acc{Rat(0)};
  if (e.summands.empty()) return acc;
  Int total(0);
  for (auto& s : e.summands) {
    Int t = abs(s.multiplicity);
    total += t;
  }
  if (total == 0) return acc;
  Rat per_tol = tol / Rat(total);
  for (auto& s : e.summands) {
    RatI base = sig_integral(s.base.matrix(), per_tol);
    if (s.mirrored) base = -base;
    Rat mult(s.multiplicity);
    acc = acc + base * mult;
  }
  return acc;
}

// Materialize for small multiplicities (testing only).
inline SeifertMatrix expr_matrix(const KnotExpr& e) {
  SeifertMatrix acc = SeifertMatrix::validate({});
  for (auto& s : e.summands) {
    if (s.multiplicity < 0 || s.multiplicity > 64)
      throw std::invalid_argument("expr_matrix: multiplicity too large to materialize");
    SeifertMatrix b = s.mirrored ? mirror(s.base.matrix()) : s.base.matrix();
    for (Int k(0); k < s.multiplicity; ++k) acc = block_sum(acc, b);
  }
  return acc;
}

// Signature bump: +-2 exactly on (theta_{m_hi}, theta_{m_lo}) and its
// conjugate arc, 0 elsewhere; mirror(T_{m_hi}) # T_{m_lo} for the positive
// sign.
inline KnotExpr bump_expr(long m_lo, long m_hi, bool positive) {
  if (!(m_hi > m_lo && m_lo >= 1))
    throw std::invalid_argument("bump_expr: need m_hi > m_lo >= 1");
  KnotExpr e;
  e.summands.push_back({twist_matrix(m_hi), positive, Int(1)});
  e.summands.push_back({twist_matrix(m_lo), !positive, Int(1)});
  return e;
}

// Cheeger-Gromov bound.
struct CGBound {
  Int C;
  std::string provenance;  // "crossing:<c>" or "direct"

  static CGBound from_crossing(long c) {
    if (c < 1) throw std::invalid_argument("crossing number must be positive");
    return {Int(69713280) * Int(c), "crossing:" + std::to_string(c)};
  }
  static CGBound direct(Int v) {
    if (sgn(v) <= 0) throw std::invalid_argument("bound must be positive");
    return {std::move(v), "direct"};
  }
};

// Reproducibility data for one companion.
struct CompanionWitness {
  std::string kind;  // "mirror-trefoil" | "bump"
  long m_lo = 0, m_hi = 0;  // bump endpoints (kind == "bump")
  long root_count = 0;      // p-th roots of unity inside the bump arc
  long per_copy_sum = 0;    // sig_sum of one copy at p
  Int multiplicity;
  Rat integral_lo, integral_hi;  // per-copy integral enclosure
};

struct Companion {
  long prime = 0;
  KnotExpr expr;
  CompanionWitness witness;
};

struct FamilyDescriptor {
  SeifertMatrix seifert;
  long genus = 0;
  CGBound bound;
  std::vector<Companion> companions;
};

struct Infeasible {
  std::string reason;
};

namespace detail {

inline const Rat& forge_tol() {
  static Rat t = Rat(1, pow_int(Int(10), 12));
  return t;
}

// smallest even N with N * s > target (s > 0)
inline Int smallest_even_above(const Int& target, const Int& s) {
  Int n = target / s + 1;
  if (n % 2 != 0) n += 1;
  while (n * s <= target) n += 2;
  return n;
}

// minimal even multiplicity meeting both the per-prime sum bound and the
// integral bound
inline Int choose_multiplicity(const Int& p_times_ck, const Int& ck, long s,
                               const RatI& integral) {
  Int n1 = smallest_even_above(p_times_ck, Int(s));
  Int n2 = (ck * den(integral.lo)) / num(integral.lo) + 1;
  if (n2 % 2 != 0) n2 += 1;
  return n1 > n2 ? n1 : n2;
}

// number of r in 1..p-1 with 2 pi r / p strictly inside (theta_hi, theta_lo),
// angles given by their exact cosines (theta_hi < theta_lo, cos_hi > cos_lo)
inline long roots_in_arc(long p, const AlgebraicAngle& lo_angle,
                         const AlgebraicAngle& hi_angle) {
  long count = 0;
  for (long r = 1; r < p; ++r) {
    AlgebraicAngle a = angle_of_root_of_unity(p, r);
    if (compare_angle(hi_angle, a) < 0 && compare_angle(a, lo_angle) < 0) ++count;
  }
  return count;
}

}  // namespace detail

// One companion for p_new given the earlier primes.  First companion: copies
// of the mirror trefoil.  Later: the smallest consecutive twist pair (m, m+1)
// whose bump arc sits below every earlier prime's smallest root angle and
// contains a p_new-th root of unity.
inline std::variant<Companion, Infeasible> forge_companion(
    long p_new, const std::vector<long>& earlier, const CGBound& c,
    long m_cap = 100) {
  for (long q : earlier)
    if (q >= p_new) throw std::invalid_argument("p_new must exceed earlier primes");
  if (!detail::is_prime(p_new)) throw std::invalid_argument("p_new must be prime");
  const Rat& tol = detail::forge_tol();
  Companion out;
  out.prime = p_new;
  if (earlier.empty()) {
    KnotExpr unit;
    unit.summands.push_back({twist_matrix(1), true, Int(1)});
    long s = (long)expr_sig_sum(unit, p_new).get_si();
    if (s <= 0) return Infeasible{"mirror trefoil has nonpositive sum at p"};
    RatI integral = expr_sig_integral(unit, tol);
    if (sgn(integral.lo) <= 0)
      return Infeasible{"mirror trefoil integral not certified positive"};
    Int n = detail::choose_multiplicity(Int(p_new) * c.C, c.C, s, integral);
    out.expr = unit.scaled(n);
    out.witness = {"mirror-trefoil", 0, 0, 0, s, n, integral.lo, integral.hi};
    return out;
  }
  long q_max = earlier.back();
  for (long q : earlier) q_max = std::max(q_max, q);
  AlgebraicAngle q_angle = angle_of_root_of_unity(q_max, 1);
  for (long m = 1; m + 1 <= m_cap; ++m) {
    AlgebraicAngle lo_angle = twist_matrix(m).jump_angle();      // larger angle
    AlgebraicAngle hi_angle = twist_matrix(m + 1).jump_angle();  // smaller angle
    // arc must sit strictly below 2 pi / q_max
    if (!(compare_angle(lo_angle, q_angle) < 0)) continue;
    long rc = detail::roots_in_arc(p_new, lo_angle, hi_angle);
    if (rc == 0) continue;
    KnotExpr unit = bump_expr(m, m + 1, true);
    long s = 2 * rc;  // +2 per root of unity inside the arc (conjugates included in rc)
    RatI integral = expr_sig_integral(unit, tol);
    if (sgn(integral.lo) <= 0) continue;
    Int n = detail::choose_multiplicity(Int(p_new) * c.C, c.C, s, integral);
    out.expr = unit.scaled(n);
    out.witness = {"bump", m, m + 1, rc, s, n, integral.lo, integral.hi};
    return out;
  }
  return Infeasible{"no admissible twist bump for p = " + std::to_string(p_new)};
}

// Full construction: hypothesis gates, then greedy prime-by-prime synthesis.
inline FamilyDescriptor forge_family(const SeifertMatrix& v, const CGBound& c,
                                     long count, long prime_floor = 0,
                                     const SlicePolicy& policy = {},
                                     long prime_cap = 10000) {
  if (count < 1) throw std::invalid_argument("forge_family: count must be positive");
  AlexanderData ad = alexander(v);
  if (ad.degree == 0)
    throw std::domain_error("forge_family: trivial Alexander polynomial");
  if (ad.degree < 2)
    throw std::logic_error("forge_family: deg delta must be >= 2");
  SliceValidation sv = validate_algebraically_slice(v, policy);
  if (!sv.accepted)
    throw std::domain_error(
        sv.fox_milnor_ok
            ? "forge_family: algebraic sliceness not established (no "
              "metabolizer; pass a certificate or the override flag)"
            : "forge_family: Fox-Milnor condition fails; not algebraically slice");
  Int ak = abs(ad.top_coeff);
  long start = (long)ak.get_si() + 1;
  if (prime_floor > start) start = prime_floor;
  FamilyDescriptor f{v, (long)v.genus(), c, {}};
  std::vector<long> primes;
  for (long p = start; p <= prime_cap && (long)f.companions.size() < count; ++p) {
    if (!detail::is_prime(p)) continue;
    auto res = forge_companion(p, primes, c);
    if (std::holds_alternative<Infeasible>(res)) continue;
    f.companions.push_back(std::get<Companion>(std::move(res)));
    primes.push_back(p);
  }
  if ((long)f.companions.size() < count)
    throw std::runtime_error("forge_family: prime search exhausted");
  return f;
}

struct ConditionReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string witness;
  };
  std::vector<Item> items;

  bool all_pass() const {
    for (auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// Exact re-verification of the four lemma conditions from the descriptor.
inline ConditionReport verify_lemma_conditions(const FamilyDescriptor& f) {
  ConditionReport rep;
  for (size_t i = 0; i < f.companions.size(); ++i) {
    const Companion& ci = f.companions[i];
    std::string tag = "[" + std::to_string(i + 1) + "]";
    {
      int a = expr_arf(ci.expr);
      rep.items.push_back({"arf" + tag, a == 0, "Arf = " + std::to_string(a)});
    }
    {
      Int s = expr_sig_sum(ci.expr, ci.prime);
      Int target = Int(ci.prime) * f.bound.C;
      std::ostringstream w;
      w << s.get_str() << " > " << target.get_str();
      rep.items.push_back({"sum_exceeds" + tag, s > target, w.str()});
    }
    for (size_t j = i + 1; j < f.companions.size(); ++j) {
      Int s = expr_sig_sum(f.companions[j].expr, ci.prime);
      std::string name = "earlier_zero[" + std::to_string(j + 1) + " at p_" +
                         std::to_string(i + 1) + "]";
      rep.items.push_back({name, sgn(s) == 0, "sum = " + s.get_str()});
    }
    {
      RatI integral = expr_sig_integral(ci.expr, Rat(1, 1000));
      std::ostringstream w;
      w << "integral > " << rat_to_string(integral.lo) << " vs C_K = "
        << f.bound.C.get_str();
      rep.items.push_back(
          {"integral_exceeds" + tag, integral.lo > Rat(f.bound.C), w.str()});
    }
  }
  // prime ordering sanity: strictly increasing
  bool inc = true;
  for (size_t i = 1; i < f.companions.size(); ++i)
    if (f.companions[i].prime <= f.companions[i - 1].prime) inc = false;
  rep.items.push_back({"primes_increasing", inc, ""});
  return rep;
}

}  // namespace kc

#endif
