#include <random>

#include "doctest.h"
#include "kc/algebraic.hpp"
#include "kc/cyclotomic.hpp"
#include "kc/interval.hpp"
#include "kc/laurent.hpp"
#include "kc/numberfield.hpp"
#include "kc/zfactor.hpp"

using namespace kc;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms) p.set(e, Rat(c));
  return p;
}

LaurentPoly random_laurent(std::mt19937& rng, int maxdeg, int maxc) {
  std::uniform_int_distribution<int> dd(0, maxdeg), dc(-maxc, maxc);
  LaurentPoly p;
  int d = dd(rng);
  for (int i = 0; i <= d; ++i) p.set(i, Rat(dc(rng)));
  if (p.is_zero()) p.set(0, Rat(1));
  return p;
}

}  // namespace

TEST_CASE("laurent basics and canonical form") {
  LaurentPoly f = lp({{-2, 2}, {0, -5}, {1, 2}});
  CHECK(f.min_exp() == -2);
  CHECK(f.coeff(0) == Rat(-5));
  LaurentPoly c = f.canonical();
  CHECK(c.min_exp() == 0);
  CHECK(c.coeff(3) > 0);
  CHECK(f.equals_up_to_units(-f * Rat(1, 3)));
  CHECK(lp({{0, 1}, {1, -1}, {2, 1}}).to_string() == "t^2-t+1");
}

TEST_CASE("gcd_poly spec examples") {
  LaurentPoly tref = lp({{0, 1}, {1, -1}, {2, 1}});    // t^2 - t + 1
  LaurentPoly six = lp({{0, 2}, {1, -5}, {2, 2}});     // 2t^2 - 5t + 2
  CHECK(gcd_poly(tref, six).is_one());
  CHECK(gcd_poly(tref, LaurentPoly()) == tref.canonical());
  LaurentPoly cube = tref * tref * tref;
  CHECK(gcd_poly(tref, cube) == tref.canonical());
  CHECK(coprime(tref, six));
  CHECK(!coprime(tref, cube));
}

TEST_CASE("factor_rational spec examples") {
  auto f1 = factor_rational(lp({{0, 2}, {1, -5}, {2, 2}}));
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.factors[0].second == 1);
  CHECK(f1.factors[1].second == 1);
  // {2t-1, t-2} in some canonical order
  bool has_2tm1 = false, has_tm2 = false;
  for (auto& [p, m] : f1.factors) {
    if (p == lp({{0, -1}, {1, 2}})) has_2tm1 = true;
    if (p == lp({{0, -2}, {1, 1}})) has_tm2 = true;
  }
  CHECK(has_2tm1);
  CHECK(has_tm2);

  auto f2 = factor_rational(lp({{0, 1}, {1, -1}, {2, 1}}));
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].second == 1);
  CHECK(f2.factors[0].first == lp({{0, 1}, {1, -1}, {2, 1}}));

  LaurentPoly t2 = lp({{0, 1}, {1, -1}, {2, 1}});
  auto f3 = factor_rational(t2 * t2);
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].second == 2);

  CHECK_THROWS(factor_rational(LaurentPoly()));
}

TEST_CASE("factor_rational round-trip on random polynomials") {
  std::mt19937 rng(20260823);
  for (int iter = 0; iter < 1000; ++iter) {
    LaurentPoly f = random_laurent(rng, 8, 6);
    if (f.breadth() < 1) continue;
    auto fac = factor_rational(f);
    LaurentPoly prod{Rat(1)};
    for (auto& [g, m] : fac.factors) prod = prod * laurent_pow(g, m);
    CHECK(prod.canonical() == f.canonical());
    for (auto& [g, m] : fac.factors) CHECK(is_irreducible(g));
  }
}

TEST_CASE("unit_circle_roots spec examples") {
  auto r1 = unit_circle_roots(lp({{0, 1}, {1, -1}, {2, 1}}));
  REQUIRE(r1.angles.size() == 1);
  CHECK(r1.angles[0].two_cos().is_rational());
  CHECK(r1.angles[0].two_cos().rational_value() == Rat(1));  // theta = pi/3
  CHECK(!r1.root_at_one);
  CHECK(!r1.root_at_minus_one);

  auto r2 = unit_circle_roots(lp({{0, 2}, {1, -5}, {2, 2}}));
  CHECK(r2.angles.empty());

  auto r3 = unit_circle_roots(lp({{0, 1}}));
  CHECK(r3.angles.empty());

  CHECK_THROWS(unit_circle_roots(LaurentPoly()));
}

TEST_CASE("unit_circle_roots of f * conj(g) contains union") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    LaurentPoly f = random_laurent(rng, 4, 3);
    LaurentPoly g = random_laurent(rng, 4, 3);
    if (f.breadth() < 1 || g.breadth() < 1) continue;
    auto rf = unit_circle_roots(f);
    auto rg = unit_circle_roots(g.conj());
    auto rp = unit_circle_roots(f * g.conj());
    // every angle of f and of conj(g) appears among the product's angles
    for (auto* part : {&rf, &rg}) {
      for (auto& a : part->angles) {
        bool found = false;
        for (auto& b : rp.angles)
          if (compare_angle(a, b) == 0) found = true;
        CHECK(found);
      }
    }
    // and the product has no angles beyond the union
    for (auto& b : rp.angles) {
      bool found = false;
      for (auto& a : rf.angles)
        if (compare_angle(a, b) == 0) found = true;
      for (auto& a : rg.angles)
        if (compare_angle(a, b) == 0) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("eval_root_of_unity spec examples") {
  CHECK(eval_root_of_unity(lp({{0, -1}, {1, 1}}), 5, 0).is_zero());
  CHECK(eval_root_of_unity(lp({{0, 1}, {1, -1}, {2, 1}}), 6, 1).is_zero());
  CHECK(!eval_root_of_unity(lp({{0, 2}, {1, -5}, {2, 2}}), 3, 1).is_zero());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == Poly(std::vector<Rat>{Rat(-1), Rat(1)}));
  CHECK(cyclotomic(6) == Poly(std::vector<Rat>{Rat(1), Rat(-1), Rat(1)}));
  CHECK(cyclotomic(12).degree() == 4);
  // Phi_105 is the first with a coefficient of magnitude 2
  CHECK(cyclotomic(105).degree() == 48);
}

TEST_CASE("certified_sign spec examples") {
  AlgebraicAngle pi3 = AlgebraicAngle::from_cos(Rat(1, 2));
  CHECK(certified_sign(Expr::cos(pi3) - Expr::constant(Rat(1, 2))) == 0);

  AlgebraicAngle ac34 = AlgebraicAngle::from_cos(Rat(3, 4));
  CHECK(certified_sign(Expr::cos(ac34) - Expr::constant(Rat(1, 2))) == 1);

  AlgebraicAngle a7 = angle_of_root_of_unity(7, 1);
  CHECK(certified_sign(Expr::constant(Rat(2)) * Expr::cos(a7) - Expr::constant(Rat(1))) == 1);
}

TEST_CASE("certified_sign agrees with floating evaluation") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dn(1, 20), dd(3, 12), dr(1, 40);
  int checked = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    long d = dd(rng);
    long r = dr(rng) % d;
    if (r == 0) r = 1;
    if (d == 2 * r) r = 1;
    if (d < 3) d = 3;
    AlgebraicAngle a = angle_of_root_of_unity(d, r);
    // the exact angle lives in (0, pi); fold the float reference likewise
    double th = std::acos(std::cos(2 * M_PI * r / d));
    Rat c1(dn(rng), dn(rng)), c2(dn(rng) - 10, dn(rng));
    // c1*cos + c2*sin + c3, a generic linear expression in cos/sin
    Rat c3(dn(rng) - 10, dn(rng));
    Expr e = Expr::constant(c1) * Expr::cos(a) + Expr::constant(c2) * Expr::sin(a) +
             Expr::constant(c3);
    double fv = to_double(c1) * std::cos(th) + to_double(c2) * std::sin(th) + to_double(c3);
    if (std::abs(fv) <= 1e-6) continue;
    ++checked;
    CHECK(certified_sign(e) == (fv > 0 ? 1 : -1));
  }
  CHECK(checked > 900);
}

TEST_CASE("angle of root of unity matches numerics") {
  for (long d : {3, 5, 7, 11, 12}) {
    for (long r = 1; 2 * r < d; ++r) {
      AlgebraicAngle a = angle_of_root_of_unity(d, r);
      double expect = 2 * std::cos(2 * M_PI * r / d);
      a.two_cos().refine_below(Rat(1, 1 << 20));
      double got = to_double((a.two_cos().lo() + a.two_cos().hi()) / 2);
      CHECK(std::abs(expect - got) < 1e-5);
    }
  }
}

TEST_CASE("interval transcendentals") {
  RatI pi = pi_enclosure(64);
  CHECK(pi.width() < Rat(1, Int(1) << 60));
  CHECK(pi.lo < Rat(Int("314159265359"), Int("100000000000")));
  CHECK(pi.hi > Rat(Int("314159265358"), Int("100000000000")));

  RatI ac = acos_enclosure(RatI{Rat(1, 2)}, 64);
  // arccos(1/2) = pi/3
  RatI diff = ac - RatI{pi.lo / 3, pi.hi / 3};
  CHECK(diff.contains_zero());
  CHECK(diff.width() < Rat(1, Int(1) << 55));
}
