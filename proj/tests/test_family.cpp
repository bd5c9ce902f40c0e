#include <random>

#include "doctest.h"
#include "kc/blanchfield.hpp"
#include "kc/family.hpp"
#include "test_support.hpp"

using namespace kc;
using namespace kctest;

TEST_CASE("twist catalog examples") {
  CatalogRef t1 = twist_matrix(1);
  CHECK(t1.matrix() == trefoil());
  CHECK(t1.cos_theta() == Rat(1, 2));

  CatalogRef t2 = twist_matrix(2);
  LaurentPoly d2 = alexander(t2.matrix()).delta;
  LaurentPoly expect;
  expect.set(0, Rat(2));
  expect.set(1, Rat(-3));
  expect.set(2, Rat(2));
  CHECK(d2 == expect);
  CHECK(lt_signature(t2.matrix(), UnitPoint::minus_one()).signature == -2);

  CHECK_THROWS(twist_matrix(0));
}

TEST_CASE("twist jump structure for m <= 100") {
  for (long m = 1; m <= 100; ++m) {
    CatalogRef t = twist_matrix(m);
    auto roots = unit_circle_roots(alexander(t.matrix()).delta);
    REQUIRE(roots.angles.size() == 1);
    CHECK(roots.angles[0].two_cos().rational_value() == Rat(2 * m - 1, m));
    CHECK(!roots.root_at_one);
    CHECK(!roots.root_at_minus_one);
  }
}

TEST_CASE("bump profiles for all pairs m_lo < m_hi <= 10") {
  for (long lo = 1; lo <= 9; ++lo)
    for (long hi = lo + 1; hi <= 10; ++hi) {
      KnotExpr b = bump_expr(lo, hi, true);
      SignatureProfile prof = sig_profile(expr_matrix(b));
      REQUIRE(prof.jumps.size() == 2);
      REQUIRE(prof.arc_values.size() == 3);
      CHECK(prof.arc_values[0] == 0);
      CHECK(prof.arc_values[1] == 2);
      CHECK(prof.arc_values[2] == 0);
      // jump angles are theta_{hi} < theta_{lo}
      CHECK(prof.jumps[0].two_cos().rational_value() == Rat(2 * hi - 1, hi));
      CHECK(prof.jumps[1].two_cos().rational_value() == Rat(2 * lo - 1, lo));
    }
}

TEST_CASE("bump sig_sum examples") {
  KnotExpr b = bump_expr(1, 2, true);
  CHECK(expr_sig_sum(b, 7) == 4);
  CHECK(expr_sig_sum(b, 3) == 0);
}

TEST_CASE("forge_companion spec examples") {
  CGBound ck = CGBound::from_crossing(6);
  CHECK(ck.C == Int("418279680"));

  auto first = forge_companion(3, {}, ck);
  REQUIRE(std::holds_alternative<Companion>(first));
  const Companion& c1 = std::get<Companion>(first);
  CHECK(c1.witness.kind == "mirror-trefoil");
  CHECK(c1.witness.per_copy_sum == 4);
  CHECK(c1.witness.multiplicity == Int("313709762"));
  CHECK(expr_sig_sum(c1.expr, 3) == Int(4) * Int("313709762"));

  auto five = forge_companion(5, {3}, ck);
  CHECK(std::holds_alternative<Infeasible>(five));

  auto seven = forge_companion(7, {3}, ck);
  REQUIRE(std::holds_alternative<Companion>(seven));
  const Companion& c7 = std::get<Companion>(seven);
  CHECK(c7.witness.kind == "bump");
  CHECK(c7.witness.m_lo == 1);
  CHECK(c7.witness.m_hi == 2);
  CHECK(c7.witness.per_copy_sum == 4);

  auto eleven = forge_companion(11, {3, 7}, ck);
  REQUIRE(std::holds_alternative<Companion>(eleven));
  const Companion& c11 = std::get<Companion>(eleven);
  CHECK(c11.witness.m_lo == 3);
  CHECK(c11.witness.m_hi == 4);
}

TEST_CASE("forge_family end to end and verification round trip") {
  CGBound ck = CGBound::from_crossing(6);
  FamilyDescriptor f = forge_family(v_six(), ck, 3);
  REQUIRE(f.companions.size() == 3);
  CHECK(f.companions[0].prime == 3);
  CHECK(f.companions[1].prime == 7);
  CHECK(f.companions[2].prime == 11);
  ConditionReport rep = verify_lemma_conditions(f);
  CHECK(rep.all_pass());

  // sabotage: odd multiplicity of an Arf-1 summand breaks condition (1)
  FamilyDescriptor bad = f;
  bad.companions[1].expr.summands[1].multiplicity += 1;
  ConditionReport brep = verify_lemma_conditions(bad);
  CHECK(!brep.all_pass());

  // sabotage: halved multiplicity breaks condition (2)
  FamilyDescriptor low = f;
  for (auto& s : low.companions[0].expr.summands) s.multiplicity /= 2;
  ConditionReport lrep = verify_lemma_conditions(low);
  CHECK(!lrep.all_pass());
}

TEST_CASE("forge_family hypothesis gates") {
  CGBound ck = CGBound::from_crossing(6);
  CHECK_THROWS(forge_family(trefoil(), ck, 1));
  CHECK_THROWS(forge_family(unknot(), ck, 1));
  CHECK_THROWS(forge_family(v_six(), ck, 0));
}

TEST_CASE("symbolic invariants agree with materialized matrices") {
  std::mt19937 rng(53);
  for (long mult = 1; mult <= 3; ++mult) {
    KnotExpr e;
    e.summands.push_back({twist_matrix(2), true, Int(mult)});
    e.summands.push_back({twist_matrix(1), false, Int(mult)});
    SeifertMatrix m = expr_matrix(e);
    for (long p : {3L, 5L, 7L})
      CHECK(expr_sig_sum(e, p) == Int(sig_sum(m, p)));
    CHECK(expr_arf(e) == arf(m));
    Rat tol(1, 100000);
    RatI ie = expr_sig_integral(e, tol);
    RatI im = sig_integral(m, tol);
    CHECK(ie.lo <= im.hi);
    CHECK(im.lo <= ie.hi);
  }
}
