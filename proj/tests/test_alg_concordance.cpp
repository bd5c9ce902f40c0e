#include <random>

#include "doctest.h"
#include "kc/alg_concordance.hpp"
#include "kc/signature.hpp"
#include "test_support.hpp"

using namespace kc;
using namespace kctest;

namespace {
LaurentPoly lp(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms) p.set(e, Rat(c));
  return p;
}
}  // namespace

TEST_CASE("fox_milnor spec examples") {
  CHECK(fox_milnor(lp({{0, 2}, {1, -5}, {2, 2}})));
  CHECK(!fox_milnor(lp({{0, 1}, {1, -1}, {2, 1}})));
  CHECK(fox_milnor(lp({{0, 1}})));
  LaurentPoly tref = lp({{0, 1}, {1, -1}, {2, 1}});
  CHECK(fox_milnor(tref * tref));
  CHECK_THROWS(fox_milnor(LaurentPoly()));
}

TEST_CASE("verify_metabolizer spec examples") {
  IMat e1 = {{Int(1)}, {Int(0)}};
  CHECK(verify_metabolizer(v_six(), e1));
  CHECK(!verify_metabolizer(trefoil(), e1));
  IMat twice = {{Int(2)}, {Int(0)}};
  CHECK(!verify_metabolizer(v_six(), twice));
  CHECK(verify_metabolizer(unknot(), IMat{}));
  CHECK_THROWS(verify_metabolizer(v_six(), IMat{{Int(1)}}));
}

TEST_CASE("search_metabolizer spec examples") {
  auto m = search_metabolizer(v_six(), 1);
  REQUIRE(m.has_value());
  CHECK(m->basis == IMat{{Int(1)}, {Int(0)}});
  CHECK(verify_metabolizer(v_six(), m->basis));

  CHECK(!search_metabolizer(trefoil(), 2).has_value());
  CHECK(search_metabolizer(unknot(), 1).has_value());
}

TEST_CASE("search result always verifies") {
  std::mt19937 rng(31);
  for (int it = 0; it < 50; ++it) {
    SeifertMatrix v = random_seifert(rng, 2, 2);
    auto m = search_metabolizer(v, 1);
    if (m) CHECK(verify_metabolizer(v, m->basis));
  }
}

TEST_CASE("coprime examples and power stability") {
  LaurentPoly six = lp({{0, 2}, {1, -5}, {2, 2}});
  LaurentPoly tref = lp({{0, 1}, {1, -1}, {2, 1}});
  CHECK(coprime(six, tref));
  CHECK(!coprime(tref, tref));
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(!coprime(tref, laurent_pow(tref, n)));
    CHECK(coprime(six, laurent_pow(tref, n)));
  }
}

TEST_CASE("planted metabolizers: fox_milnor holds and sigma vanishes off jumps") {
  std::mt19937 rng(37);
  for (int it = 0; it < 100; ++it) {
    SeifertMatrix v = random_seifert(rng, 3, 3, true, true);
    AlexanderData d = alexander(v);
    CHECK(fox_milnor(d.delta));
    CHECK(sig_profile(v).identically_zero());
  }
}

TEST_CASE("slice policy gates") {
  SlicePolicy p;
  auto ok = validate_algebraically_slice(v_six(), p);
  CHECK(ok.accepted);
  CHECK(ok.how == "search");

  auto bad = validate_algebraically_slice(trefoil(), p);
  CHECK(!bad.accepted);
  CHECK(!bad.fox_milnor_ok);

  SlicePolicy with_cert;
  with_cert.certificate = IMat{{Int(1)}, {Int(0)}};
  auto c = validate_algebraically_slice(v_six(), with_cert);
  CHECK(c.accepted);
  CHECK(c.how == "certificate");
}
