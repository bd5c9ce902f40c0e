#include <random>

#include "doctest.h"
#include "kc/seifert.hpp"
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

TEST_CASE("validate accepts and rejects") {
  CHECK_NOTHROW(SeifertMatrix::validate({{Int(-1), Int(1)}, {Int(0), Int(-1)}}));
  CHECK_THROWS(SeifertMatrix::validate({{Int(0), Int(1)}, {Int(1), Int(0)}}));
  CHECK(unknot().genus() == 0);
  CHECK_THROWS(SeifertMatrix::validate({{Int(1)}}));
  CHECK_THROWS(SeifertMatrix::validate({{Int(1), Int(0)}}));
}

TEST_CASE("alexander examples") {
  CHECK(alexander(trefoil()).delta == lp({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(alexander(v_six()).delta == lp({{0, 2}, {1, -5}, {2, 2}}));
  CHECK(alexander(unknot()).delta == lp({{0, 1}}));
  CHECK(alexander(v_six()).top_coeff == 2);
  CHECK(alexander(v_six()).degree == 2);
}

TEST_CASE("arf examples") {
  CHECK(arf(trefoil()) == 1);
  CHECK(arf(v_six()) == 0);
  CHECK(arf(unknot()) == 0);
}

TEST_CASE("block sum, mirror, inverse") {
  SeifertMatrix two = block_sum(trefoil(), trefoil());
  LaurentPoly tref = lp({{0, 1}, {1, -1}, {2, 1}});
  CHECK(alexander(two).delta == (tref * tref).canonical());
  CHECK(arf(two) == 0);
  CHECK(block_sum(v_six(), unknot()) == v_six());
  CHECK(mirror(trefoil()).entries() == IMat{{Int(1), Int(0)}, {Int(-1), Int(1)}});
  CHECK(alexander(mirror(trefoil())).delta == alexander(trefoil()).delta);
  CHECK(inverse_knot(unknot()) == unknot());
  CHECK(arf(mirror(trefoil())) == arf(trefoil()));
}

TEST_CASE("random valid matrices: reciprocal delta, unit at 1") {
  std::mt19937 rng(7);
  for (int it = 0; it < 1000; ++it) {
    SeifertMatrix v = random_seifert(rng, 3, 4);
    AlexanderData d = alexander(v);
    Rat at1 = d.delta.eval(Rat(1));
    CHECK((at1 == 1 || at1 == -1));
    CHECK(d.delta.equals_up_to_units(d.delta.conj()));
  }
}

TEST_CASE("congruence invariance of alexander") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    SeifertMatrix v = random_seifert(rng, 3, 4, false);
    size_t n = v.dim();
    if (n == 0) continue;
    IMat p = random_unimodular(n, rng);
    SeifertMatrix w =
        SeifertMatrix::validate(mat_mul(mat_mul(transpose(p), v.entries()), p));
    CHECK(alexander(w).delta == alexander(v).delta);
    CHECK(arf(w) == arf(v));
  }
}

TEST_CASE("block sum multiplicativity / arf additivity") {
  std::mt19937 rng(13);
  for (int it = 0; it < 50; ++it) {
    SeifertMatrix a = random_seifert(rng, 2, 3);
    SeifertMatrix b = random_seifert(rng, 2, 3);
    SeifertMatrix s = block_sum(a, b);
    CHECK(alexander(s).delta ==
          (alexander(a).delta * alexander(b).delta).canonical());
    CHECK(arf(s) == (arf(a) + arf(b)) % 2);
  }
}
