#include "doctest.h"
#include "kc/io.hpp"
#include "test_support.hpp"

using namespace kc;
using namespace kctest;

TEST_CASE("laurent json round trip") {
  LaurentPoly f;
  f.set(-2, Rat(3, 7));
  f.set(0, Rat(-1));
  f.set(5, Rat(2));
  Json j = laurent_to_json(f);
  CHECK(laurent_from_json(j) == f);
  CHECK(canonical_dump(j) ==
        "{\"terms\":[[-2,\"3/7\"],[0,\"-1\"],[5,\"2\"]]}");

  CHECK(laurent_from_json(Json{{"terms", Json::array()}}).is_zero());
  CHECK_THROWS(laurent_from_json(Json{{"terms", 3}}));
  // descending exponents rejected
  Json bad{{"terms", Json::array({Json::array({1, "1"}), Json::array({0, "1"})})}};
  CHECK_THROWS(laurent_from_json(bad));
}

TEST_CASE("matrix and metabolizer json round trip") {
  SeifertMatrix v = v_six();
  Json j = seifert_to_json(v);
  CHECK(canonical_dump(j) == "{\"matrix\":[[0,2],[1,0]]}");
  CHECK(seifert_from_json(j).entries() == v.entries());

  // invalid matrices are rejected on parse
  Json odd{{"matrix", Json::array({Json::array({1})})}};
  CHECK_THROWS(seifert_from_json(odd));

  Metabolizer m{{{Int(1)}, {Int(0)}}};
  Json mj = metabolizer_to_json(m);
  CHECK(canonical_dump(mj) == "{\"basis\":[[1],[0]]}");
  CHECK(metabolizer_from_json(mj).basis == m.basis);
}

TEST_CASE("profile and interval serialization") {
  SignatureProfile p = sig_profile(trefoil());
  Json j = profile_to_json(p);
  CHECK(j["arc_values"].size() == 2);
  CHECK(j["jumps"].size() == 1);
  // jump at pi/3: 2cos = 1, rational minpoly t - 1
  CHECK(j["jumps"][0]["two_cos"]["minpoly"] ==
        laurent_to_json(LaurentPoly::from_poly(
            Poly(std::vector<Rat>{Rat(-1), Rat(1)}))));

  RatI i(Rat(-4, 3), Rat(-4, 3));
  CHECK(canonical_dump(interval_to_json(i)) == "{\"hi\":\"-4/3\",\"lo\":\"-4/3\"}");
}

TEST_CASE("family json round trip is byte identical") {
  FamilyDescriptor f = forge_family(v_six(), CGBound::from_crossing(6), 3);
  Json j = family_to_json(f);
  std::string bytes = canonical_dump(j);
  FamilyDescriptor g = family_from_json(j);
  CHECK(canonical_dump(family_to_json(g)) == bytes);
  CHECK(family_hash(f) == family_hash(g));
  CHECK(family_hash(f).size() == 64);
  // the parsed family still verifies
  CHECK(verify_lemma_conditions(g).all_pass());
}

TEST_CASE("sha256 known answer") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
