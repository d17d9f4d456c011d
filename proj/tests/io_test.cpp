#include <doctest.h>

#include "gkz/io.hpp"
#include "support.hpp"

using namespace gkz;
using testing::S;
using testing::vec;
using io::Json;

TEST_CASE("scalar encoding") {
  CHECK(io::to_json(S("3/4")) == Json{{"a", "3/4"}});
  CHECK(io::to_json(S("1 - sqrt(2)")) == Json{{"a", "1"}, {"b", "-1"}, {"m", 2}});
  for (const char* s : {"0", "-7", "22/7", "sqrt(2)", "1/2 - 3/5*sqrt(3)"})
    CHECK(io::scalar_from_json(io::to_json(S(s))) == S(s));
  CHECK(io::scalar_from_json(Json(5)) == S("5"));
  CHECK(io::scalar_from_json(Json("2*sqrt(2)")) == S("2*sqrt(2)"));
  CHECK_THROWS_AS(io::scalar_from_json(Json(0.5)), InvalidInput);
  CHECK_THROWS_AS(io::scalar_from_json(Json{{"b", "1"}}), InvalidInput);
}

TEST_CASE("indices are one-based") {
  CHECK(io::indices_to_json(IndexSet{0, 3}) == Json({1, 4}));
  CHECK(io::indices_from_json(Json({1, 4}), 4) == IndexSet{0, 3});
  CHECK_THROWS_AS(io::indices_from_json(Json({0}), 4), InvalidInput);
  CHECK_THROWS_AS(io::indices_from_json(Json({5}), 4), InvalidInput);
}

TEST_CASE("calibration round trip and validation") {
  const auto c = testing::qex();
  const Json j = io::to_json(c);
  CHECK(j["m"] == 2);
  const auto back = io::calibration_from_json(j);
  CHECK(back.h == c.h);
  CHECK(io::to_json(back) == j);

  Json virt = io::to_json(testing::figures());
  virt["virtual"] = {5};
  CHECK(io::calibration_from_json(virt).virtual_set == IndexSet{4});

  Json bad = j;
  bad["m"] = 3;
  CHECK_THROWS_AS(io::calibration_from_json(bad), FieldMismatch);
  CHECK_THROWS_AS(io::calibration_from_json(Json{{"d", 2}}), InvalidInput);
  Json rank = {{"d", 2}, {"columns", {{1, 0}, {2, 0}}}};
  CHECK_THROWS_AS(io::calibration_from_json(rank), InvalidCalibration);
}

TEST_CASE("polytope, type and fan round trips") {
  const auto c = testing::qex();
  const auto b = vec({"0", "0", "1", "1"});
  const auto p = analyze(c, b);
  CHECK(io::to_json(io::polytope_from_json(io::to_json(p))) == io::to_json(p));

  const auto f = normal_fan(c, b);
  const Json fj = io::to_json(f);
  CHECK(fj["type"] == "C4");
  CHECK(fj["max_cones"] == Json({{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  const auto f2 = io::fan_from_json(fj, c);
  CHECK(same_combinatorics(f, f2));
  CHECK(io::to_json(f2) == fj);

  const auto t = combinatorial_type(f);
  CHECK(io::type_from_json(io::to_json(t)) == t);
}

TEST_CASE("secondary fan round trip") {
  const auto c = testing::figures();
  const auto sf = enumerate_chambers(GaleData::make(c));
  const Json j = io::to_json(sf);
  CHECK(j["count"] == 11);
  CHECK(io::to_json(io::secondary_from_json(j, c)) == j);
  for (const auto& ch : j["chambers"])
    for (const auto& w : ch["facets"]) {
      CHECK(w.contains("index"));
      CHECK(w.contains("virtual_index") == (w["type"] == "divisorial"));
    }
}

TEST_CASE("crossing and cobordism round trips") {
  const auto c = testing::flip3();
  const auto g = GaleData::make(c);
  AffinePath p;
  p.beta = min_norm_preimage(g.k, vec({"2", "5/2"}));
  p.alpha = min_norm_preimage(g.k, vec({"1", "-1/2"}));
  const auto cob = cobordism_from_path(p, g);
  REQUIRE(cob.crossings.size() == 1);
  const Json j = io::to_json(cob);
  CHECK(j["crossings"][0]["wall"]["type"] == "flipping");
  CHECK(j["crossings"][0]["wall"].contains("circuit"));
  CHECK(io::to_json(io::cobordism_from_json(j, c)) == j);
  CHECK(io::to_json(io::path_from_json(io::to_json(p))) == io::to_json(p));
}

TEST_CASE("projective path and stabilizer round trips") {
  const auto c = testing::qex();
  const auto rp = path_to_projective(c, vec({"0", "0", "1", "1"}));
  const Json j = io::to_json(rp);
  CHECK(j["certificate"]["indices"] == Json({1, 2, 3}));
  CHECK(io::to_json(io::projective_path_from_json(j, c)) == j);

  const auto c3 = Calibration::make(testing::cols({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}, {"2", "-3", "1/2"}}));
  const auto s = stabilizer_profiles(c3, IndexSet{0, 1, 2, 3});
  const auto back = io::stabilizers_from_json(io::to_json(s));
  CHECK(back.profile_old == s.profile_old);
  CHECK(back.profile_new == s.profile_new);
  CHECK(back.isomorphic == s.isomorphic);
}

TEST_CASE("path flag parsing") {
  const auto p = io::parse_path("0,0,1,1;0,0,0,-7/20");
  CHECK(p.beta == vec({"0", "0", "1", "1"}));
  CHECK(p.alpha == vec({"0", "0", "0", "-7/20"}));
  CHECK(io::parse_path("sqrt(2),1;0,1").beta[0] == S("sqrt(2)"));
  CHECK_THROWS_AS(io::parse_path("1,2"), InvalidInput);
  CHECK_THROWS_AS(io::parse_path("1,2;3"), InvalidInput);
}
