#include <doctest.h>

#include <algorithm>

#include "gkz/cone.hpp"
#include "gkz/fan.hpp"
#include "support.hpp"

using namespace gkz;
using testing::cols;
using testing::vec;

namespace {

Calibration p2() { return Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-1", "-1"}})); }
Calibration sqrt2() {
  return Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-sqrt(2)", "-1"}, {"-1", "-sqrt(2)"}}));
}
Calibration sqrt2_plus() {
  return Calibration::make(
      cols({{"1", "0"}, {"0", "1"}, {"-sqrt(2)", "-1"}, {"-2/3", "-2/3*sqrt(2)"}}));
}

std::vector<IndexSet> sets(std::initializer_list<std::initializer_list<int>> xs) {
  std::vector<IndexSet> out;
  for (const auto& x : xs) {
    IndexSet s;
    for (int i : x) s.insert(i - 1);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuantumFan fan_of(const Calibration& c, std::vector<IndexSet> cones, IndexSet virt = {}) {
  QuantumFan f;
  f.calibration = c;
  f.max_cones = std::move(cones);
  f.virtual_set = virt;
  f.complete = true;
  return f;
}

}  // namespace

TEST_CASE("normal fan of the projective plane") {
  const QuantumFan f = normal_fan(p2(), vec({"0", "0", "1"}));
  CHECK(f.max_cones == sets({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(f.virtual_set.empty());
  const CombinatorialType t = combinatorial_type(f);
  CHECK(t.faces == sets({{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(type_name(t, 2) == "S2");
}

TEST_CASE("normal fan of the sqrt2 quadrilateral is C4") {
  const QuantumFan f = normal_fan(sqrt2(), vec({"0", "0", "1", "1"}));
  CHECK(f.max_cones == sets({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(combinatorial_type(f).faces ==
        sets({{}, {1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(type_name(combinatorial_type(f), 2) == "C4");
  CHECK(f.simplicial());
}

TEST_CASE("redundant constraint becomes a virtual generator") {
  const QuantumFan f = normal_fan(sqrt2_plus(), vec({"0", "0", "1", "1"}));
  CHECK(f.max_cones == sets({{1, 2}, {2, 3}, {1, 3}}));
  CHECK(f.virtual_set == IndexSet{3});
  CHECK(type_name(combinatorial_type(f), 2) == "S2");
}

TEST_CASE("normal fan rejects degenerate parameters") {
  CHECK_THROWS_AS(normal_fan(sqrt2(), vec({"0", "0", "0", "0"})), NotAdmissible);
  const auto orthant = Calibration::make(cols({{"1", "0"}, {"0", "1"}}));
  CHECK_THROWS_AS(normal_fan(orthant, vec({"0", "0"})), NotAdmissible);
}

TEST_CASE("faces of a single cone") {
  const auto c = p2();
  CHECK(cone_faces(c.h, IndexSet{0, 1}) == sets({{}, {1}, {2}, {1, 2}}));
  // non-simplicial square cone in d = 3
  const auto sq = Calibration::make(
      cols({{"1", "0", "1"}, {"0", "1", "1"}, {"-1", "0", "1"}, {"0", "-1", "1"}}));
  const auto fs = cone_faces(sq.h, IndexSet{0, 1, 2, 3});
  CHECK(fs == sets({{}, {1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 2, 3, 4}}));
}

TEST_CASE("star subdivision") {
  const QuantumFan s2 = normal_fan(sqrt2_plus(), vec({"0", "0", "1", "1"}));
  const QuantumFan sub = star_subdivision(s2, 3);
  CHECK(sub.max_cones == sets({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(sub.virtual_set.empty());
  CHECK(type_name(combinatorial_type(sub), 2) == "C4");
  CHECK(same_combinatorics(star_subdivision(sub, 0), sub));

  const auto c = Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-1", "-1"}, {"-1", "1"}}));
  const QuantumFan f = fan_of(c, sets({{1, 2}, {2, 3}, {1, 3}}), IndexSet{3});
  const QuantumFan g = star_subdivision(f, 3);
  CHECK(g.max_cones == sets({{1, 2}, {2, 4}, {3, 4}, {1, 3}}));
  CHECK(is_complete(as_geometric(g)));
  CHECK(refines(as_geometric(g), as_geometric(f)));
}

TEST_CASE("common refinement") {
  const QuantumFan f = normal_fan(sqrt2(), vec({"0", "0", "1", "1"}));
  CHECK(same_fan(common_refinement(f, f), as_geometric(f)));

  const auto sq = Calibration::make(
      cols({{"1", "0", "1"}, {"0", "1", "1"}, {"-1", "0", "1"}, {"0", "-1", "1"}}));
  const QuantumFan a = fan_of(sq, sets({{1, 2, 3}, {1, 3, 4}}));
  const QuantumFan b = fan_of(sq, sets({{1, 2, 4}, {2, 3, 4}}));
  const GeometricFan r = common_refinement(a, b);
  CHECK(r.max_cones.size() == 4);
  CHECK(r.rays.size() == 5);
  CHECK(std::find(r.rays.begin(), r.rays.end(), vec({"0", "0", "1"})) != r.rays.end());
  CHECK(refines(r, as_geometric(a)));
  CHECK(refines(r, as_geometric(b)));
  CHECK_FALSE(refines(as_geometric(a), as_geometric(b)));
}

TEST_CASE("fan isomorphisms") {
  const QuantumFan f = normal_fan(sqrt2(), vec({"0", "0", "1", "1"}));
  const auto self = fans_isomorphic(f, f);
  REQUIRE(self);
  CHECK(self->L == MatrixS::Identity(2, 2));
  CHECK(self->sigma == std::vector<int>({0, 1, 2, 3}));

  const QuantumFan a = normal_fan(p2(), vec({"0", "0", "1"}));
  const auto c2 = Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-2", "-2"}}));
  const QuantumFan b = fan_of(c2, sets({{1, 2}, {1, 3}, {2, 3}}));
  CHECK_FALSE(fans_isomorphic(a, b));

  // cyclic relabeling of the square fan
  const auto sq = Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-1", "0"}, {"0", "-1"}}));
  const auto shifted = Calibration::make(cols({{"0", "-1"}, {"1", "0"}, {"0", "1"}, {"-1", "0"}}));
  const QuantumFan q = fan_of(sq, sets({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  const QuantumFan q2 = fan_of(shifted, sets({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  const auto w = fans_isomorphic(q, q2);
  REQUIRE(w);
  for (int i = 0; i < 4; ++i)
    CHECK(mul(w->L, VectorS(sq.h.col(i))) == VectorS(shifted.h.col(w->sigma[i])));
  // the shift i -> i+1 with L = identity is a valid witness as well
  for (int i = 0; i < 4; ++i) CHECK(VectorS(sq.h.col(i)) == VectorS(shifted.h.col((i + 1) % 4)));
  CHECK(types_isomorphic(combinatorial_type(q), combinatorial_type(q2)));
}

TEST_CASE("automorphism groups") {
  CHECK(fan_automorphisms(combinatorial_type(normal_fan(p2(), vec({"0", "0", "1"})))).size() == 6);
  const auto c4 = combinatorial_type(normal_fan(sqrt2(), vec({"0", "0", "1", "1"})));
  CHECK(fan_automorphisms(c4).size() == 8);
  const auto c5cal = Calibration::make(
      cols({{"1", "0"}, {"0", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}}));
  const auto c5 = combinatorial_type(fan_of(c5cal, sets({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})));
  CHECK(type_name(c5, 2) == "C5");
  CHECK(fan_automorphisms(c5).size() == 10);
}

TEST_CASE("strata of the S-variety") {
  CHECK(s_variety_strata(p2(), vec({"0", "0", "1"})) == sets({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(s_variety_strata(sqrt2(), vec({"0", "0", "1", "1"})) ==
        sets({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK_THROWS_AS(s_variety_strata(sqrt2(), vec({"-1", "-1", "0", "0"})), NotAdmissible);
  CHECK(s_variety_strata(sqrt2_plus(), vec({"0", "0", "1", "1"})) ==
        normal_fan(sqrt2_plus(), vec({"0", "0", "1", "1"})).max_cones);
}

TEST_CASE("stabilizer profiles") {
  const auto irr = Calibration::make(
      cols({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}, {"sqrt(2)", "-1", "1"}}));
  const auto r = stabilizer_profiles(irr, IndexSet{0, 1, 2, 3});
  CHECK(r.profile_old == StabilizerProfile{1, 0, 1});
  CHECK(r.profile_new == StabilizerProfile{1, 0, 0});
  CHECK_FALSE(r.isomorphic);

  const auto rat = Calibration::make(
      cols({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}, {"2", "-3", "1/2"}}));
  const auto q = stabilizer_profiles(rat, IndexSet{0, 1, 2, 3});
  CHECK(q.profile_old == StabilizerProfile{0, 1, 1});
  CHECK_FALSE(q.isomorphic);

  CHECK(stabilizer_profiles(p2(), IndexSet{0, 1}).isomorphic);
  CHECK(stabilizer_profiles(rat, IndexSet{0, 1, 2}).isomorphic);
  CHECK_THROWS_AS(stabilizer_profiles(p2(), IndexSet{0}), InvalidInput);
}

TEST_CASE("fan validity and constructibility") {
  const QuantumFan f = normal_fan(sqrt2(), vec({"0", "0", "1", "1"}));
  const FanValidity v = validate(f);
  CHECK(v.valid());
  CHECK(v.complete);
  CHECK(is_constructible(f));
  const SupportFunction sf = support_function(f, vec({"0", "0", "1", "1"}));
  CHECK(sf.convex);
  CHECK(sf.strict);

  // overlapping cones {1,3} and {2,4} in the square calibration
  const auto sq = Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-1", "-1"}, {"1", "1"}}));
  const QuantumFan bad = fan_of(sq, sets({{1, 2}, {2, 3}, {1, 3}, {3, 4}}));
  CHECK_FALSE(validate(bad).intersections_are_faces);
  CHECK_FALSE(is_constructible(bad));

  const auto rep = admissibility(sqrt2(), combinatorial_type(f));
  CHECK(rep.cones_strongly_convex);
  CHECK(rep.forms_fan);
  // a C4 poset whose cyclic order disagrees with the angular order of the rays
  const auto kite = Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-1", "-1"}, {"1", "-2"}}));
  const CombinatorialType twisted =
      combinatorial_type(fan_of(kite, sets({{1, 3}, {2, 3}, {2, 4}, {1, 4}})));
  CHECK(type_name(twisted, 2) == "C4");
  const auto rep2 = admissibility(kite, twisted);
  CHECK(rep2.cones_strongly_convex);
  CHECK_FALSE(rep2.forms_fan);
}
