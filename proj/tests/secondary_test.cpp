#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gkz/cone.hpp"
#include "gkz/polytope.hpp"
#include "gkz/secondary.hpp"
#include "support.hpp"

using namespace gkz;
using testing::S;
using testing::vec;

namespace {

using Key = std::pair<std::vector<IndexSet>, IndexSet>;

Key key_of(const QuantumFan& f) { return {f.max_cones, f.virtual_set}; }

// Affine path with chi(-1) = from and chi(1) = to.
AffinePath path_between(const GaleData& g, const VectorS& from, const VectorS& to) {
  AffinePath p;
  p.beta = min_norm_preimage(g.k, VectorS((from + to) * S("1/2")));
  p.alpha = min_norm_preimage(g.k, VectorS((to - from) * S("1/2")));
  return p;
}

// Classes of (Delta, I) among random admissible generic integer characters.
std::size_t sampled_classes(const GaleData& g, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> u(-60, 60);
  std::set<Key> seen;
  int taken = 0;
  while (taken < samples) {
    VectorS chi(g.r);
    for (int i = 0; i < g.r; ++i) chi[i] = Scalar(Rational(u(rng)));
    if (!is_admissible(g, chi) || !is_generic(g, chi)) continue;
    ++taken;
    seen.insert(key_of(fan_at(g, chi)));
  }
  return seen.size();
}

VectorS random_interior(const Chamber& ch, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> w(1, 30);
  VectorS p = VectorS::Zero(ch.rep_point.size());
  for (const auto& r : ch.rays) p += r * Scalar(Rational(w(rng)));
  return p;
}

}  // namespace

TEST_CASE("Gale cone facets") {
  const auto g = GaleData::make(testing::qex());
  CHECK(g.generators == std::vector<VectorS>{vec({"sqrt(2)", "1"}), vec({"1", "sqrt(2)"}), vec({"1", "0"}),
                                               vec({"0", "1"})});
  std::vector<VectorS> normals = g.facet_normals;
  std::sort(normals.begin(), normals.end(), [](const VectorS& a, const VectorS& b) { return a[0] < b[0]; });
  CHECK(normals == std::vector<VectorS>{vec({"0", "1"}), vec({"1", "0"})});

  const auto gp = GaleData::make(testing::p2());
  CHECK(gp.r == 1);
  CHECK(gp.facet_normals == std::vector<VectorS>{vec({"1"})});

  const auto g0 = GaleData::make(Calibration::make(testing::cols({{"1", "0"}, {"0", "1"}})));
  CHECK(g0.r == 0);
  CHECK(g0.facet_normals.empty());
}

TEST_CASE("admissibility examples and the dimension oracle") {
  const auto c = testing::qex();
  const auto g = GaleData::make(c);
  CHECK(is_admissible(g, vec({"1", "1"})));
  CHECK_FALSE(is_admissible(g, vec({"1", "0"})));
  CHECK(in_gale_cone(g, vec({"1", "0"})));
  CHECK_FALSE(is_admissible(g, vec({"-1", "-1"})));
  CHECK(dimension(c, min_norm_preimage(g.k, vec({"-1", "-1"}))) == -1);

  for (const auto& cal : {c, testing::figures(), testing::flip3(), testing::p2()}) {
    const auto gg = GaleData::make(cal);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> u(-4, 4);
    for (int s = 0; s < 300; ++s) {
      VectorS chi(gg.r);
      for (int i = 0; i < gg.r; ++i) chi[i] = Scalar(Rational(u(rng)));
      const int dim = dimension(cal, min_norm_preimage(gg.k, chi));
      CHECK(is_admissible(gg, chi) == (dim == cal.d));
      CHECK(in_gale_cone(gg, chi) == (dim >= 0));
    }
  }
}

TEST_CASE("genericity examples") {
  const auto g = GaleData::make(testing::qex());
  CHECK(is_generic(g, vec({"1", "1"})));
  CHECK_FALSE(is_generic(g, vec({"sqrt(2)", "1"})));
  CHECK(is_generic(g, vec({"2 + sqrt(2)", "1 + 2*sqrt(2)"})));
  CHECK(degenerate_cones(g, vec({"2", "0"})) == std::vector<IndexSet>{IndexSet().with(2)});
  CHECK_FALSE(is_generic(g, vec({"0", "0"})));
}

TEST_CASE("genericity matches simple polytopes and simplicial fans") {
  for (const auto& cal : {testing::qex(), testing::figures(), testing::flip3()}) {
    const auto g = GaleData::make(cal);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> u(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, g.small_cones.size() - 1);
    int nongeneric = 0;
    for (int s = 0; s < 400; ++s) {
      VectorS chi(g.r);
      if (s % 2 == 0) {
        for (int i = 0; i < g.r; ++i) chi[i] = Scalar(Rational(u(rng)));
      } else {
        // a point of a lower-dimensional Gale cone, pushed into the interior half the time
        chi = VectorS::Zero(g.r);
        for (int i : g.small_cones[pick(rng)].j.elements()) chi += g.generators[i] * Scalar(Rational(1 + u(rng) * u(rng)));
      }
      if (!is_admissible(g, chi)) continue;
      const VectorS b = min_norm_preimage(g.k, chi);
      const HPolytope p = analyze(cal, b);
      const QuantumFan f = normal_fan(cal, p);
      bool virtual_empty = true;
      for (int i : f.virtual_set.elements()) virtual_empty &= p.facet_dims[i] == -1;
      const bool simple = f.simplicial() && is_simple(cal, b) && virtual_empty;
      CHECK(is_generic(g, chi) == simple);
      nongeneric += !is_generic(g, chi);
    }
    CHECK(nongeneric > 0);
  }
}

TEST_CASE("chamber_of on the sqrt2 instance") {
  const auto g = GaleData::make(testing::qex());
  const Chamber mid = chamber_of(g, vec({"1", "1"}));
  CHECK(mid.rays == std::vector<VectorS>{vec({"1", "1/2*sqrt(2)"}), vec({"1", "sqrt(2)"})});
  CHECK(type_name(combinatorial_type(mid.fan), 2) == "C4");
  CHECK(mid.fan.virtual_set == IndexSet());
  CHECK(mid.interior(mid.rep_point));
  // (1,1) = (sqrt2-1)(sqrt2,1) + (sqrt2-1)(1,sqrt2)
  CHECK(mid.interior(VectorS(vec({"sqrt(2)", "1"}) * S("sqrt(2) - 1") + vec({"1", "sqrt(2)"}) * S("sqrt(2) - 1"))));

  const Chamber low = chamber_of(g, vec({"2", "1"}));
  CHECK(type_name(combinatorial_type(low.fan), 2) == "S2");
  CHECK(low.fan.virtual_set == IndexSet().with(2));

  const Chamber high = chamber_of(g, vec({"1", "2"}));
  CHECK(high.fan.virtual_set == IndexSet().with(3));

  CHECK_THROWS_AS(chamber_of(g, vec({"sqrt(2)", "1"})), OnWall);
  CHECK_THROWS_AS(chamber_of(g, vec({"1", "-1"})), NotAdmissible);
  CHECK_THROWS_AS(chamber_of(g, vec({"3", "0"})), NotAdmissible);
  try {
    chamber_of(g, vec({"2*sqrt(2)", "2"}));
    FAIL("expected OnWall");
  } catch (const OnWall& e) {
    CHECK(e.cones() == std::vector<std::vector<int>>{{1}});
  }
}

TEST_CASE("P2 has a single chamber") {
  const auto g = GaleData::make(testing::p2());
  const Chamber ch = chamber_of(g, vec({"5"}));
  CHECK(type_name(combinatorial_type(ch.fan), 2) == "S2");
  CHECK(ch.rays == std::vector<VectorS>{vec({"1"})});
  CHECK(ch.facets.size() == 1);
  CHECK(ch.facets[0].type == WallType::GaleBoundary);
  const auto sf = enumerate_chambers(g);
  CHECK(sf.chambers.size() == 1);
}

TEST_CASE("sqrt2 instance has three chambers with divisorial walls") {
  const auto sf = enumerate_chambers(testing::qex());
  REQUIRE(sf.chambers.size() == 3);
  int divisorial = 0;
  for (std::size_t i = 0; i < sf.chambers.size(); ++i) {
    const auto& ch = sf.chambers[i];
    for (std::size_t f = 0; f < ch.facets.size(); ++f) {
      const Wall w = classify_wall(ch, f);
      CHECK(w.type != WallType::Flipping);
      CHECK((w.type == WallType::GaleBoundary) == (sf.adjacency[i][f] == -1));
      if (w.type == WallType::Divisorial) {
        ++divisorial;
        CHECK((w.virtual_index == 2 || w.virtual_index == 3));
        const auto idx = w.index();
        CHECK((idx == std::pair{1, 2} || idx == std::pair{2, 1}));
      }
    }
  }
  CHECK(divisorial == 4);
  std::set<IndexSet> virt;
  for (const auto& ch : sf.chambers) virt.insert(ch.fan.virtual_set);
  CHECK(virt == std::set<IndexSet>{IndexSet(), IndexSet().with(2), IndexSet().with(3)});
}

TEST_CASE("chamber count matches angular sectors when n - d = 2") {
  for (const auto& cal : {testing::qex(), testing::flip3()}) {
    const auto g = GaleData::make(cal);
    std::vector<VectorS> dirs;
    for (const auto& v : g.generators) {
      const VectorS n = cone::normalize_direction(v);
      if (std::find(dirs.begin(), dirs.end(), n) == dirs.end()) dirs.push_back(n);
    }
    CHECK(enumerate_chambers(g).chambers.size() == dirs.size() - 1);
  }
}

TEST_CASE("figures instance: BFS against sampling") {
  const auto g = GaleData::make(testing::figures());
  const auto sf = enumerate_chambers(g);
  CHECK(sf.chambers.size() == 11);
  CHECK(sampled_classes(g, 3000, 5) == sf.chambers.size());
  CHECK(sampled_classes(GaleData::make(testing::flip3()), 1000, 6) == 4);
}

TEST_CASE("chamber invariants") {
  std::mt19937_64 rng(3);
  for (const auto& cal : {testing::qex(), testing::figures(), testing::flip3()}) {
    const auto g = GaleData::make(cal);
    const auto sf = enumerate_chambers(g);
    for (const auto& ch : sf.chambers) {
      CHECK(product_split(ch));
      CHECK(ch.interior(ch.rep_point));
      const Key k = key_of(ch.fan);
      for (int s = 0; s < 20; ++s) {
        const VectorS p = random_interior(ch, rng);
        if (!is_generic(g, p)) continue;
        CHECK(key_of(fan_at(g, p)) == k);
      }
      const Chamber scaled = chamber_of(g, VectorS(ch.rep_point * S("7/3")));
      CHECK(scaled.inequalities == ch.inequalities);
      // every point of the closure is in the Gale cone
      for (const auto& r : ch.rays) CHECK(in_gale_cone(g, r));
    }
  }
}

TEST_CASE("flipping walls in dimension three") {
  const auto g = GaleData::make(testing::flip3());
  const auto sf = enumerate_chambers(g);
  int flips = 0;
  for (const auto& ch : sf.chambers)
    for (const auto& w : ch.facets)
      if (w.type == WallType::Flipping) {
        ++flips;
        CHECK(w.plus.size() >= 2);
        CHECK(w.minus.size() >= 2);
      }
  CHECK(flips == 2);

  const auto rep = cross_wall(path_between(g, vec({"1", "3"}), vec({"3", "2"})), g);
  REQUIRE(rep.crossed);
  CHECK(rep.wall.type == WallType::Flipping);
  // the wall is chi_1 = chi_2: 2 + t = 5/2 - t/2
  CHECK(rep.t == S("1/3"));
  CHECK(rep.before.rays() == rep.after.rays());
  CHECK_FALSE(rep.on.simplicial());
  CHECK(rep.ok());
  CHECK(rep.checks.size() == 6);
}

TEST_CASE("divisorial crossing on the sqrt2 instance") {
  const auto c = testing::qex();
  const auto g = GaleData::make(c);
  AffinePath p{vec({"0", "0", "1", "1"}), vec({"0", "0", "0", "-7/20"})};
  CHECK(path_point(g, p, S("0")) == vec({"1", "1"}));
  const auto rep = cross_wall(p, g);
  REQUIRE(rep.crossed);
  CHECK(rep.wall.type == WallType::Divisorial);
  // chi(1) = (1, 13/20) lies in Cone((1,0),(sqrt2,1)), where generator 3 is virtual
  CHECK(rep.wall.virtual_index == 2);
  CHECK_FALSE(rep.wall.ray_appears);
  CHECK(rep.t == S("20/7 - 10/7*sqrt(2)"));
  CHECK(rep.after.virtual_set == IndexSet().with(2));
  CHECK(rep.ok());

  const auto cob = cobordism_from_path(p, g);
  REQUIRE(cob.crossings.size() == 1);
  CHECK(cob.crossings[0].wall.index() == std::pair{2, 1});
  CHECK(cob.segments.size() == 2);

  // The reverse path blows up: index (1, 2).
  AffinePath back{p.beta, -p.alpha};
  const auto rev = cobordism_from_path(back, g);
  REQUIRE(rev.crossings.size() == 1);
  CHECK(rev.crossings[0].wall.ray_appears);
  CHECK(rev.crossings[0].wall.index() == std::pair{1, 2});
}

TEST_CASE("paths without crossings and degenerate paths") {
  const auto g = GaleData::make(testing::qex());
  AffinePath still{vec({"0", "0", "1", "1"}), vec({"0", "0", "0", "0"})};
  const auto rep = cross_wall(still, g);
  CHECK_FALSE(rep.crossed);
  CHECK(cobordism_from_path(still, g).crossings.empty());

  // chi(1) = (sqrt2, 1) is a generator.
  const auto onwall = path_between(g, vec({"1", "1"}), vec({"sqrt(2)", "1"}));
  CHECK_THROWS_AS(cross_wall(onwall, g), DegeneratePath);

  const auto outside = path_between(g, vec({"1", "1"}), vec({"1", "-1"}));
  CHECK_THROWS_AS(cross_wall(outside, g), NotAdmissible);

  // Through the origin-free codimension-two locus: a ray of the figures instance.
  const auto gf = GaleData::make(testing::figures());
  const VectorS ray = gf.generators[4];
  const auto through = path_between(gf, VectorS(ray + vec({"1", "0", "0"}) * S("1/9")),
                                    VectorS(ray - vec({"1", "0", "0"}) * S("1/9")));
  CHECK_THROWS_AS(cobordism_from_path(through, gf), DegeneratePath);
}

TEST_CASE("figures instance: two crossings along a path") {
  const auto g = GaleData::make(testing::figures());
  const auto sf = enumerate_chambers(g);
  int mid = -1;
  for (std::size_t i = 0; i < sf.chambers.size(); ++i)
    if (type_name(combinatorial_type(sf.chambers[i].fan), 2) == "C5") mid = static_cast<int>(i);
  REQUIRE(mid >= 0);
  // Points on two facets of the C5 chamber; the line through them leaves it across both.
  const auto& ch = sf.chambers[mid];
  auto facet_point = [&](std::size_t f) {
    VectorS p = VectorS::Zero(g.r);
    for (const auto& r : ch.facet_rays[f]) p += r;
    return p;
  };
  const VectorS p = facet_point(0), q = facet_point(1);
  const VectorS d = q - p;
  const auto cob = cobordism_from_path(path_between(g, VectorS(p - d * S("1/50")), VectorS(q + d * S("1/50"))), g);
  REQUIRE(cob.crossings.size() == 2);
  CHECK(type_name(combinatorial_type(cob.segments[0]), 2) == "C4");
  CHECK(type_name(combinatorial_type(cob.segments[1]), 2) == "C5");
  CHECK(type_name(combinatorial_type(cob.segments[2]), 2) == "C4");
  CHECK(cob.segments[0].virtual_set.size() == 1);
  CHECK(cob.segments[2].virtual_set.size() == 1);
  for (const auto& x : cob.crossings) {
    CHECK(x.wall.type == WallType::Divisorial);
    CHECK(x.ok());
  }
  CHECK(cob.crossings[0].wall.index() == std::pair{1, 2});
  CHECK(cob.crossings[1].wall.index() == std::pair{2, 1});
}

TEST_CASE("library sampler reaches every chamber") {
  for (const auto& c : {testing::qex(), testing::figures(), testing::flip3()}) {
    const auto g = GaleData::make(c);
    const auto chis = sample_characters(g, 2000, 7);
    CHECK(chis.size() == 2000);
    for (std::size_t i = 0; i < chis.size(); i += 97) CHECK(is_generic(g, chis[i]));
    CHECK(sampled_class_count(g, 2000, 7) == enumerate_chambers(g).chambers.size());
  }
}
