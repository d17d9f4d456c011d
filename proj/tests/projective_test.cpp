#include <doctest.h>

#include <random>

#include "gkz/polytope.hpp"
#include "gkz/projective.hpp"
#include "support.hpp"

using namespace gkz;
using testing::cols;
using testing::S;
using testing::vec;

namespace {

Calibration exceptional() { return Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-2", "0"}, {"0", "-3"}})); }

// Random standard d = 2 calibration whose angular cyclic fan is admissible.
Calibration random_cn(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> u(-6, 6);
  for (;;) {
    MatrixS h(2, n);
    h.col(0) = vec({"1", "0"});
    h.col(1) = vec({"0", "1"});
    for (int j = 2; j < n; ++j) {
      h(0, j) = Scalar(Rational(u(rng)));
      h(1, j) = Scalar(Rational(u(rng)));
    }
    try {
      const auto c = Calibration::make(h);
      if (c.is_geometric() && classify_dim2(c) != Dim2Class::Invalid) return c;
    } catch (const InvalidInput&) {
    }
  }
}

}  // namespace

TEST_CASE("projective certificates") {
  const auto p2 = projective_certificate(testing::p2());
  REQUIRE(p2);
  CHECK(p2->indices == IndexSet::range(3));
  CHECK(p2->lambda == vec({"1/3", "1/3", "1/3"}));

  CHECK_FALSE(projective_certificate(exceptional()));

  const auto q = projective_certificate(testing::qex());
  REQUIRE(q);
  CHECK(q->indices == IndexSet::range(3));
  // l1 e1 + l2 e2 + l3 (-sqrt2, -1) = 0 with l1 + l2 + l3 = 1
  CHECK(q->lambda == vec({"sqrt(2) - 1", "1 - 1/2*sqrt(2)", "1 - 1/2*sqrt(2)"}));
  CHECK(verify_certificate(testing::qex(), *q));

  const auto f = projective_certificate(testing::figures());
  REQUIRE(f);
  CHECK(f->indices == IndexSet{0, 1, 4});
}

TEST_CASE("simplex parameters give simplices") {
  const auto p2 = testing::p2();
  CHECK(simplex_parameter(p2, *projective_certificate(p2)) == vec({"1", "1", "1"}));

  const auto q = testing::qex();
  const VectorS bq = simplex_parameter(q, *projective_certificate(q));
  CHECK(bq == vec({"1", "1", "1", "2 + sqrt(2)"}));
  const QuantumFan fq = normal_fan(q, bq);
  CHECK(type_name(combinatorial_type(fq), 2) == "S2");
  CHECK(fq.virtual_set == IndexSet{3});
  CHECK(mul_transpose(gale_transform(q), bq) == vec({"2 + sqrt(2)", "3 + 2*sqrt(2)"}));

  const auto fi = testing::figures();
  const QuantumFan ff = normal_fan(fi, simplex_parameter(fi, *projective_certificate(fi)));
  CHECK(type_name(combinatorial_type(ff), 2) == "S2");
  CHECK(ff.virtual_set == IndexSet{2, 3});

  ProjectiveCertificate bad{IndexSet{0, 1, 2}, vec({"1", "0", "0"})};
  CHECK_THROWS_AS(simplex_parameter(p2, bad), InvalidInput);
}

TEST_CASE("forward soundness on random instances") {
  std::mt19937_64 rng(21);
  int certified = 0;
  for (int s = 0; s < 60; ++s) {
    const int d = 2 + s % 2;
    const int n = d + 2 + s % 3;
    MatrixS h(d, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < d; ++i) h(i, j) = testing::random_entry(rng, 3, true);
    Calibration c;
    try {
      c = Calibration::make(h);
    } catch (const InvalidInput&) {
      continue;
    }
    const auto cert = projective_certificate(c);
    if (!cert) continue;
    ++certified;
    const QuantumFan f = normal_fan(c, simplex_parameter(c, *cert));
    CHECK(type_name(combinatorial_type(f), d) == "S" + std::to_string(d));
    CHECK(f.virtual_set == IndexSet::range(n) - cert->indices);
  }
  CHECK(certified > 10);
}

TEST_CASE("certificates survive perturbations inside the openness radius") {
  std::mt19937_64 rng(5);
  for (const auto& c : {testing::p2(), testing::qex(), testing::figures(), testing::flip3()}) {
    const auto cert = projective_certificate(c);
    REQUIRE(cert);
    const Scalar delta = openness_radius(c, *cert);
    CHECK(delta.sign() > 0);
    const Rational r = rational_floor(delta, 40);
    std::uniform_int_distribution<long> u(-999, 999);
    for (int s = 0; s < 20; ++s) {
      MatrixS h = c.h;
      for (int j = 0; j < c.n; ++j)
        for (int i = 0; i < c.d; ++i) h(i, j) += Scalar(r * Rational(u(rng), 1000));
      const auto c2 = Calibration::make(h);
      CHECK(certificate_for(c2, cert->indices).has_value());
    }
  }
}

TEST_CASE("d = 2 classification") {
  CHECK(classify_dim2(exceptional()) == Dim2Class::ExceptionalN4);
  CHECK(classify_dim2(testing::figures()) == Dim2Class::ProjectiveLinkable);
  CHECK(classify_dim2(testing::p2()) == Dim2Class::ProjectiveLinkable);
  CHECK(classify_dim2(testing::qex()) == Dim2Class::ProjectiveLinkable);
  // all generators in a half-plane: no complete fan
  CHECK(classify_dim2(Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"1", "1"}}))) == Dim2Class::Invalid);
  CHECK_THROWS_AS(classify_dim2(testing::flip3()), InvalidInput);

  std::mt19937_64 rng(8);
  for (int n : {3, 5, 6})
    for (int s = 0; s < 40; ++s) CHECK(classify_dim2(random_cn(rng, n)) == Dim2Class::ProjectiveLinkable);
  for (int s = 0; s < 40; ++s) {
    const auto c = random_cn(rng, 4);
    const auto k = classify_dim2(c);
    CHECK((k == Dim2Class::ExceptionalN4) == !projective_certificate(c).has_value());
  }
}

TEST_CASE("paths to projective space") {
  const auto q = testing::qex();
  const auto rq = path_to_projective(q, vec({"0", "0", "1", "1"}));
  REQUIRE(rq.found);
  CHECK_FALSE(rq.calibration_segment);
  REQUIRE(rq.cobordism.crossings.size() == 1);
  CHECK(rq.cobordism.crossings[0].wall.type == WallType::Divisorial);
  CHECK(rq.cobordism.crossings[0].ok());
  CHECK(rq.cobordism.segments.back().virtual_set == IndexSet{3});

  const auto rp = path_to_projective(testing::p2(), vec({"0", "0", "1"}));
  REQUIRE(rp.found);
  CHECK(rp.cobordism.crossings.empty());

  const auto c4 = exceptional();
  const auto re = path_to_projective(c4, vec({"1", "1", "1", "1"}));
  REQUIRE(re.found);
  REQUIRE(re.calibration_segment);
  CHECK(re.calibration_segment->validated);
  CHECK(re.calibration_segment->target(0, 2) == S("-2"));
  CHECK(re.calibration_segment->target(1, 2) == S("1/10"));
  const QuantumFan last = re.cobordism.segments.back();
  CHECK(type_name(combinatorial_type(last), 2) == "S2");

  CHECK_THROWS_AS(path_to_projective(q, vec({"0", "0", "0", "0"})), NotAdmissible);
}
