/*
   Copyright 2026 The apolar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apolar/apolarity.hpp"

using namespace apolar;

namespace {

Polynomial P(const RingPtr& r, const std::string& text) { return Polynomial::parse(r, text); }

PointSet random_pointset(const RingPtr& s, long n, Rng& rng) {
  RandomConfig cfg;
  cfg.coordinate_bound = 25;
  return random_points(n, s, cfg, rng, {});
}

Polynomial random_power_sum(const RingPtr& s, const PointSet& a, int d, Rng& rng,
                            std::vector<FieldElement>* coeffs = nullptr) {
  Polynomial f = Polynomial::zero(s);
  for (const auto& p : a.points()) {
    FieldElement c = s->field.from_int(rng.uniform(1, 20));
    if (coeffs) coeffs->push_back(c);
    f = f + linear_form_of_point(s, p).pow(d).scale(c);
  }
  return f;
}

}  // namespace

TEST_CASE("catalecticant of a pure power has rank one") {
  RingPtr s = ternary_ring(Field::rationals());
  Polynomial f = P(s, "x^10");
  CatalecticantMatrix cat = catalecticant(f, 5);
  CHECK(cat.matrix.rows() == 21);
  CHECK(cat.matrix.cols() == 21);
  CHECK(matrix_rank(cat.matrix) == 1);
  CHECK(catalecticant_rank(f, 0) == 1);
  CHECK(catalecticant_rank(f, 10) == 1);
}

TEST_CASE("generic sums of 22 tenth powers have full middle catalecticant") {
  RingPtr s = ternary_ring(Field::prime(32003));
  Rng rng(3);
  PointSet a = random_pointset(s, 22, rng);
  Polynomial f = random_power_sum(s, a, 10, rng);
  CHECK(catalecticant_rank(f, 5) == 21);
}

TEST_CASE("catalecticant ranks are symmetric") {
  Rng rng(9);
  RingPtr s = ternary_ring(Field::prime(32003));
  for (int trial = 0; trial < 10; ++trial) {
    int d = 4 + static_cast<int>(rng.uniform(0, 3));
    PointSet a = random_pointset(s, 3 + rng.uniform(0, 5), rng);
    Polynomial f = random_power_sum(s, a, d, rng);
    for (int e = 0; e <= d; ++e) CHECK(catalecticant_rank(f, e) == catalecticant_rank(f, d - e));
  }
}

TEST_CASE("annihilator of a pure power") {
  RingPtr s = ternary_ring(Field::rationals());
  RingPtr r = dual_ring(s);
  Ideal ann = apolar_ideal(P(s, "x^10"));
  CHECK(contains(ann, P(r, "v")));
  CHECK(contains(ann, P(r, "w")));
  CHECK_FALSE(contains(ann, P(r, "u")));
  std::vector<long> h = hilbert_function(ann, 11);
  CHECK(h == std::vector<long>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0});
}

TEST_CASE("annihilator of a squared linear form") {
  RingPtr s = ternary_ring(Field::rationals());
  Ideal ann = apolar_ideal(P(s, "x+y+z") * P(s, "x+y+z"));
  std::vector<long> h = hilbert_function(ann, 3);
  CHECK(h == std::vector<long>{1, 1, 1, 0});
}

TEST_CASE("annihilator quotient is symmetric with catalecticant ranks") {
  RingPtr s = ternary_ring(Field::prime(32003));
  Rng rng(13);
  PointSet a = random_pointset(s, 4, rng);
  Polynomial f = random_power_sum(s, a, 6, rng);
  Ideal ann = apolar_ideal(f);
  std::vector<long> h = hilbert_function(ann, 7);
  for (int e = 0; e <= 6; ++e) {
    CHECK(h[e] == h[6 - e]);
    CHECK(h[e] == catalecticant_rank(f, e));
  }
  CHECK(h[7] == 0);
}

TEST_CASE("apolarity membership by direct differentiation") {
  RingPtr s = ternary_ring(Field::rationals());
  RingPtr r = dual_ring(s);
  Polynomial f = P(s, "x^10");
  CHECK(is_apolar(Ideal(r, {P(r, "v"), P(r, "w")}), f));
  CHECK_FALSE(is_apolar(Ideal(r, {P(r, "u")}), f));
}

TEST_CASE("point ideals sit inside the annihilator exactly when apolar") {
  RingPtr s = ternary_ring(Field::prime(32003));
  RingPtr r = dual_ring(s);
  Rng rng(61);
  PointSet a = random_pointset(s, 3, rng);
  Polynomial f = random_power_sum(s, a, 4, rng);
  Ideal ann = apolar_ideal(f);

  std::vector<Polynomial> relettered;
  for (const auto& g : a.ideal().generators()) relettered.push_back(g.reletter(r));
  Ideal dual_points(r, relettered);
  CHECK(is_subset(dual_points, ann));  // containment route
  CHECK(is_apolar(a.ideal(), f));      // differentiation route

  PointSet elsewhere = random_pointset(s, 3, rng);
  std::vector<Polynomial> other;
  for (const auto& g : elsewhere.ideal().generators()) other.push_back(g.reletter(r));
  CHECK(is_subset(Ideal(r, other), ann) == is_apolar(elsewhere.ideal(), f));
}

TEST_CASE("span intersection dimension from the union profile") {
  RingPtr s = ternary_ring(Field::prime(32003));
  Rng rng(21);
  PointSet a = random_pointset(s, 5, rng);
  // identical spans: independent points at high degree leave dimension l-1
  CHECK(span_intersection_dim(a, a, 6) == 4);

  PointSet p1(s, {a.points()[0]});
  PointSet p2(s, {a.points()[1]});
  CHECK(span_intersection_dim(p1, p2, 1) == -1);  // disjoint independent points
}

TEST_CASE("the pairing kernel of a repeated point is its power") {
  RingPtr s = ternary_ring(Field::rationals());
  PointSet pt(s, {ProjectivePoint(s->field.one(), s->field.zero(), s->field.zero())});
  SpanKernel k = common_apolar_form(pt.ideal(), pt.ideal(), 2);
  REQUIRE(k.dim == 1);
  CHECK(k.basis[0] == P(s, "x^2"));
}

TEST_CASE("decomposition solves for the power coefficients") {
  RingPtr s = ternary_ring(Field::rationals());
  const Field& q = s->field;
  PointSet two(s, {ProjectivePoint(q.one(), q.zero(), q.zero()),
                   ProjectivePoint(q.zero(), q.one(), q.zero())});
  auto coeffs = decompose_on_points(P(s, "x^2+y^2"), two);
  REQUIRE(coeffs.has_value());
  CHECK((*coeffs)[0].is_one());
  CHECK((*coeffs)[1].is_one());

  PointSet wrong(s, {ProjectivePoint(q.zero(), q.one(), q.zero())});
  CHECK_FALSE(decompose_on_points(P(s, "x^2"), wrong).has_value());
}

TEST_CASE("apolarity lemma equivalence and span cross-check on random instances") {
  RingPtr s = ternary_ring(Field::prime(32003));
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    int d = 4 + static_cast<int>(rng.uniform(0, 4));
    PointSet a = random_pointset(s, 3 + rng.uniform(0, 4), rng);

    std::vector<FieldElement> planted;
    Polynomial f = random_power_sum(s, a, d, rng, &planted);
    CHECK(is_apolar(a.ideal(), f));
    auto solved = decompose_on_points(f, a);
    REQUIRE(solved.has_value());
    Polynomial rebuilt = Polynomial::zero(s);
    for (long i = 0; i < a.size(); ++i)
      rebuilt = rebuilt + linear_form_of_point(s, a.points()[i]).pow(d).scale((*solved)[i]);
    CHECK(rebuilt == f);

    // a generic form is outside the span and fails both tests
    Polynomial off = f + Polynomial::variable(s, 2).pow(d);
    CHECK(is_apolar(a.ideal(), off) == decompose_on_points(off, a).has_value());

    // the span-intersection formula against the pairing kernel
    PointSet b = random_pointset(s, 3 + rng.uniform(0, 4), rng);
    SpanKernel k = common_apolar_form(a.ideal(), b.ideal(), d);
    CHECK(span_intersection_dim(a, b, d) == k.dim - 1);
  }
}
