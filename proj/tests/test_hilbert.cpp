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

#include "apolar/hilbert.hpp"
#include "apolar/ideal_ops.hpp"
#include "apolar/points.hpp"

using namespace apolar;

namespace {

RingPtr qring() { return ternary_ring(Field::rationals()); }

Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(Polynomial::parse(r, g));
  return Ideal(r, std::move(polys));
}

}  // namespace

TEST_CASE("hilbert function of a single point is constant one") {
  RingPtr s = qring();
  std::vector<long> h = hilbert_function(ideal_of(s, {"x", "y"}), 6);
  CHECK(h == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("hilbert function counts standard monomials") {
  RingPtr s = qring();
  CHECK(hilbert_function(Ideal::zero(s), 4) == std::vector<long>{1, 3, 6, 10, 15});
  CHECK(hilbert_function(Ideal::unit(s), 3) == std::vector<long>{0, 0, 0, 0});
  CHECK(hilbert_function(ideal_of(s, {"x*z-y^2"}), 5) ==
        std::vector<long>{1, 3, 5, 7, 9, 11});
}

TEST_CASE("hilbert function is independent of the order used for leads") {
  RingPtr s = qring();
  Ideal i = ideal_of(s, {"x^2-y*z", "x*y^2-z^3"});
  // counting standard monomials of either lead ideal gives the same values
  std::vector<long> via_degrevlex = hilbert_function(leading_ideal(i, MonomialOrder::degrevlex()), 8);
  std::vector<long> via_lex = hilbert_function(leading_ideal(i, MonomialOrder::lex()), 8);
  CHECK(via_degrevlex == via_lex);
  CHECK(via_degrevlex == hilbert_function(i, 8));
}

TEST_CASE("first differences of known tables") {
  HilbertProfile p1 = HilbertProfile::from_hilbert({1, 3, 6, 10, 15, 20, 22, 22});
  CHECK(p1.dh() == std::vector<long>{1, 2, 3, 4, 5, 5, 2});
  CHECK(p1.length() == 22);

  HilbertProfile point = HilbertProfile::from_hilbert({1, 1, 1});
  CHECK(point.dh() == std::vector<long>{1});

  HilbertProfile p2 = HilbertProfile::from_hilbert({1, 3, 6, 9, 12, 12});
  CHECK(p2.dh() == std::vector<long>{1, 2, 3, 3, 3});
}

TEST_CASE("profiles reject malformed sequences by property name") {
  CHECK_THROWS_AS(HilbertProfile::from_hilbert({1, 3, 2}), ProfileError);  // decreasing h
  CHECK_THROWS_AS(HilbertProfile::from_dh({2, 1}), ProfileError);         // must start at 1
  CHECK_THROWS_AS(HilbertProfile::from_dh({1, 3}), ProfileError);         // plane cap
  CHECK_THROWS_AS(HilbertProfile::from_dh({1, 2, 1, 2}), ProfileError);   // grows after dipping
  CHECK_THROWS_AS(HilbertProfile::from_dh({1, -1, 0}), ProfileError);     // negative entry
  CHECK(HilbertProfile::from_dh({}).empty());
  CHECK(HilbertProfile::from_dh({1, 2, 3, 4, 5, 6, 6, 2, 1}).length() == 30);
}

TEST_CASE("regularity is the index of the last nonzero difference") {
  CHECK(HilbertProfile::from_dh({1, 2, 3, 4, 5, 6, 6, 2, 1}).regularity() == 8);
  CHECK(HilbertProfile::from_dh({1, 2, 3, 4, 5, 6, 5, 4}).regularity() == 7);
  CHECK(HilbertProfile::from_dh({1}).regularity() == 0);

  HilbertProfile p = HilbertProfile::from_dh({1, 2, 3, 4, 5, 6, 6, 2, 1});
  CHECK(p.hilbert(p.regularity()) == p.length());
  CHECK(p.hilbert(p.regularity() - 1) < p.length());
}

TEST_CASE("h1 sums the tail past the degree") {
  HilbertProfile u =
      HilbertProfile::from_dh({1, 2, 3, 4, 5, 6, 6, 6, 6, 6, 5, 4, 3, 2, 1});
  CHECK(u.h1(13) == 1);
  CHECK(u.h1(14) == 0);
  CHECK(u.h1(u.regularity()) == 0);

  HilbertProfile ones = HilbertProfile::from_dh({1, 1, 1, 1, 1});
  CHECK(ones.h1(2) == 2);  // direct tail sum
}

TEST_CASE("union bounds and length consistency on random point sets") {
  RingPtr s = ternary_ring(Field::prime(32003));
  Rng rng(7);
  RandomConfig cfg;
  cfg.coordinate_bound = 30;
  for (int trial = 0; trial < 5; ++trial) {
    PointSet a = random_points(4, s, cfg, rng, {});
    PointSet b = random_points(3, s, cfg, rng, {});
    PointSet u = PointSet::united(a, b);
    for (int d = 0; d <= 4; ++d) {
      long hu = points_hilbert_at(u, d);
      long ha = points_hilbert_at(a, d);
      long hb = points_hilbert_at(b, d);
      CHECK(hu <= ha + hb);
      CHECK(hu >= std::max(ha, hb));
    }
    // profile length equals the projective degree of the saturated ideal
    HilbertProfile p = point_profile(u.ideal());
    CHECK(p.length() == dim_degree(u.ideal()).degree);
    // the evaluation route and the basis route agree
    for (int d = 0; d <= 4; ++d) CHECK(points_hilbert_at(u, d) == p.hilbert(d));
  }
}
