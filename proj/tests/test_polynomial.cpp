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

#include "apolar/points.hpp"
#include "apolar/ring_map.hpp"

using namespace apolar;

namespace {

RingPtr qring() { return ternary_ring(Field::rationals()); }

Polynomial P(const RingPtr& r, const std::string& text) { return Polynomial::parse(r, text); }

Polynomial random_poly(const RingPtr& r, int degree, Rng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(3, degree, r->order)) {
    long c = rng.uniform(-4, 4);
    if (c != 0) terms.push_back({m, r->field.from_int(c)});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("arithmetic examples") {
  RingPtr s = qring();
  CHECK(P(s, "x+y") + P(s, "x-y") == P(s, "2*x"));
  CHECK(P(s, "x+y") * P(s, "x-y") == P(s, "x^2-y^2"));
  // multinomial expansion by hand: all squares plus doubled cross terms
  Polynomial sq = P(s, "x+y+z") * P(s, "x+y+z");
  CHECK(sq.terms().size() == 6);
  CHECK(sq == P(s, "x^2+y^2+z^2+2*x*y+2*x*z+2*y*z"));
  CHECK((P(s, "x") - P(s, "x")).is_zero());
}

TEST_CASE("ring mismatch is rejected") {
  RingPtr s = qring();
  RingPtr f = ternary_ring(Field::prime(7));
  CHECK_THROWS_AS(P(s, "x") + Polynomial::variable(f, 0), RingMismatchError);
}

TEST_CASE("differentiation action on monomials") {
  RingPtr s = qring();
  RingPtr r = dual_ring(s);
  CHECK(apolar_act(P(r, "u"), P(s, "x^10")) == P(s, "10*x^9"));
  CHECK(apolar_act(P(r, "u^10"), P(s, "x^10")) == P(s, "3628800"));  // 10!
  CHECK(apolar_act(P(r, "u*v"), P(s, "x^2*y")) == P(s, "2*x"));
  CHECK(apolar_act(P(r, "w"), P(s, "x^2*y")).is_zero());
}

TEST_CASE("differentiation needs characteristic beyond the degree") {
  RingPtr s = ternary_ring(Field::prime(7));
  RingPtr r = dual_ring(s);
  CHECK_THROWS_AS(apolar_act(Polynomial::parse(r, "u"), Polynomial::parse(s, "x^10")),
                  CharacteristicError);
  CHECK(apolar_act(Polynomial::parse(r, "u"), Polynomial::parse(s, "x^3")) ==
        Polynomial::parse(s, "3*x^2"));
}

TEST_CASE("action is bilinear and multiplicative") {
  RingPtr s = qring();
  RingPtr r = dual_ring(s);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f1 = random_poly(s, 3, rng), f2 = random_poly(s, 3, rng);
    Polynomial g1 = random_poly(r, 1, rng), g2 = random_poly(r, 2, rng);
    CHECK(apolar_act(g1 + g2.scale(r->field.one()), f1) ==
          apolar_act(g1, f1) + apolar_act(g2, f1));
    CHECK(apolar_act(g1, f1 + f2) == apolar_act(g1, f1) + apolar_act(g1, f2));
    Polynomial f = random_poly(s, 6, rng);
    CHECK(apolar_act(g1 * g2, f) == apolar_act(g1, apolar_act(g2, f)));
  }
}

TEST_CASE("substitution maps") {
  RingPtr s = qring();
  RingMap id = RingMap::identity(s);
  CHECK(id.apply(P(s, "x^2+y")) == P(s, "x^2+y"));

  RingPtr st = make_ring(Field::rationals(), {"s", "t"});
  RingMap veronese(s, st,
                   {P(st, "s^2"), P(st, "s*t"), P(st, "t^2")});
  CHECK(veronese.apply(P(s, "x*z-y^2")).is_zero());

  RingPtr yz = make_ring(Field::rationals(), {"y", "z"});
  RingMap drop_x(s, yz, {Polynomial::zero(yz), P(yz, "y"), P(yz, "z")});
  CHECK(drop_x.apply(P(s, "x^2*z+y^3-x*y*z")) == Polynomial::parse(yz, "y^3"));
}

TEST_CASE("parser handles the grammar and the printer is canonical") {
  RingPtr s = qring();
  Polynomial f = P(s, "3/2*x^2*y - z^3");
  CHECK(f.terms().size() == 2);
  CHECK(f.leading_monomial() == Monomial::from_exponents({2, 1, 0}));
  CHECK(f.leading_coeff() == s->field.from_fraction(3, 2));
  CHECK(f.to_string() == "3/2*x^2*y-z^3");

  CHECK(P(s, "x - x").to_string() == "0");
  CHECK((P(s, "x+y") * P(s, "x+y")).to_string() == "x^2+2*x*y+y^2");
  CHECK(P(s, "  x ^ 2 + 1/3") == P(s, "x^2+1/3"));
  CHECK(P(s, "-x+2").to_string() == "-x+2");
  CHECK(P(s, "5") == Polynomial::constant(s, s->field.from_int(5)));
}

TEST_CASE("parser reports positions for syntax errors") {
  RingPtr s = qring();
  CHECK_THROWS_AS(P(s, "x + + y"), ParseError);
  CHECK_THROWS_AS(P(s, "q^2"), ParseError);
  try {
    P(s, "x*q");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("malformed input fails with a parse error, never anything else") {
  RingPtr s = qring();
  Rng rng(2024);
  const std::string alphabet = "xyz0123456789+-*/^ qw_";
  for (int trial = 0; trial < 400; ++trial) {
    std::string text;
    int len = 1 + static_cast<int>(rng.uniform(0, 14));
    for (int i = 0; i < len; ++i)
      text += alphabet[static_cast<std::size_t>(rng.uniform(0, alphabet.size() - 1))];
    try {
      Polynomial f = Polynomial::parse(s, text);
      CHECK(Polynomial::parse(s, f.to_string()) == f);  // accepted input round-trips
    } catch (const ParseError&) {
      // rejected input is fine; any other escape is not
    }
  }
}

TEST_CASE("print-parse round trip on random polynomials") {
  Rng rng(23);
  for (const Field& field : {Field::rationals(), Field::prime(32003)}) {
    RingPtr s = ternary_ring(field);
    for (int trial = 0; trial < 25; ++trial) {
      Polynomial f = random_poly(s, 1 + rng.uniform(0, 4), rng);
      if (f.is_zero()) continue;
      CHECK(Polynomial::parse(s, f.to_string()) == f);
    }
  }
}

TEST_CASE("monomial orders are total, multiplicative, graded-compatible") {
  std::vector<MonomialOrder> orders = {MonomialOrder::degrevlex(), MonomialOrder::lex(),
                                       MonomialOrder::block_elim(1)};
  std::vector<Monomial> all;
  for (int d = 0; d <= 5; ++d)
    for (const auto& m : monomials_of_degree(3, d, MonomialOrder::degrevlex()))
      all.push_back(m);

  for (const auto& ord : orders) {
    for (const auto& a : all) {
      CHECK(ord.compare(a, a) == 0);
      for (const auto& b : all) {
        int ab = ord.compare(a, b);
        CHECK(ab == -ord.compare(b, a));
        if (a != b) CHECK(ab != 0);
        // multiplicative on a sample of multipliers
        if (ab < 0) {
          for (const auto& m : monomials_of_degree(3, 2, MonomialOrder::degrevlex()))
            CHECK(ord.compare(a * m, b * m) < 0);
        }
      }
      // well-founded on fixed degree: 1 is minimal among degree-0
      if (!a.is_one()) CHECK(ord.compare(a, Monomial::one(3)) > 0);
    }
  }
}

TEST_CASE("degrevlex tie-break favors the smaller trailing exponent") {
  MonomialOrder ord = MonomialOrder::degrevlex();
  Monomial x2y = Monomial::from_exponents({2, 1, 0});
  Monomial z3 = Monomial::from_exponents({0, 0, 3});
  Monomial xz = Monomial::from_exponents({1, 0, 1});
  Monomial y2 = Monomial::from_exponents({0, 2, 0});
  CHECK(ord.greater(x2y, z3));
  CHECK(ord.greater(y2, xz));
}

TEST_CASE("block elimination order makes the first block dominant") {
  MonomialOrder ord = MonomialOrder::block_elim(1);
  Monomial t = Monomial::from_exponents({1, 0, 0, 0});
  Monomial x5 = Monomial::from_exponents({0, 5, 0, 0});
  CHECK(ord.greater(t, x5));  // any t-multiple beats any t-free monomial
}
