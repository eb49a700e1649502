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

#include "apolar/matrix.hpp"
#include "apolar/points.hpp"

using namespace apolar;

TEST_CASE("rational scalars stay in lowest terms with positive denominator") {
  Field q = Field::rationals();
  FieldElement a = q.from_fraction(4, -6);
  CHECK(a.to_string() == "-2/3");
  CHECK((a + q.from_fraction(2, 3)).is_zero());
  CHECK((q.from_fraction(1, 2) * q.from_int(2)).is_one());
  CHECK((q.from_fraction(7, 3) / q.from_fraction(7, 3)).is_one());
  CHECK(q.element_from_string("10/4").to_string() == "5/2");
}

TEST_CASE("prime field residues live in [0, p)") {
  Field f = Field::prime(32003);
  CHECK(f.from_int(-1).residue() == 32002);
  CHECK((f.from_int(32003)).is_zero());
  FieldElement x = f.from_int(12345);
  CHECK((x * x.inverse()).is_one());
  CHECK((f.from_fraction(3, 2) * f.from_int(2)).residue() == 3);
  CHECK_THROWS_AS(f.from_int(0).inverse(), std::domain_error);
}

TEST_CASE("field constructors reject bad characteristics") {
  CHECK_THROWS_AS(Field::prime(32004), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK(Field::parse("fp:101").characteristic() == 101);
  CHECK(Field::parse("qq").is_rationals());
  CHECK_THROWS_AS(Field::parse("fp:abc"), std::invalid_argument);
}

TEST_CASE("mixed fields are rejected") {
  FieldElement a = Field::rationals().from_int(1);
  FieldElement b = Field::prime(7).from_int(1);
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  CHECK_THROWS_AS(Field::prime(7).from_int(1) * Field::prime(11).from_int(1),
                  FieldMismatchError);
}

namespace {

ExactMatrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                      const std::vector<long>& entries) {
  std::vector<FieldElement> e;
  e.reserve(entries.size());
  for (long v : entries) e.push_back(field.from_int(v));
  return ExactMatrix(field, rows, cols, std::move(e));
}

}  // namespace

TEST_CASE("rref identity matrix") {
  Field q = Field::rationals();
  RrefResult r = rref(from_ints(q, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(r.rank == 3);
  CHECK(r.kernel.empty());
}

TEST_CASE("rref zero matrix") {
  Field q = Field::rationals();
  RrefResult r = rref(ExactMatrix(q, 2, 3));
  CHECK(r.rank == 0);
  CHECK(r.kernel.size() == 3);
}

TEST_CASE("rref rank-one matrix with canonical kernel") {
  // hand elimination: second row is twice the first, so rref is
  // [[1,2,3],[0,0,0]] and the kernel basis is (-2,1,0), (-3,0,1)
  Field q = Field::rationals();
  RrefResult r = rref(from_ints(q, 2, 3, {1, 2, 3, 2, 4, 6}));
  CHECK(r.rank == 1);
  REQUIRE(r.kernel.size() == 2);
  CHECK(r.matrix == from_ints(q, 2, 3, {1, 2, 3, 0, 0, 0}));
  CHECK(r.kernel[0][0] == q.from_int(-2));
  CHECK(r.kernel[0][1] == q.from_int(1));
  CHECK(r.kernel[0][2] == q.from_int(0));
  CHECK(r.kernel[1][0] == q.from_int(-3));
  CHECK(r.kernel[1][1] == q.from_int(0));
  CHECK(r.kernel[1][2] == q.from_int(1));
}

TEST_CASE("rref properties on random rational matrices") {
  Field q = Field::rationals();
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 1 + rng.uniform(0, 4);
    std::size_t cols = 1 + rng.uniform(0, 4);
    std::vector<long> entries;
    for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(rng.uniform(-6, 6));
    ExactMatrix m = from_ints(q, rows, cols, entries);

    RrefResult r = rref(m);
    CHECK(r.rank == rref(m.transpose()).rank);

    for (const auto& v : r.kernel) {
      for (std::size_t i = 0; i < rows; ++i) {
        FieldElement dot = q.zero();
        for (std::size_t j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
        CHECK(dot.is_zero());
      }
    }

    RrefResult again = rref(r.matrix);
    CHECK(again.matrix == r.matrix);
    CHECK(again.rank == r.rank);
  }
}

TEST_CASE("rref agrees across fields on a full-rank integer matrix") {
  Field q = Field::rationals();
  Field f = Field::prime(32003);
  std::vector<long> entries = {3, 1, 4, 1, 5, 9, 2, 6, 5};
  CHECK(rref(from_ints(q, 3, 3, entries)).rank == rref(from_ints(f, 3, 3, entries)).rank);
}

TEST_CASE("solve_linear finds the particular solution or reports inconsistency") {
  Field q = Field::rationals();
  ExactMatrix a = from_ints(q, 2, 2, {1, 1, 1, -1});
  auto x = solve_linear(a, {q.from_int(3), q.from_int(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == q.from_int(2));
  CHECK((*x)[1] == q.from_int(1));

  ExactMatrix bad = from_ints(q, 2, 1, {1, 2});
  CHECK_FALSE(solve_linear(bad, {q.from_int(1), q.from_int(3)}).has_value());
}
