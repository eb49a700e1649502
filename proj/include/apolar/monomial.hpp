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

#ifndef APOLAR_MONOMIAL_HPP
#define APOLAR_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace apolar {

inline constexpr int kMaxVars = 8;

/// Exponent vector with cached total degree.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint8_t nvars = 0;
  std::uint16_t deg = 0;

  static Monomial one(int nvars);
  static Monomial variable(int index, int nvars);
  static Monomial from_exponents(const std::vector<int>& exps);

  int exponent(int i) const { return e[i]; }

  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const;

  Monomial operator*(const Monomial& m) const;
  /// Exact quotient; caller guarantees m | *this.
  Monomial operator/(const Monomial& m) const;

  bool operator==(const Monomial& m) const { return nvars == m.nvars && e == m.e; }
  bool operator!=(const Monomial& m) const { return !(*this == m); }
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Total order on monomials of a fixed ring.
///
/// Block elimination of the first k variables compares that block by degree
/// then lexicographically, and breaks ties by degrevlex on the rest, so a
/// basis element free of the block in its lead term is free of it entirely.
struct MonomialOrder {
  enum class Kind { DegRevLex, Lex, Block };
  Kind kind = Kind::DegRevLex;
  int block = 0;  // leading-variable count for Kind::Block

  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block_elim(int k) { return {Kind::Block, k}; }

  /// Positive if a > b, negative if a < b, zero if equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  std::string to_string() const;
  static MonomialOrder parse(const std::string& text);
};

/// All monomials of the given total degree, sorted descending in the order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, const MonomialOrder& order);

/// Number of degree-d monomials in nvars variables.
long monomial_count(int nvars, int degree);

}  // namespace apolar

#endif  // APOLAR_MONOMIAL_HPP
