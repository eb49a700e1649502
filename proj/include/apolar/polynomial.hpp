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

#ifndef APOLAR_POLYNOMIAL_HPP
#define APOLAR_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/ring.hpp"

namespace apolar {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct Term {
  Monomial monomial;
  FieldElement coeff;
};

/// Sparse multivariate polynomial. Terms are kept sorted descending in the
/// ring's monomial order, with no zero coefficients and no duplicates.
class Polynomial {
 public:
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, FieldElement c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, Monomial m, FieldElement c);
  /// Normalizes: sorts, combines duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || terms_[0].monomial.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Lead data with respect to the ring's own order.
  const Monomial& leading_monomial() const;
  const FieldElement& leading_coeff() const;

  FieldElement coeff_of(const Monomial& m) const;  // zero if absent

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const FieldElement& c) const;
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(int n) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Lead coefficient scaled to 1.
  Polynomial monic() const;
  /// Over the rationals, the integer-primitive scalar multiple (positive lead);
  /// over a prime field, the monic normalization.
  Polynomial primitive() const;

  Polynomial derivative(int var) const;

  /// Same polynomial re-sorted into another order on the same variables.
  Polynomial with_order(const RingPtr& target) const;
  /// Transports into a ring containing all used variables, matched by name.
  Polynomial transport(const RingPtr& target) const;
  /// Retags variables positionally (variable i of the source becomes variable
  /// i of the target); variable counts must agree.
  Polynomial reletter(const RingPtr& target) const;

  std::string to_string() const;
  static Polynomial parse(RingPtr ring, const std::string& text);

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// g acting on f as a constant-coefficient differential operator: each
/// variable of g's ring differentiates the same-position variable of f's
/// ring. Requires characteristic zero or greater than deg(f).
Polynomial apolar_act(const Polynomial& g, const Polynomial& f);

/// Coefficient matrix of polys over the degree-d monomial basis of the ring
/// (columns sorted descending in the ring order). One row per polynomial.
ExactMatrix coefficient_matrix(const std::vector<Polynomial>& polys, int degree,
                               const std::vector<Monomial>& basis);

}  // namespace apolar

#endif  // APOLAR_POLYNOMIAL_HPP
