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

#include "apolar/apolarity.hpp"

#include <algorithm>

namespace apolar {

namespace {

void check_act_characteristic(const Polynomial& f) {
  const std::uint64_t p = f.ring()->field.characteristic();
  if (p != 0 && static_cast<long>(p) <= f.degree())
    throw CharacteristicError("field characteristic must exceed the form degree");
}

// factorial of the exponent tuple: the pairing of a monomial with itself
FieldElement monomial_factorial(const Monomial& m, const Field& field) {
  FieldElement v = field.one();
  for (int i = 0; i < m.nvars; ++i)
    for (int k = 2; k <= m.exponent(i); ++k) v *= field.from_int(k);
  return v;
}

}  // namespace

CatalecticantMatrix catalecticant(const Polynomial& f, int e) {
  if (f.is_zero()) throw std::invalid_argument("catalecticant of the zero form");
  if (!f.is_homogeneous()) throw std::invalid_argument("catalecticant needs a homogeneous form");
  const int d = f.degree();
  if (e < 0 || e > d) throw std::invalid_argument("operator degree out of range");
  check_act_characteristic(f);

  const RingPtr& ring = f.ring();
  RingPtr dual = dual_ring(ring);
  CatalecticantMatrix cat{e, d, ExactMatrix(ring->field, 1, 1), {}, {}};
  cat.row_monomials = monomials_of_degree(ring->nvars(), d - e, ring->order);
  cat.col_monomials = monomials_of_degree(ring->nvars(), e, dual->order);
  ExactMatrix m(ring->field, cat.row_monomials.size(), cat.col_monomials.size());
  for (std::size_t j = 0; j < cat.col_monomials.size(); ++j) {
    Polynomial g = Polynomial::term(dual, cat.col_monomials[j], ring->field.one());
    Polynomial gf = apolar_act(g, f);
    for (const auto& t : gf.terms()) {
      auto it = std::find(cat.row_monomials.begin(), cat.row_monomials.end(), t.monomial);
      m.set(static_cast<std::size_t>(it - cat.row_monomials.begin()), j, t.coeff);
    }
  }
  cat.matrix = std::move(m);
  return cat;
}

long catalecticant_rank(const Polynomial& f, int e) {
  return static_cast<long>(matrix_rank(catalecticant(f, e).matrix));
}

Ideal apolar_ideal(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("apolar ideal needs a nonzero homogeneous form");
  const int d = f.degree();
  const RingPtr& ring = f.ring();
  RingPtr dual = dual_ring(ring);

  std::vector<Polynomial> gens;
  for (int e = 1; e <= d; ++e) {
    CatalecticantMatrix cat = catalecticant(f, e);
    RrefResult r = rref(cat.matrix);
    for (const auto& v : r.kernel) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) terms.push_back({cat.col_monomials[j], v[j]});
      gens.push_back(Polynomial::from_terms(dual, std::move(terms)));
    }
  }
  for (const auto& m : monomials_of_degree(dual->nvars(), d + 1, dual->order))
    gens.push_back(Polynomial::term(dual, m, dual->field.one()));
  return Ideal(dual, std::move(gens));
}

bool is_apolar(const Ideal& ideal, const Polynomial& f) {
  for (const auto& g : ideal.generators()) {
    if (!apolar_act(g, f).is_zero()) return false;
  }
  return true;
}

long span_intersection_dim(const PointSet& a, const PointSet& b, int d) {
  if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("span of an empty point set");
  PointSet meet = PointSet::intersection(a, b);
  PointSet join = PointSet::united(a, b);
  long h = points_hilbert_at(join, d);
  long h1 = join.size() - h;
  return meet.size() - 1 + h1;
}

SpanKernel common_apolar_form(const Ideal& i1, const Ideal& i2, int d) {
  check_compatible(i1.ring(), i2.ring());
  const RingPtr& ring = i1.ring();
  const Field& field = ring->field;
  if (field.characteristic() != 0 && static_cast<long>(field.characteristic()) <= d)
    throw CharacteristicError("field characteristic must exceed the form degree");

  std::vector<Polynomial> rows = degree_basis(i1, d);
  std::vector<Polynomial> rows2 = degree_basis(i2, d);
  rows.insert(rows.end(), rows2.begin(), rows2.end());

  std::vector<Monomial> basis = monomials_of_degree(ring->nvars(), d, ring->order);
  if (rows.empty()) {
    // no conditions: the kernel is all of the degree-d space
    SpanKernel k;
    k.dim = static_cast<int>(basis.size());
    for (const auto& m : basis) k.basis.push_back(Polynomial::term(ring, m, field.one()));
    return k;
  }

  // pairing of a row g against the monomial m is coeff_m(g) * m!
  ExactMatrix pairing(field, rows.size(), basis.size());
  std::vector<FieldElement> factorials;
  factorials.reserve(basis.size());
  for (const auto& m : basis) factorials.push_back(monomial_factorial(m, field));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& t : rows[i].terms()) {
      auto it = std::find(basis.begin(), basis.end(), t.monomial);
      std::size_t j = static_cast<std::size_t>(it - basis.begin());
      pairing.set(i, j, t.coeff * factorials[j]);
    }
  }

  RrefResult r = rref(pairing);
  SpanKernel k;
  k.dim = static_cast<int>(r.kernel.size());
  for (const auto& v : r.kernel) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) terms.push_back({basis[j], v[j]});
    k.basis.push_back(Polynomial::from_terms(ring, std::move(terms)).monic());
  }
  return k;
}

std::optional<std::vector<FieldElement>> decompose_on_points(const Polynomial& f,
                                                             const PointSet& a) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("decomposition needs a nonzero homogeneous form");
  const int d = f.degree();
  const RingPtr& ring = f.ring();
  check_compatible(ring, a.ring());
  if (a.size() == 0) return std::nullopt;

  std::vector<Monomial> basis = monomials_of_degree(ring->nvars(), d, ring->order);
  ExactMatrix m(ring->field, basis.size(), a.size());
  for (long j = 0; j < a.size(); ++j) {
    Polynomial power = linear_form_of_point(ring, a.points()[j]).pow(d);
    for (const auto& t : power.terms()) {
      auto it = std::find(basis.begin(), basis.end(), t.monomial);
      m.set(static_cast<std::size_t>(it - basis.begin()), j, t.coeff);
    }
  }
  std::vector<FieldElement> rhs;
  rhs.reserve(basis.size());
  for (const auto& b : basis) rhs.push_back(f.coeff_of(b));
  return solve_linear(m, rhs);
}

}  // namespace apolar
