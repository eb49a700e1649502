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

#include "apolar/ideal_ops.hpp"

#include <algorithm>

namespace apolar {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, const std::string& preferred) {
  auto used = [&taken](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  if (!used(preferred)) return preferred;
  for (int i = 0;; ++i) {
    std::string candidate = preferred + std::to_string(i);
    if (!used(candidate)) return candidate;
  }
}

std::vector<std::string> fresh_names(std::vector<std::string> taken, int count) {
  static const char* preferred[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) {
    std::string n = fresh_name(taken, preferred[i % 8]);
    out.push_back(n);
    taken.push_back(n);
  }
  return out;
}

// Retags variable i of the source as variable offset+i of the target ring.
Polynomial shift_into(const Polynomial& f, const RingPtr& target, int offset) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<int> exps(target->nvars(), 0);
    for (int i = 0; i < f.ring()->nvars(); ++i) exps[offset + i] = t.monomial.exponent(i);
    terms.push_back({Monomial::from_exponents(exps), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// Exact quotient f / g; throws if the division leaves a remainder.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  Polynomial rest = f;
  Polynomial q = Polynomial::zero(f.ring());
  while (!rest.is_zero()) {
    if (!g.leading_monomial().divides(rest.leading_monomial()))
      throw std::logic_error("exact division failed");
    Monomial m = rest.leading_monomial() / g.leading_monomial();
    FieldElement c = rest.leading_coeff() / g.leading_coeff();
    q = q + Polynomial::term(f.ring(), m, c);
    rest = rest - g.mul_term(m, c);
  }
  return q;
}

Ideal intersect_many(std::vector<Ideal> parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to intersect");
  while (parts.size() > 1) {
    std::vector<Ideal> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
      next.push_back(intersect_ideals(parts[i], parts[i + 1]));
    if (parts.size() % 2) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts[0];
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_compatible(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g.with_order(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect_ideals(const Ideal& a, const Ideal& b) {
  check_compatible(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (!a.has_generators() || !b.has_generators()) return Ideal::zero(ring);

  std::vector<std::string> aux_vars = ring->vars;
  aux_vars.insert(aux_vars.begin(), fresh_name(ring->vars, "t"));
  RingPtr aux = make_ring(ring->field, std::move(aux_vars), MonomialOrder::block_elim(1));

  Polynomial t = Polynomial::variable(aux, 0);
  Polynomial one_minus_t = Polynomial::constant(aux, aux->field.one()) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.transport(aux));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.transport(aux));

  Ideal graph(aux, std::move(gens));
  Ideal eliminated = eliminate(graph, 1);
  std::vector<Polynomial> out;
  for (const auto& g : eliminated.generators()) out.push_back(g.transport(ring));
  return Ideal(ring, std::move(out));
}

Ideal quotient_by_element(const Ideal& ideal, const Polynomial& g) {
  check_compatible(ideal.ring(), g.ring());
  if (g.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (!ideal.has_generators()) return Ideal::zero(ideal.ring());
  Ideal meet = intersect_ideals(ideal, Ideal(ideal.ring(), {g}));
  std::vector<Polynomial> out;
  for (const auto& h : meet.generators()) {
    if (h.is_zero()) continue;
    out.push_back(exact_divide(h.with_order(ideal.ring()), g.with_order(ideal.ring())));
  }
  return Ideal(ideal.ring(), std::move(out));
}

Ideal quotient(const Ideal& ideal, const Ideal& divisor) {
  check_compatible(ideal.ring(), divisor.ring());
  if (!divisor.has_generators()) throw std::invalid_argument("colon by the zero ideal");
  const auto& gens = divisor.groebner_basis(MonomialOrder::degrevlex());
  std::vector<Ideal> colons;
  colons.reserve(gens.size());
  for (const auto& g : gens)
    colons.push_back(quotient_by_element(ideal, g.with_order(ideal.ring())));
  return intersect_many(std::move(colons));
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

Ideal saturate(const Ideal& ideal, const Ideal& divisor) {
  Ideal current = ideal;
  for (int step = 0; step < 256; ++step) {
    Ideal next = quotient(current, divisor);
    if (ideals_equal(next, current)) return current;
    current = next;
  }
  throw std::runtime_error("saturation did not reach a fixpoint");
}

Ideal saturate(const Ideal& ideal) { return saturate(ideal, irrelevant_ideal(ideal.ring())); }

Ideal kernel_of_map(const RingMap& map) {
  const RingPtr& src = map.source;
  const RingPtr& tgt = map.target;
  std::vector<std::string> names = tgt->vars;
  std::vector<std::string> renamed = fresh_names(names, src->nvars());
  names.insert(names.end(), renamed.begin(), renamed.end());
  RingPtr product =
      make_ring(src->field, std::move(names), MonomialOrder::block_elim(tgt->nvars()));

  std::vector<Polynomial> gens;
  for (int i = 0; i < src->nvars(); ++i) {
    Polynomial var = Polynomial::variable(product, tgt->nvars() + i);
    gens.push_back(var - map.images[i].transport(product));
  }
  Ideal graph(product, std::move(gens));
  Ideal eliminated = eliminate(graph, tgt->nvars());
  std::vector<Polynomial> out;
  for (const auto& g : eliminated.generators()) out.push_back(g.reletter(src));
  return Ideal(src, std::move(out));
}

Ideal map_fiber(const RingMap& map, const Ideal& q, const std::optional<Ideal>& constraint) {
  const RingPtr& src = map.source;
  const RingPtr& tgt = map.target;
  check_compatible(q.ring(), src);

  std::vector<std::string> renamed = fresh_names(tgt->vars, src->nvars());
  std::vector<std::string> names = renamed;
  names.insert(names.end(), tgt->vars.begin(), tgt->vars.end());
  RingPtr product =
      make_ring(src->field, std::move(names), MonomialOrder::block_elim(src->nvars()));

  std::vector<Polynomial> gens;
  for (const auto& g : q.generators()) gens.push_back(shift_into(g, product, 0));
  for (int i = 0; i < src->nvars(); ++i) {
    Polynomial var = Polynomial::variable(product, i);
    gens.push_back(var - map.images[i].transport(product));
  }
  Ideal graph(product, std::move(gens));
  Ideal fiber = eliminate(graph, src->nvars());

  if (constraint) {
    const RingPtr& host = constraint->ring();
    std::vector<Polynomial> lifted = constraint->generators();
    for (const auto& g : fiber.generators()) lifted.push_back(g.transport(host));
    return saturate(Ideal(host, std::move(lifted)));
  }
  return saturate(fiber);
}

Ideal singular_locus(const Ideal& curve) {
  const auto& gb = curve.groebner_basis(MonomialOrder::degrevlex());
  if (gb.size() != 1) throw std::invalid_argument("singular locus requires a principal ideal");
  Polynomial f = gb[0].with_order(curve.ring());
  if (!f.is_homogeneous()) throw std::invalid_argument("singular locus requires a homogeneous curve");
  std::vector<Polynomial> gens{f};
  for (int i = 0; i < curve.ring()->nvars(); ++i) gens.push_back(f.derivative(i));
  return saturate(Ideal(curve.ring(), std::move(gens)));
}

DimDegree dim_degree(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const int n = ring->nvars();
  if (!ideal.has_generators()) return DimDegree{n, 1};

  Ideal sat = saturate(ideal);
  if (is_unit_ideal(sat)) return DimDegree{0, 0};

  std::vector<Monomial> leads;
  int max_lead_deg = 1;
  for (const auto& g : sat.groebner_basis(MonomialOrder::degrevlex())) {
    leads.push_back(g.leading_monomial());
    max_lead_deg = std::max(max_lead_deg, static_cast<int>(g.leading_monomial().deg));
  }

  // Krull dimension of the monomial quotient: the largest coordinate subspace
  // avoiding all lead monomials.
  int dim = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) ++size;
    if (size <= dim) continue;
    bool avoided = true;
    for (const auto& m : leads) {
      bool has_outside = false;
      for (int i = 0; i < n && !has_outside; ++i)
        if (!(mask & (1 << i)) && m.exponent(i) > 0) has_outside = true;
      if (!has_outside) {
        avoided = false;
        break;
      }
    }
    if (avoided) dim = size;
  }

  if (dim <= 1) {
    HilbertProfile p = point_profile(sat, max_lead_deg + 2);
    return DimDegree{1, p.length()};
  }
  if (dim >= n) return DimDegree{n, 1};
  int dmax = 3 * max_lead_deg + 3;
  std::vector<long> h = hilbert_function(sat, dmax);
  return DimDegree{dim, h[dmax] - h[dmax - 1]};
}

namespace {

std::vector<FieldElement> univariate_gcd(std::vector<FieldElement> a, std::vector<FieldElement> b,
                                         const Field& field) {
  auto trim = [](std::vector<FieldElement>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      FieldElement c = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  trim(a);
  if (!a.empty()) {
    FieldElement inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

std::vector<FieldElement> dehomogenize(const Polynomial& f, const Field& field) {
  // coefficients by var-0 exponent, var 1 set to 1
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(f.degree()) + 1, field.zero());
  for (const auto& t : f.terms()) coeffs[t.monomial.exponent(0)] = t.coeff;
  return coeffs;
}

Polynomial homogenize(const std::vector<FieldElement>& u, const RingPtr& ring, int degree) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    terms.push_back({Monomial::from_exponents({static_cast<int>(i), degree - static_cast<int>(i)}),
                     u[i]});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

Polynomial binary_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const RingPtr& ring = a.ring();
  if (ring->nvars() != 2) throw std::invalid_argument("binary gcd needs two variables");
  if (!a.is_homogeneous() || !b.is_homogeneous())
    throw std::invalid_argument("binary gcd needs homogeneous forms");

  auto min_exp = [](const Polynomial& f, int var) {
    int m = 1 << 16;
    for (const auto& t : f.terms()) m = std::min(m, t.monomial.exponent(var));
    return m;
  };
  int a0 = min_exp(a, 0), a1 = min_exp(a, 1);
  int b0 = min_exp(b, 0), b1 = min_exp(b, 1);
  Monomial strip_a = Monomial::from_exponents({a0, a1});
  Monomial strip_b = Monomial::from_exponents({b0, b1});
  std::vector<Term> ta, tb;
  for (const auto& t : a.terms()) ta.push_back({t.monomial / strip_a, t.coeff});
  for (const auto& t : b.terms()) tb.push_back({t.monomial / strip_b, t.coeff});
  Polynomial core_a = Polynomial::from_terms(ring, std::move(ta));
  Polynomial core_b = Polynomial::from_terms(ring, std::move(tb));

  std::vector<FieldElement> g = univariate_gcd(dehomogenize(core_a, ring->field),
                                               dehomogenize(core_b, ring->field), ring->field);
  int gdeg = static_cast<int>(g.size()) - 1;
  Polynomial ghom = homogenize(g, ring, gdeg);
  Monomial shared = Monomial::from_exponents({std::min(a0, b0), std::min(a1, b1)});
  return ghom.mul_term(shared, ring->field.one()).monic();
}

bool is_radical_collinear(const Ideal& ideal, const Polynomial& line) {
  const RingPtr& ring = ideal.ring();
  check_compatible(line.ring(), ring);
  if (line.degree() != 1 || !line.is_homogeneous())
    throw std::invalid_argument("restriction locus must be a linear form");
  if (!contains(ideal, line))
    throw std::invalid_argument("ideal does not contain the line");

  int pivot = -1;
  for (int i = 0; i < ring->nvars() && pivot < 0; ++i)
    if (!line.coeff_of(Monomial::variable(i, ring->nvars())).is_zero()) pivot = i;

  std::vector<std::string> rest_names;
  for (int i = 0; i < ring->nvars(); ++i)
    if (i != pivot) rest_names.push_back(ring->vars[i]);
  RingPtr restricted = make_ring(ring->field, rest_names);

  // pivot variable expressed from the line equation
  FieldElement c = line.coeff_of(Monomial::variable(pivot, ring->nvars()));
  Polynomial pivot_image = Polynomial::zero(restricted);
  for (int i = 0; i < ring->nvars(); ++i) {
    if (i == pivot) continue;
    FieldElement ci = line.coeff_of(Monomial::variable(i, ring->nvars()));
    if (ci.is_zero()) continue;
    int j = restricted->var_index(ring->vars[i]);
    pivot_image = pivot_image - Polynomial::variable(restricted, j).scale(ci / c);
  }
  std::vector<Polynomial> images;
  for (int i = 0; i < ring->nvars(); ++i) {
    if (i == pivot) {
      images.push_back(pivot_image);
    } else {
      images.push_back(Polynomial::variable(restricted, restricted->var_index(ring->vars[i])));
    }
  }
  RingMap restrict(ring, restricted, std::move(images));

  Polynomial form = Polynomial::zero(restricted);
  bool first = true;
  for (const auto& g : ideal.groebner_basis(MonomialOrder::degrevlex())) {
    Polynomial r = restrict.apply(g.with_order(ring));
    if (r.is_zero()) continue;
    form = first ? r.monic() : binary_gcd(form, r);
    first = false;
  }
  if (first) throw std::invalid_argument("ideal restricts to zero on the line");
  if (form.is_constant()) return true;  // empty subscheme of the line

  const std::uint64_t p = ring->field.characteristic();
  if (p != 0 && static_cast<long>(p) <= form.degree())
    throw CharacteristicError("characteristic too small for the squarefree test");

  auto min_exp = [](const Polynomial& f, int var) {
    int m = 1 << 16;
    for (const auto& t : f.terms()) m = std::min(m, t.monomial.exponent(var));
    return m;
  };
  int v0 = min_exp(form, 0), v1 = min_exp(form, 1);
  if (v0 >= 2 || v1 >= 2) return false;
  std::vector<Term> stripped;
  Monomial strip = Monomial::from_exponents({v0, v1});
  for (const auto& t : form.terms()) stripped.push_back({t.monomial / strip, t.coeff});
  Polynomial core = Polynomial::from_terms(restricted, std::move(stripped));
  if (core.is_constant()) return true;

  std::vector<FieldElement> u = dehomogenize(core, ring->field);
  std::vector<FieldElement> du;
  for (std::size_t i = 1; i < u.size(); ++i)
    du.push_back(u[i] * ring->field.from_int(static_cast<long>(i)));
  std::vector<FieldElement> g = univariate_gcd(u, du, ring->field);
  return g.size() <= 1;
}

std::vector<Polynomial> degree_basis(const Ideal& ideal, int d) {
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> rows;
  for (const auto& g : ideal.groebner_basis(MonomialOrder::degrevlex())) {
    if (!g.is_homogeneous()) throw std::invalid_argument("degree basis needs a homogeneous ideal");
    int dg = g.degree();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(ring->nvars(), d - dg, ring->order))
      rows.push_back(g.with_order(ring).mul_term(m, ring->field.one()));
  }
  if (rows.empty()) return {};

  std::vector<Monomial> basis = monomials_of_degree(ring->nvars(), d, ring->order);
  ExactMatrix mat = coefficient_matrix(rows, d, basis);
  RrefResult r = rref(mat);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!r.matrix.at(i, j).is_zero()) terms.push_back({basis[j], r.matrix.at(i, j)});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

long degree_dimension(const Ideal& ideal, int d) {
  if (!ideal.has_generators()) return 0;
  std::vector<long> h = hilbert_function(ideal, d);
  return monomial_count(ideal.ring()->nvars(), d) - h[d];
}

}  // namespace apolar
