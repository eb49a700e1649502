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

#include "apolar/groebner.hpp"

#include <algorithm>
#include <atomic>

namespace apolar {

namespace {

std::atomic<long> g_budget{1000000};

struct Pair {
  int i, j;
  Monomial lcm;
  bool alive = true;
};

// Selection key for the normal strategy: lowest lcm degree first, then the
// order on lcms, then indices, for deterministic runs.
bool pair_before(const Pair& a, const Pair& b, const MonomialOrder& ord) {
  if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
  int c = ord.compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// Gebauer-Moeller update: prunes the surviving old pairs with the chain
// criterion, filters the new pairs by lcm divisibility and duplicate lcms,
// and drops pairs with coprime lead terms.
void update_pairs(std::vector<Pair>& pairs, const std::vector<Polynomial>& basis, int t) {
  const Monomial& lt_t = basis[t].leading_monomial();

  std::vector<Pair> fresh;
  fresh.reserve(t);
  for (int i = 0; i < t; ++i)
    fresh.push_back(Pair{i, t, lcm(basis[i].leading_monomial(), lt_t)});

  // chain criterion on old pairs
  for (auto& p : pairs) {
    if (!p.alive) continue;
    if (!lt_t.divides(p.lcm)) continue;
    if (fresh[p.i].lcm != p.lcm && fresh[p.j].lcm != p.lcm) p.alive = false;
  }

  // strict-divisor filter among the new pairs
  std::vector<bool> keep(fresh.size(), true);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || !keep[b]) continue;
      if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm)) {
        keep[a] = false;
        break;
      }
    }
  }

  // among equal lcms keep a single representative, none if some
  // representative has coprime lead terms
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    bool coprime_class = basis[fresh[a].i].leading_monomial().coprime(lt_t);
    for (std::size_t b = a + 1; b < fresh.size(); ++b) {
      if (!keep[b] || fresh[b].lcm != fresh[a].lcm) continue;
      keep[b] = false;
      if (basis[fresh[b].i].leading_monomial().coprime(lt_t)) coprime_class = true;
    }
    if (coprime_class) keep[a] = false;
  }

  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (keep[a]) pairs.push_back(fresh[a]);
}

std::vector<Polynomial> sorted_by_lead(std::vector<Polynomial> polys) {
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.ring()->order.less(a.leading_monomial(), b.leading_monomial());
  });
  return polys;
}

}  // namespace

void set_spair_budget(long budget) { g_budget.store(budget > 0 ? budget : 1000000); }

long spair_budget() { return g_budget.load(); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  if (f.ring()->field.is_rationals()) {
    // fraction-free form: coefficients stay integral for integral inputs
    mpz_class a = f.leading_coeff().rational().get_num() * g.leading_coeff().rational().get_den();
    mpz_class b = g.leading_coeff().rational().get_num() * f.leading_coeff().rational().get_den();
    mpz_class d = gcd(a, b);
    const Field& field = f.ring()->field;
    Polynomial fa = f.mul_term(l / f.leading_monomial(), field.from_rational(mpq_class(b / d)));
    Polynomial fb = g.mul_term(l / g.leading_monomial(), field.from_rational(mpq_class(a / d)));
    return fa - fb;
  }
  Polynomial a = f.mul_term(l / f.leading_monomial(), f.leading_coeff().inverse());
  Polynomial b = g.mul_term(l / g.leading_monomial(), g.leading_coeff().inverse());
  return a - b;
}

namespace {

// One reduction step, in place: rest[head..] becomes
// rest_scale * rest[head+1..] + g_factor * shift * tail(g), merged into a
// scratch buffer that is swapped back. The lead cancels by construction and
// is never emitted.
void merge_step(std::vector<Term>& rest, std::size_t head, const Polynomial& g,
                const Monomial& shift, const FieldElement* rest_scale,
                const FieldElement& g_factor, const MonomialOrder& ord,
                std::vector<Term>& scratch) {
  const auto& gt = g.terms();
  scratch.clear();
  std::size_t i = head + 1, j = 1;
  while (i < rest.size() && j < gt.size()) {
    Monomial mg = gt[j].monomial * shift;
    int c = ord.compare(rest[i].monomial, mg);
    if (c > 0) {
      scratch.push_back({rest[i].monomial,
                         rest_scale ? rest[i].coeff * *rest_scale : rest[i].coeff});
      ++i;
    } else if (c < 0) {
      scratch.push_back({mg, gt[j].coeff * g_factor});
      ++j;
    } else {
      FieldElement v = rest_scale ? rest[i].coeff * *rest_scale : rest[i].coeff;
      v += gt[j].coeff * g_factor;
      if (!v.is_zero()) scratch.push_back({rest[i].monomial, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < rest.size(); ++i)
    scratch.push_back({rest[i].monomial,
                       rest_scale ? rest[i].coeff * *rest_scale : rest[i].coeff});
  for (; j < gt.size(); ++j) scratch.push_back({gt[j].monomial * shift, gt[j].coeff * g_factor});
  std::swap(rest, scratch);
}

const Polynomial* find_reducer(const std::vector<const Polynomial*>& basis, const Monomial& lm) {
  for (const Polynomial* g : basis) {
    if (!g->is_zero() && g->leading_monomial().divides(lm)) return g;
  }
  return nullptr;
}

// Pseudo-division path for the rationals: clears denominators up front,
// cross-multiplies by integer factors instead of dividing, and rescales once
// at the end. Keeps every intermediate coefficient an integer, so mpq
// canonicalization stays trivial.
Polynomial reduce_full_rational(const Polynomial& f, const std::vector<Polynomial>& basis,
                                bool basis_is_primitive) {
  const Field& field = f.ring()->field;
  std::vector<Polynomial> owned;
  std::vector<const Polynomial*> prim;
  prim.reserve(basis.size());
  if (basis_is_primitive) {
    for (const auto& g : basis) prim.push_back(&g);
  } else {
    owned.reserve(basis.size());
    for (const auto& g : basis) owned.push_back(g.primitive());
    for (const auto& g : owned) prim.push_back(&g);
  }

  mpz_class denom_lcm = 1;
  for (const auto& t : f.terms())
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            t.coeff.rational().get_den().get_mpz_t());
  const bool integral = denom_lcm == 1;
  std::vector<Term> rest;
  rest.reserve(f.terms().size());
  FieldElement clear = field.from_rational(mpq_class(denom_lcm));
  for (const auto& t : f.terms())
    rest.push_back({t.monomial, integral ? t.coeff : t.coeff * clear});
  mpq_class lambda(denom_lcm);

  const MonomialOrder& ord = f.ring()->order;
  std::vector<Term> remainder;
  std::vector<Term> scratch;
  std::size_t head = 0;
  long steps_since_strip = 0;
  while (head < rest.size()) {
    const Polynomial* reducer = find_reducer(prim, rest[head].monomial);
    if (!reducer) {
      remainder.push_back(rest[head]);
      ++head;
      continue;
    }
    mpz_class a = rest[head].coeff.rational().get_num();
    const mpz_class& b = reducer->leading_coeff().rational().get_num();
    mpz_class d = gcd(a, b);
    mpz_class scale = b / d;
    FieldElement rest_scale = field.one();
    bool do_scale = scale != 1;
    if (do_scale) {
      rest_scale = field.from_rational(mpq_class(scale));
      for (auto& t : remainder) t.coeff *= rest_scale;
      lambda *= scale;
    }
    FieldElement g_factor = field.from_rational(mpq_class(mpz_class(-(a / d))));
    merge_step(rest, head, *reducer, rest[head].monomial / reducer->leading_monomial(),
               do_scale ? &rest_scale : nullptr, g_factor, ord, scratch);
    head = 0;
    if (++steps_since_strip >= 16) {
      steps_since_strip = 0;
      mpz_class content = 0;
      for (const auto& t : rest)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                t.coeff.rational().get_num().get_mpz_t());
      for (const auto& t : remainder)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                t.coeff.rational().get_num().get_mpz_t());
      if (content > 1) {
        FieldElement inv = field.from_rational(mpq_class(mpz_class(1), content));
        for (auto& t : rest) t.coeff *= inv;
        for (auto& t : remainder) t.coeff *= inv;
        lambda /= content;
      }
    }
  }
  Polynomial out = Polynomial::from_terms(f.ring(), std::move(remainder));
  if (lambda == 1) return out;
  mpq_class back(1);
  back /= lambda;
  return out.scale(field.from_rational(back));
}

Polynomial reduce_full_impl(const Polynomial& f, const std::vector<Polynomial>& basis,
                            bool basis_is_primitive) {
  if (f.ring()->field.is_rationals())
    return reduce_full_rational(f, basis, basis_is_primitive);

  std::vector<const Polynomial*> ptrs;
  ptrs.reserve(basis.size());
  for (const auto& g : basis) ptrs.push_back(&g);

  const MonomialOrder& ord = f.ring()->order;
  std::vector<Term> rest(f.terms().begin(), f.terms().end());
  std::vector<Term> remainder;
  std::vector<Term> scratch;
  std::size_t head = 0;
  while (head < rest.size()) {
    const Polynomial* reducer = find_reducer(ptrs, rest[head].monomial);
    if (!reducer) {
      remainder.push_back(rest[head]);
      ++head;
      continue;
    }
    FieldElement g_factor = -(rest[head].coeff / reducer->leading_coeff());
    merge_step(rest, head, *reducer, rest[head].monomial / reducer->leading_monomial(), nullptr,
               g_factor, ord, scratch);
    head = 0;
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

}  // namespace

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return reduce_full_impl(f, basis, false);
}

std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord, long budget) {
  if (budget <= 0) budget = g_budget.load();
  const RingPtr work_ring = ring_with_order(ring, ord);

  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(g.with_order(work_ring).primitive());
  }
  if (basis.empty()) return {};

  std::vector<Pair> pairs;
  for (int t = 0; t < static_cast<int>(basis.size()); ++t) update_pairs(pairs, basis, t);

  long used = 0;
  while (true) {
    int best = -1;
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
      if (!pairs[k].alive) continue;
      if (best < 0 || pair_before(pairs[k], pairs[best], ord)) best = k;
    }
    if (best < 0) break;
    pairs[best].alive = false;
    if (++used > budget)
      throw BudgetExceededError("S-pair budget exceeded (" + std::to_string(budget) + ")");

    Polynomial h =
        reduce_full_impl(s_polynomial(basis[pairs[best].i], basis[pairs[best].j]), basis, true);
    if (h.is_zero()) continue;
    basis.push_back(h.primitive());
    update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1);
  }

  // minimal generators: drop elements whose lead is divisible by another lead
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // tail reduction; lead terms are pairwise indivisible and stay put
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce_full_impl(minimal[i], others, true).primitive();
  }
  for (auto& g : minimal) g = g.monic();

  return sorted_by_lead(std::move(minimal));
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  std::vector<Polynomial> nonzero;
  for (auto& g : gens) {
    check_compatible(g.ring(), ring_);
    if (!g.is_zero()) nonzero.push_back(g.with_order(ring_));
  }
  d_ = std::make_shared<Data>();
  d_->gens = std::move(nonzero);
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, ring->field.one());
  return Ideal(std::move(ring), {one});
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const& {
  const auto key = std::make_pair(static_cast<int>(ord.kind), ord.block);
  {
    std::lock_guard<std::mutex> lock(d_->mutex);
    auto it = d_->cache.find(key);
    if (it != d_->cache.end()) return it->second;
  }
  std::vector<Polynomial> gb = buchberger(ring_, d_->gens, ord);
  std::lock_guard<std::mutex> lock(d_->mutex);
  return d_->cache.emplace(key, std::move(gb)).first->second;
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& ord) {
  check_compatible(f.ring(), ideal.ring());
  const auto& gb = ideal.groebner_basis(ord);
  if (gb.empty()) return f;
  const RingPtr work_ring = ring_with_order(ideal.ring(), ord);
  return reduce_full(f.with_order(work_ring), gb).with_order(f.ring());
}

Ideal leading_ideal(const Ideal& ideal, const MonomialOrder& ord) {
  std::vector<Polynomial> lead;
  for (const auto& g : ideal.groebner_basis(ord))
    lead.push_back(Polynomial::term(ideal.ring(), g.leading_monomial(), ideal.ring()->field.one()));
  return Ideal(ideal.ring(), std::move(lead));
}

Ideal eliminate(const Ideal& ideal, int k) {
  const RingPtr& ring = ideal.ring();
  if (k < 1 || k >= ring->nvars()) throw std::invalid_argument("bad elimination block size");
  const auto& gb = ideal.groebner_basis(MonomialOrder::block_elim(k));
  std::vector<std::string> rest(ring->vars.begin() + k, ring->vars.end());
  RingPtr sub = make_ring(ring->field, std::move(rest));
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool free_of_block = true;
    for (const auto& t : g.terms()) {
      for (int i = 0; i < k && free_of_block; ++i)
        if (t.monomial.exponent(i) > 0) free_of_block = false;
      if (!free_of_block) break;
    }
    if (free_of_block) kept.push_back(g.transport(sub));
  }
  return Ideal(sub, std::move(kept));
}

bool contains(const Ideal& ideal, const Polynomial& f) {
  return normal_form(f, ideal).is_zero();
}

bool is_subset(const Ideal& inner, const Ideal& outer) {
  for (const auto& g : inner.generators())
    if (!contains(outer, g)) return false;
  return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
  check_compatible(a.ring(), b.ring());
  const auto& ga = a.groebner_basis(MonomialOrder::degrevlex());
  const auto& gb = b.groebner_basis(MonomialOrder::degrevlex());
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gb[i]) return false;
  return true;
}

bool is_unit_ideal(const Ideal& ideal) {
  const auto& gb = ideal.groebner_basis(MonomialOrder::degrevlex());
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

}  // namespace apolar
