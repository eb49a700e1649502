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

#include "apolar/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace apolar {

namespace {

void sort_terms(std::vector<Term>& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
}

void combine_sorted(std::vector<Term>& terms) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, FieldElement c) {
  if (c.field() != ring->field) throw FieldMismatchError("constant from a different field");
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back({Monomial::one(ring->nvars()), std::move(c)});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  Monomial m = Monomial::variable(index, ring->nvars());
  FieldElement one = ring->field.one();
  return Polynomial(std::move(ring), {{m, one}});
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, FieldElement c) {
  if (c.field() != ring->field) throw FieldMismatchError("coefficient from a different field");
  if (m.nvars != ring->nvars()) throw RingMismatchError("monomial variable count mismatch");
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back({m, std::move(c)});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.coeff.field() != ring->field) throw FieldMismatchError("coefficient from a different field");
    if (t.monomial.nvars != ring->nvars()) throw RingMismatchError("monomial variable count mismatch");
  }
  sort_terms(terms, ring->order);
  combine_sorted(terms);
  return Polynomial(std::move(ring), std::move(terms));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.deg));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.deg != terms_[0].monomial.deg) return false;
  return true;
}

const Monomial& Polynomial::leading_monomial() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no leading term");
  return terms_[0].monomial;
}

const FieldElement& Polynomial::leading_coeff() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no leading term");
  return terms_[0].coeff;
}

FieldElement Polynomial::coeff_of(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return ring_->field.zero();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(ring_, o.ring_);
  const Polynomial rhs = ring_->order == o.ring_->order ? o : o.with_order(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  const MonomialOrder& ord = ring_->order;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = ord.compare(terms_[i].monomial, rhs.terms_[j].monomial);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(rhs.terms_[j++]);
    } else {
      FieldElement s = terms_[i].coeff + rhs.terms_[j].coeff;
      if (!s.is_zero()) out.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) out.push_back(rhs.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  if (c.field() != ring_->field) throw FieldMismatchError("scalar from a different field");
  if (c.is_zero()) return zero(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return zero(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.monomial = t.monomial * m;
    t.coeff *= c;
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(ring_, o.ring_);
  const Polynomial rhs = ring_->order == o.ring_->order ? o : o.with_order(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) out.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  sort_terms(out, ring_->order);
  combine_sorted(out);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  Polynomial r = constant(ring_, ring_->field.one());
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_compatible(ring_, o.ring_);
  const Polynomial rhs = ring_->order == o.ring_->order ? o : o.with_order(ring_);
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].monomial != rhs.terms_[i].monomial || terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scale(leading_coeff().inverse());
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  if (!ring_->field.is_rationals()) return monic();
  mpz_class den_lcm = 1;
  for (const auto& t : terms_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coeff.rational().get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.coeff.rational().get_num().get_mpz_t());
    if (num_gcd == 1 && den_lcm == 1) break;
  }
  if (num_gcd == den_lcm && leading_coeff().rational() > 0) return *this;
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (leading_coeff().rational() < 0) factor = -factor;
  return scale(ring_->field.from_rational(factor));
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.monomial.exponent(var);
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.e[var] = static_cast<std::uint8_t>(e - 1);
    m.deg = static_cast<std::uint16_t>(m.deg - 1);
    out.push_back({m, t.coeff * ring_->field.from_int(e)});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::with_order(const RingPtr& target) const {
  check_compatible(ring_, target);
  std::vector<Term> out = terms_;
  sort_terms(out, target->order);
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::transport(const RingPtr& target) const {
  if (ring_->field != target->field) throw FieldMismatchError("transport across fields");
  std::vector<int> map(ring_->nvars(), -1);
  for (int i = 0; i < ring_->nvars(); ++i) map[i] = target->var_index(ring_->vars[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> exps(target->nvars(), 0);
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.monomial.e[i] == 0) continue;
      if (map[i] < 0)
        throw RingMismatchError("target ring lacks variable " + ring_->vars[i]);
      exps[map[i]] = t.monomial.e[i];
    }
    out.push_back({Monomial::from_exponents(exps), t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::reletter(const RingPtr& target) const {
  if (ring_->field != target->field) throw FieldMismatchError("reletter across fields");
  if (ring_->nvars() != target->nvars())
    throw RingMismatchError("reletter requires equal variable counts");
  std::vector<Term> out = terms_;
  sort_terms(out, target->order);
  return Polynomial(target, std::move(out));
}

namespace {

void append_monomial(std::string& s, const Monomial& m, const Ring& ring) {
  bool first = true;
  for (int i = 0; i < ring.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!first) s += "*";
    first = false;
    s += ring.vars[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string cs = t.coeff.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (i == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? "-" : "+";
    }
    if (negative) cs = cs.substr(1);
    if (t.monomial.is_one()) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      append_monomial(s, t.monomial, *ring_);
    }
  }
  return s;
}

namespace {

struct Parser {
  const std::string& text;
  const RingPtr& ring;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool eat(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string parse_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", pos);
    return text.substr(start, pos - start);
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      throw ParseError("expected variable name", pos);
    ++pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  bool next_is_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  bool next_is_name() {
    skip_ws();
    return pos < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_');
  }

  // var ['^' int] ('*' var ['^' int])*
  Monomial parse_monomial() {
    std::vector<int> exps(ring->nvars(), 0);
    std::size_t start_pos = pos;
    while (true) {
      std::size_t name_pos = pos;
      std::string name = parse_name();
      int idx = ring->var_index(name);
      if (idx < 0) throw ParseError("unknown variable " + name, name_pos);
      int e = 1;
      if (eat('^')) {
        std::size_t exp_pos = pos;
        std::string digits = parse_integer();
        if (digits.size() > 3 || (e = std::stoi(digits)) > 255)
          throw ParseError("exponent out of range", exp_pos);
      }
      exps[idx] += e;
      if (exps[idx] > 255) throw ParseError("exponent out of range", name_pos);
      std::size_t save = pos;
      if (!eat('*')) break;
      if (!next_is_name()) {  // the '*' belonged to something else
        pos = save;
        break;
      }
    }
    try {
      return Monomial::from_exponents(exps);
    } catch (const std::out_of_range&) {
      throw ParseError("monomial degree out of range", start_pos);
    }
  }

  // [coeff '*'] monomial | coeff
  Term parse_term() {
    FieldElement c = ring->field.one();
    bool have_coeff = false;
    if (next_is_digit()) {
      std::size_t coeff_pos = pos;
      std::string num = parse_integer();
      std::string frac = num;
      if (eat('/')) frac = num + "/" + parse_integer();
      try {
        c = ring->field.element_from_string(frac);
      } catch (const std::exception&) {
        throw ParseError("bad coefficient " + frac, coeff_pos);
      }
      have_coeff = true;
      std::size_t save = pos;
      if (eat('*')) {
        if (!next_is_name()) throw ParseError("expected monomial after '*'", pos);
        (void)save;
      } else {
        return {Monomial::one(ring->nvars()), c};
      }
    }
    if (!next_is_name()) {
      if (have_coeff) return {Monomial::one(ring->nvars()), c};
      throw ParseError("expected term", pos);
    }
    Monomial m = parse_monomial();
    return {m, c};
  }

  Polynomial parse_poly() {
    std::vector<Term> terms;
    skip_ws();
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Term first = parse_term();
    if (negate) first.coeff = -first.coeff;
    terms.push_back(std::move(first));
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      bool minus;
      if (eat('+'))
        minus = false;
      else if (eat('-'))
        minus = true;
      else
        throw ParseError("expected '+' or '-'", pos);
      Term t = parse_term();
      if (minus) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) {
  Parser p{text, ring};
  Polynomial f = p.parse_poly();
  return f;
}

Polynomial apolar_act(const Polynomial& g, const Polynomial& f) {
  const RingPtr& rg = g.ring();
  const RingPtr& rf = f.ring();
  if (rg->field != rf->field) throw FieldMismatchError("operator and argument over different fields");
  if (rg->nvars() != rf->nvars())
    throw RingMismatchError("operator and argument rings have different variable counts");
  const std::uint64_t p = rf->field.characteristic();
  if (p != 0 && static_cast<std::int64_t>(p) <= f.degree())
    throw CharacteristicError("field characteristic must exceed the degree acted on");

  const Field& field = rf->field;
  std::vector<Term> out;
  for (const auto& tg : g.terms()) {
    for (const auto& tf : f.terms()) {
      Monomial m = tf.monomial;
      FieldElement c = tg.coeff * tf.coeff;
      bool dead = false;
      for (int i = 0; i < m.nvars && !dead; ++i) {
        int a = tg.monomial.exponent(i);
        if (a == 0) continue;
        int e = m.exponent(i);
        if (e < a) {
          dead = true;
          break;
        }
        for (int k = 0; k < a; ++k) c *= field.from_int(e - k);
        m.e[i] = static_cast<std::uint8_t>(e - a);
        m.deg = static_cast<std::uint16_t>(m.deg - a);
      }
      if (!dead && !c.is_zero()) out.push_back({m, std::move(c)});
    }
  }
  return Polynomial::from_terms(rf, std::move(out));
}

ExactMatrix coefficient_matrix(const std::vector<Polynomial>& polys, int degree,
                               const std::vector<Monomial>& basis) {
  if (polys.empty()) throw std::invalid_argument("empty polynomial list");
  const Field& field = polys[0].ring()->field;
  ExactMatrix m(field, polys.size(), basis.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& t : polys[i].terms()) {
      if (static_cast<int>(t.monomial.deg) != degree)
        throw std::invalid_argument("polynomial not homogeneous of the requested degree");
      auto it = std::find(basis.begin(), basis.end(), t.monomial);
      if (it == basis.end()) throw std::logic_error("monomial missing from basis");
      m.set(i, static_cast<std::size_t>(it - basis.begin()), t.coeff);
    }
  }
  return m;
}

}  // namespace apolar
