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

#include "apolar/field.hpp"

namespace apolar {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("division by zero in prime field");
  // extended Euclid; p < 2^31 so signed 64-bit never overflows
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) throw std::invalid_argument("prime field characteristic must fit in a machine word (< 2^31)");
  if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "qq" || text == "QQ") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::size_t pos = 0;
    unsigned long long p = std::stoull(text.substr(3), &pos);
    if (pos != text.size() - 3) throw std::invalid_argument("bad field spec: " + text);
    return prime(p);
  }
  throw std::invalid_argument("bad field spec (expected qq or fp:<p>): " + text);
}

std::string Field::to_string() const {
  return is_rationals() ? "qq" : "fp:" + std::to_string(p_);
}

FieldElement Field::zero() const { return from_int(0); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long n) const {
  if (is_rationals()) return FieldElement(mpq_class(n));
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return FieldElement(static_cast<std::uint64_t>(r), p_);
}

FieldElement Field::from_fraction(long num, long den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(q);
  }
  return from_int(num) / from_int(den);
}

FieldElement Field::from_rational(const mpq_class& q) const {
  if (is_rationals()) {
    mpq_class c = q;
    c.canonicalize();
    return FieldElement(c);
  }
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class nr = num % pz, dr = den % pz;
  if (nr < 0) nr += pz;
  if (dr < 0) dr += pz;
  FieldElement n(static_cast<std::uint64_t>(nr.get_ui()), p_);
  FieldElement d(static_cast<std::uint64_t>(dr.get_ui()), p_);
  return n / d;
}

FieldElement Field::element_from_string(const std::string& text) const {
  mpq_class q(text, 10);  // fixed base: no octal surprises from leading zeros
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in scalar: " + text);
  q.canonicalize();
  return from_rational(q);
}

Field FieldElement::field() const {
  if (std::holds_alternative<mpq_class>(v_)) return Field::rationals();
  return Field::prime(std::get<ModP>(v_).p);
}

bool FieldElement::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 0;
  return std::get<ModP>(v_).v == 0;
}

bool FieldElement::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<ModP>(v_).v == 1;
}

void FieldElement::check_same(const FieldElement& a, const FieldElement& b) {
  bool ar = std::holds_alternative<mpq_class>(a.v_);
  bool br = std::holds_alternative<mpq_class>(b.v_);
  if (ar != br) throw FieldMismatchError("mixed rational and prime-field scalars");
  if (!ar && std::get<ModP>(a.v_).p != std::get<ModP>(b.v_).p)
    throw FieldMismatchError("scalars from different prime fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&v_))
    return FieldElement(mpq_class(*q + std::get<mpq_class>(o.v_)));
  const auto& a = std::get<ModP>(v_);
  const auto& b = std::get<ModP>(o.v_);
  std::uint64_t s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  return FieldElement(s, a.p);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&v_))
    return FieldElement(mpq_class(*q - std::get<mpq_class>(o.v_)));
  const auto& a = std::get<ModP>(v_);
  const auto& b = std::get<ModP>(o.v_);
  std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
  return FieldElement(s, a.p);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&v_))
    return FieldElement(mpq_class(*q * std::get<mpq_class>(o.v_)));
  const auto& a = std::get<ModP>(v_);
  const auto& b = std::get<ModP>(o.v_);
  return FieldElement(mulmod(a.v, b.v, a.p), a.p);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return FieldElement(mpq_class(-*q));
  const auto& a = std::get<ModP>(v_);
  return FieldElement(a.v == 0 ? 0 : a.p - a.v, a.p);
}

FieldElement FieldElement::inverse() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) {
    if (*q == 0) throw std::domain_error("division by zero");
    return FieldElement(mpq_class(1 / *q));
  }
  const auto& a = std::get<ModP>(v_);
  return FieldElement(invmod(a.v, a.p), a.p);
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == std::get<mpq_class>(o.v_);
  return std::get<ModP>(v_).v == std::get<ModP>(o.v_).v;
}

std::string FieldElement::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<ModP>(v_).v);
}

const mpq_class& FieldElement::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw FieldMismatchError("not a rational scalar");
}

std::uint64_t FieldElement::residue() const {
  if (const auto* m = std::get_if<ModP>(&v_)) return m->v;
  throw FieldMismatchError("not a prime-field scalar");
}

}  // namespace apolar
