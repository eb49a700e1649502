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

#include "apolar/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace apolar {

Monomial Monomial::one(int nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
  Monomial m;
  m.nvars = static_cast<std::uint8_t>(nvars);
  return m;
}

Monomial Monomial::variable(int index, int nvars) {
  Monomial m = one(nvars);
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  m.e[index] = 1;
  m.deg = 1;
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  Monomial m = one(static_cast<int>(exps.size()));
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::out_of_range("exponent out of range");
    m.e[i] = static_cast<std::uint8_t>(exps[i]);
    d += exps[i];
  }
  if (d > 65535) throw std::out_of_range("degree out of range");
  m.deg = static_cast<std::uint16_t>(d);
  return m;
}

bool Monomial::divides(const Monomial& m) const {
  if (deg > m.deg) return false;
  for (int i = 0; i < nvars; ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& m) const {
  for (int i = 0; i < nvars; ++i)
    if (e[i] > 0 && m.e[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (int i = 0; i < nvars; ++i) {
    int s = e[i] + m.e[i];
    if (s > 255) throw std::out_of_range("exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(deg + m.deg);
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r = *this;
  for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - m.e[i]);
  r.deg = static_cast<std::uint16_t>(deg - m.deg);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  int d = 0;
  for (int i = 0; i < a.nvars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

namespace {

// a > b: higher degree wins; ties broken by the smaller exponent at the last
// differing position.
int cmp_degrevlex(const std::uint8_t* a, const std::uint8_t* b, int lo, int hi, int dega,
                  int degb) {
  if (dega != degb) return dega < degb ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const std::uint8_t* a, const std::uint8_t* b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const int n = a.nvars;
  switch (kind) {
    case Kind::DegRevLex:
      return cmp_degrevlex(a.e.data(), b.e.data(), 0, n, a.deg, b.deg);
    case Kind::Lex:
      return cmp_lex(a.e.data(), b.e.data(), 0, n);
    case Kind::Block: {
      int da = 0, db = 0;
      for (int i = 0; i < block; ++i) {
        da += a.e[i];
        db += b.e[i];
      }
      if (da != db) return da < db ? -1 : 1;
      if (int c = cmp_lex(a.e.data(), b.e.data(), 0, block)) return c;
      return cmp_degrevlex(a.e.data(), b.e.data(), block, n, a.deg - da, b.deg - db);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "eliminate:" + std::to_string(block);
  }
  return "";
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "degrevlex") return degrevlex();
  if (text == "lex") return lex();
  if (text.rfind("eliminate:", 0) == 0) return block_elim(std::stoi(text.substr(10)));
  throw std::invalid_argument("unknown monomial order: " + text);
}

namespace {

void enumerate(int nvars, int pos, int remaining, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    exps[pos] = remaining;
    out.push_back(Monomial::from_exponents(exps));
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    exps[pos] = k;
    enumerate(nvars, pos + 1, remaining - k, exps, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree, const MonomialOrder& order) {
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  enumerate(nvars, 0, degree, exps, out);
  std::sort(out.begin(), out.end(),
            [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

long monomial_count(int nvars, int degree) {
  // C(degree + nvars - 1, nvars - 1)
  long num = 1, den = 1;
  for (int i = 1; i <= nvars - 1; ++i) {
    num *= degree + i;
    den *= i;
  }
  return num / den;
}

}  // namespace apolar
