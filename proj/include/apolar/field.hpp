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

#ifndef APOLAR_FIELD_HPP
#define APOLAR_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace apolar {

struct FieldMismatchError : std::runtime_error {
  explicit FieldMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct CharacteristicError : std::runtime_error {
  explicit CharacteristicError(const std::string& what) : std::runtime_error(what) {}
};

class FieldElement;

/// Coefficient field: the rationals or a prime field Z/p for a machine-word prime.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  /// Parses "qq" or "fp:<p>".
  static Field parse(const std::string& text);

  std::uint64_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

  std::string to_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long n) const;
  FieldElement from_fraction(long num, long den) const;
  FieldElement from_rational(const mpq_class& q) const;
  /// Parses "n" or "n/d" (reduced into the field).
  FieldElement element_from_string(const std::string& text) const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 = rationals
};

/// An exact scalar: arbitrary-precision rational, or a residue in [0, p).
/// Rationals are kept canonical (lowest terms, positive denominator) by GMP.
class FieldElement {
 public:
  FieldElement(const FieldElement&) = default;
  FieldElement(FieldElement&&) = default;
  FieldElement& operator=(const FieldElement&) = default;
  FieldElement& operator=(FieldElement&&) = default;

  Field field() const;

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

  /// Rational value; throws unless the field is the rationals.
  const mpq_class& rational() const;
  /// Residue in [0, p); throws unless the field is prime.
  std::uint64_t residue() const;

 private:
  friend class Field;
  struct ModP {
    std::uint64_t v;
    std::uint64_t p;
  };

  explicit FieldElement(mpq_class q) : v_(std::move(q)) {}
  FieldElement(std::uint64_t v, std::uint64_t p) : v_(ModP{v, p}) {}

  static void check_same(const FieldElement& a, const FieldElement& b);

  std::variant<mpq_class, ModP> v_;
};

}  // namespace apolar

#endif  // APOLAR_FIELD_HPP
