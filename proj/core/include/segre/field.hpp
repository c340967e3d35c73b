// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact scalars: residues modulo a prime p < 2^31, or rationals backed by GMP.
//
// A Scalar carries its own field tag (the modulus, or "rational"), so the
// usual arithmetic operators work without a context object. Combining scalars
// of different fields throws FieldMismatch.

#ifndef SEGRE_FIELD_HPP_
#define SEGRE_FIELD_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace segre {

class Scalar;

class FieldSpec {
 public:
  // Throws PreconditionError unless 2 <= p < 2^31 and p is prime.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rational() { return FieldSpec(0); }

  bool is_prime() const { return modulus_ != 0; }
  bool is_rational() const { return modulus_ == 0; }
  // 0 for the rationals.
  std::uint32_t modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  // Rationals only take den != 0; prime fields reduce num * den^-1.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  // "GF(5)" or "Q".
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_;
};

bool is_prime_number(std::uint64_t n);

class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    bool operator==(const Residue&) const = default;
  };

  static Scalar residue(std::uint32_t value, std::uint32_t modulus) {
    return Scalar(Residue{value % modulus, modulus});
  }
  static Scalar rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
  }

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  // Canonical residue in [0, p); throws on rationals.
  std::uint32_t residue_value() const;
  // Throws on residues.
  const mpq_class& rational_value() const;

  Scalar inverse() const;  // DegeneracyError on zero

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  // Total order used for canonical sorting: residues by value, rationals
  // numerically. Comparing across fields throws.
  std::strong_ordering operator<=>(const Scalar& o) const;

  std::string to_string() const;

 private:
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  std::variant<Residue, mpq_class> value_;
};

}  // namespace segre

#endif  // SEGRE_FIELD_HPP_
