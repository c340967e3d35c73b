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

#include "segre/field.hpp"

#include "segre/error.hpp"

namespace segre {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime_number(p)) {
    throw PreconditionError("field modulus must be a prime below 2^31, got " +
                            std::to_string(p));
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long long v) const {
  if (is_rational()) return Scalar::rational(mpq_class(mpz_class(static_cast<long>(v))));
  long long r = v % static_cast<long long>(modulus_);
  if (r < 0) r += modulus_;
  return Scalar::residue(static_cast<std::uint32_t>(r), modulus_);
}

Scalar FieldSpec::from_fraction(const mpz_class& num,
                                const mpz_class& den) const {
  if (den == 0) throw DegeneracyError("zero denominator");
  if (is_rational()) return Scalar::rational(mpq_class(num, den));
  const std::uint32_t d = reduce(den, modulus_);
  if (d == 0) throw DegeneracyError("denominator vanishes modulo p");
  return Scalar::residue(reduce(num, modulus_), modulus_) *
         Scalar::residue(d, modulus_).inverse();
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldSpec(r->modulus);
  }
  return FieldSpec(0);
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("residue requested from a rational scalar");
}

const mpq_class& Scalar::rational_value() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("rational requested from a residue scalar");
}

void Scalar::check_same_field(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&o.value_);
  if ((a == nullptr) != (b == nullptr) ||
      (a != nullptr && a->modulus != b->modulus)) {
    throw FieldMismatch("scalars from different fields");
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DegeneracyError("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus),
                          r->modulus});
  }
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  return Scalar::rational(std::move(inv));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value,
                          r->modulus});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint32_t s = r->value + std::get<Residue>(o.value_).value;
    if (s >= r->modulus) s -= r->modulus;
    r->value = s;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint32_t b = std::get<Residue>(o.value_).value;
    r->value = r->value >= b ? r->value - b : r->value + r->modulus - b;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mul_mod(r->value, std::get<Residue>(o.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return r->value == std::get<Residue>(o.value_).value;
  }
  return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  check_same_field(o);
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return r->value <=> std::get<Residue>(o.value_).value;
  }
  const int c = cmp(std::get<mpq_class>(value_), std::get<mpq_class>(o.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return std::to_string(r->value);
  }
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace segre
