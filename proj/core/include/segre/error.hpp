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

#ifndef SEGRE_ERROR_HPP_
#define SEGRE_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace segre {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension / length / ambient-space mismatches, ragged matrices.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Operands living over different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Repeated points where distinct ones are required, singular fits.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A PointSet was built from a list that repeats a point.
class DuplicatePointError : public Error {
 public:
  using Error::Error;
};

// Finite-field enumeration requested over the rationals.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A randomized construction cannot be realized over the given prime field.
class FieldTooSmall : public Error {
 public:
  FieldTooSmall(const std::string& what, std::uint32_t minimal_prime)
      : Error(what + " (smallest admissible p: " +
              std::to_string(minimal_prime) + ")"),
        minimal_prime_(minimal_prime) {}

  std::uint32_t minimal_prime() const { return minimal_prime_; }

 private:
  std::uint32_t minimal_prime_;
};

// An enumeration task larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}

  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

}  // namespace segre

#endif  // SEGRE_ERROR_HPP_
