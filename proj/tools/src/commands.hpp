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


// Subcommand implementations. Each returns the "result" object of a report
// (or a point set for construct) so the driver only handles flags and files.

#ifndef SEGRE_TOOLS_COMMANDS_HPP_
#define SEGRE_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace segre::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitBudget = 3;

// Wraps a result in the report envelope. elapsed_ms and timestamp are left
// out when stamped is false, which makes the bytes reproducible.
Json make_report(const std::string& kind, Json input, Json result, bool stamped,
                 double elapsed_ms);

Json analyze_result(const PointSet& s);
Json embed_result(const PointSet& s);
// Throws PreconditionError when the shape is not all ones, #S < 3 or some
// projection is not injective.
Json fit_curve_result(const PointSet& s);

struct EnumerateRequest {
  Shape shape = Shape({1});
  FieldSpec field = FieldSpec::prime(2);
  int cardinality = 2;
  EnumFilters filters;
  bool reduce = false;
  std::size_t jobs = 1;
  double budget = kDefaultBudget;
  std::size_t limit = 100;  // sets listed in the report
};
Json enumerate_input(const EnumerateRequest& req);
Json enumerate_result(const EnumerateRequest& req);

struct VerifyRequest {
  std::string statement_id;
  std::vector<std::uint32_t> fields;  // empty means the statement's default
  std::vector<Shape> shapes;          // empty means the statement's default
  std::optional<std::uint32_t> positive_field;
  std::optional<int> cap;
  std::optional<int> e;
  VerifyOptions options;
};
// Throws PreconditionError on an unknown statement id.
VerificationReport run_verify(const VerifyRequest& req);
Json verify_input(const VerifyRequest& req);

struct ConstructRequest {
  std::string kind;  // n2, extremal, p2p1:<name>
  std::optional<Shape> shape;
  FieldSpec field = FieldSpec::prime(5);
  int e = 1;
  std::uint64_t seed = 0;
};
// Builds the set and re-checks the construction's contract on it.
PointSet run_construct(const ConstructRequest& req);

}  // namespace segre::cli

#endif  // SEGRE_TOOLS_COMMANDS_HPP_
