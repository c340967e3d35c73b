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

// Exhaustive checks of the classification statements and cardinality
// bounds over small prime fields.

#ifndef SEGRE_VERIFY_HPP_
#define SEGRE_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segre/enumerate.hpp"

namespace segre {

struct CountEntry {
  std::string field;  // "GF(3)"
  std::string shape;  // "1,1" or "" when not shape specific
  std::string what;
  std::uint64_t value;
};

struct VerificationReport {
  std::string statement_id;
  std::vector<std::string> shapes_checked;
  std::vector<std::uint32_t> fields_checked;
  std::vector<PointSet> counterexamples;
  // Failed checks that are not witnessed by a single point set, such as a
  // count that differs from its expected value.
  std::vector<std::string> failures;
  std::vector<CountEntry> counts;
  std::vector<std::string> notes;
  std::string reduction_used;
  double elapsed_ms = 0;

  bool success() const { return counterexamples.empty() && failures.empty(); }
};

struct VerifyOptions {
  std::size_t jobs = 1;
  double budget = kDefaultBudget;
  std::size_t max_counterexamples = 16;
  std::uint64_t seed = 1;
};

std::vector<Shape> default_e2_shapes();
std::vector<Shape> default_e3_exclusion_shapes();
std::vector<Shape> default_e301_shapes();

// 4-point nondegenerate circuits exist only for (2) and (1,1); on (1,1)
// the (1,1)-forms through S form a line, the form is singular iff S is not
// minimal, and every admissible split has a partition point of X-rank 2
// witnessed by both halves.
VerificationReport verify_prop_e2(const std::vector<std::uint32_t>& fields,
                                  const std::vector<Shape>& shapes,
                                  const VerifyOptions& opt = {});

// Exclusion of 5-point nondegenerate circuits on the excluded shapes, plus
// the B_3 census over positive_field when it is set.
VerificationReport verify_thm_e3(const std::vector<std::uint32_t>& exclusion_fields,
                                 std::optional<std::uint32_t> positive_field,
                                 const VerifyOptions& opt = {});

// 5-point nondegenerate sets with e >= 2 and their kernel types.
VerificationReport verify_prop_e301(std::uint32_t field,
                                    const std::vector<Shape>& shapes,
                                    const VerifyOptions& opt = {});

enum class Bound { kN3, kN4a, kN4b, kN400 };
std::optional<Bound> parse_bound(const std::string& id);
std::string to_string(Bound b);

struct BoundParams {
  std::uint32_t field;
  std::vector<Shape> shapes;
  int max_cardinality = 6;  // n3, n4a, n4b
  int e = 1;                // n400
};

BoundParams default_bound_params(Bound b);
VerificationReport verify_bounds(Bound which, const BoundParams& params,
                                 const VerifyOptions& opt = {});

}  // namespace segre

#endif  // SEGRE_VERIFY_HPP_
