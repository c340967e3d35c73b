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


// JSON encoding of fields, shapes, point sets and reports.

#ifndef SEGRE_TOOLS_IO_HPP_
#define SEGRE_TOOLS_IO_HPP_

#include <string>

#include "json.hpp"

#include "segre/error.hpp"
#include "segre/invariants.hpp"
#include "segre/rnc.hpp"
#include "segre/verify.hpp"

namespace segre::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "segre";
inline constexpr const char* kToolVersion = "0.1.0";

// Malformed input. The message starts with the JSON path of the offending
// value, e.g. "points[2][1][0]: expected an integer".
class ParseError : public Error {
 public:
  using Error::Error;
};

// "5", "GF(5)", "Q".
FieldSpec parse_field_flag(const std::string& text);

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j, const std::string& path);

// Homogeneous coordinates as integers: residues in [0, p) over GF(p),
// primitive integer vectors over Q. Values beyond 64 bits become strings.
Json vector_to_json(std::span<const Scalar> v);
Json matrix_to_json(const Matrix& m);
Json point_to_json(const MPoint& p);
Json points_to_json(const PointSet& s);

// The PointSetFile document.
Json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);
PointSet read_point_set_file(const std::string& path);

// Indented layout where arrays holding no objects stay on one line, so a
// point reads as [[1,0],[0,1]]. Ends with a newline.
std::string to_text(const Json& j);

Json defect_report_to_json(const DefectReport& r);
Json curve_to_json(const RncCurve& c);
// With include_elapsed false the elapsed time is left out.
Json verification_to_json(const VerificationReport& r, bool include_elapsed);

}  // namespace segre::cli

#endif  // SEGRE_TOOLS_IO_HPP_
