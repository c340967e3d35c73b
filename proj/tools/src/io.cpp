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


#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace segre::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

mpz_class parse_mpz(const std::string& text, const std::string& path) {
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    fail(path, "\"" + text + "\" is not an integer");
  }
  return z;
}

Scalar scalar_from_json(const Json& j, const FieldSpec& f, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      return f.from_fraction(mpz_class(std::to_string(j.get<std::uint64_t>())), 1);
    }
    return f.from_fraction(mpz_class(std::to_string(j.get<std::int64_t>())), 1);
  }
  if (!j.is_string()) fail(path, "expected an integer or an \"a/b\" string");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  mpz_class num = parse_mpz(s.substr(0, slash), path);
  mpz_class den = 1;
  if (slash != std::string::npos) den = parse_mpz(s.substr(slash + 1), path);
  if (den == 0) fail(path, "zero denominator");
  try {
    return f.from_fraction(num, den);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

bool holds_object(const Json& j) {
  if (j.is_object()) return true;
  if (!j.is_array()) return false;
  return std::any_of(j.begin(), j.end(), [](const Json& x) { return holds_object(x); });
}

void write_text(const Json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  if (!holds_object(j) || (j.is_object() && j.empty())) {
    out += j.dump();
    return;
  }
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    write_text(*it, depth + 1, out);
  }
  out += "\n" + std::string(2 * depth, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string to_text(const Json& j) {
  std::string out;
  write_text(j, 0, out);
  return out + "\n";
}

FieldSpec parse_field_flag(const std::string& text) {
  if (text == "Q" || text == "q") return FieldSpec::rational();
  std::string digits = text;
  if (digits.starts_with("GF(") && digits.ends_with(")")) {
    digits = digits.substr(3, digits.size() - 4);
  }
  std::uint64_t p = 0;
  std::istringstream in(digits);
  if (!(in >> p) || !in.eof()) {
    throw ParseError("--field: expected a prime or Q, got \"" + text + "\"");
  }
  return FieldSpec::prime(p);
}

Json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"p", f.modulus()}};
}

FieldSpec field_from_json(const Json& j, const std::string& path) {
  const Json& kind = member(j, "kind", path);
  if (kind == "rational") return FieldSpec::rational();
  if (kind != "prime") fail(path + ".kind", "expected \"prime\" or \"rational\"");
  const Json& p = member(j, "p", path);
  if (!p.is_number_unsigned()) fail(path + ".p", "expected a positive integer");
  try {
    return FieldSpec::prime(p.get<std::uint64_t>());
  } catch (const Error& e) {
    fail(path + ".p", e.what());
  }
}

Json vector_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  if (v.empty()) return out;
  if (v.front().field().is_prime()) {
    for (const Scalar& x : v) out.push_back(x.residue_value());
    return out;
  }
  mpz_class den = 1;
  for (const Scalar& x : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational_value().get_den_mpz_t());
  }
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const Scalar& x : v) {
    const mpq_class& q = x.rational_value();
    ints.push_back(q.get_num() * (den / q.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  for (mpz_class& z : ints) out.push_back(integer_json(g == 0 ? z : mpz_class(z / g)));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      if (x.field().is_prime()) {
        row.push_back(x.residue_value());
      } else if (x.rational_value().get_den() == 1) {
        row.push_back(integer_json(x.rational_value().get_num()));
      } else {
        row.push_back(x.rational_value().get_str());
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json point_to_json(const MPoint& p) {
  Json out = Json::array();
  for (const ProjPoint& f : p.factors()) out.push_back(vector_to_json(f.coords()));
  return out;
}

Json points_to_json(const PointSet& s) {
  Json out = Json::array();
  for (const MPoint& p : s) out.push_back(point_to_json(p));
  return out;
}

Json point_set_to_json(const PointSet& s) {
  return Json{{"field", field_to_json(s.field())},
              {"shape", s.shape().dims()},
              {"points", points_to_json(s)}};
}

PointSet point_set_from_json(const Json& j) {
  const FieldSpec field = field_from_json(member(j, "field", "$"), "field");
  const Json& shape_json = member(j, "shape", "$");
  if (!shape_json.is_array() || shape_json.empty()) {
    fail("shape", "expected a nonempty list of dimensions");
  }
  std::vector<int> dims;
  for (std::size_t i = 0; i < shape_json.size(); ++i) {
    const Json& d = shape_json[i];
    if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 64) {
      fail(index_path("shape", i), "expected an integer between 1 and 64");
    }
    dims.push_back(d.get<int>());
  }
  const Shape shape(dims);
  const Json& pts = member(j, "points", "$");
  if (!pts.is_array()) fail("points", "expected a list of points");
  std::vector<MPoint> points;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    const std::string pp = index_path("points", a);
    if (!pts[a].is_array() || pts[a].size() != shape.k()) {
      fail(pp, "expected " + std::to_string(shape.k()) + " factors");
    }
    std::vector<ProjPoint> factors;
    for (std::size_t i = 0; i < shape.k(); ++i) {
      const std::string fp = index_path(pp, i);
      const Json& c = pts[a][i];
      const std::size_t want = static_cast<std::size_t>(shape.n(i)) + 1;
      if (!c.is_array() || c.size() != want) {
        fail(fp, "expected " + std::to_string(want) + " coordinates");
      }
      Vector v;
      for (std::size_t t = 0; t < want; ++t) {
        v.push_back(scalar_from_json(c[t], field, index_path(fp, t)));
      }
      if (is_zero_vector(v)) fail(fp, "all coordinates vanish");
      factors.emplace_back(std::move(v));
    }
    points.emplace_back(std::move(factors));
  }
  return PointSet(shape, field, std::move(points));
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return point_set_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json defect_report_to_json(const DefectReport& r) {
  Json flags = Json::array();
  for (bool b : r.essential_flags) flags.push_back(b);
  Json per = Json::array();
  for (bool b : r.i_minimal) per.push_back(b);
  return Json{{"span_dim", r.span_dim},
              {"defect_e", r.defect_e},
              {"circuit", r.circuit},
              {"minimal", r.minimal},
              {"i_minimal", per},
              {"nondegenerate", r.nondegenerate},
              {"minimal_subspace_dims", r.minimal_subspace_dims},
              {"strongly_essential", r.strongly_essential},
              {"essential_flags", flags},
              {"kernel", points_to_json(r.kernel)},
              {"tail", points_to_json(r.tail)}};
}

Json curve_to_json(const RncCurve& c) {
  Json maps = Json::array();
  for (const Matrix& m : c.factor_maps()) maps.push_back(matrix_to_json(m));
  return Json{{"shape", c.shape().dims()}, {"maps", maps}};
}

Json verification_to_json(const VerificationReport& r, bool include_elapsed) {
  Json ces = Json::array();
  for (const PointSet& s : r.counterexamples) ces.push_back(point_set_to_json(s));
  Json counts = Json::array();
  for (const CountEntry& c : r.counts) {
    counts.push_back(Json{{"field", c.field}, {"shape", c.shape}, {"what", c.what},
                          {"value", c.value}});
  }
  Json out{{"statement_id", r.statement_id},
           {"success", r.success()},
           {"shapes_checked", r.shapes_checked},
           {"fields_checked", r.fields_checked},
           {"reduction_used", r.reduction_used},
           {"counts", counts},
           {"counterexamples", ces},
           {"failures", r.failures},
           {"notes", r.notes}};
  if (include_elapsed) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace segre::cli
