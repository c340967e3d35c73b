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


#include "commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <ctime>
#include <mutex>

#include "segre/projective.hpp"
#include "segre/random.hpp"

namespace segre::cli {

namespace {

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

std::vector<ProjPoint> factor_points(const PointSet& s, std::size_t i) {
  std::vector<ProjPoint> out;
  for (const MPoint& p : s) out.push_back(p.factor(i));
  return out;
}

Json shapes_json(const std::vector<Shape>& shapes) {
  Json out = Json::array();
  for (const Shape& s : shapes) out.push_back(s.dims());
  return out;
}

void check_contract(bool ok, const std::string& what) {
  if (!ok) throw Error("construction contract violated: " + what);
}

}  // namespace

Json make_report(const std::string& kind, Json input, Json result, bool stamped,
                 double elapsed_ms) {
  Json out{{"schema_version", kSchemaVersion},
           {"tool", kToolName},
           {"tool_version", kToolVersion},
           {"kind", kind},
           {"input", std::move(input)},
           {"result", std::move(result)}};
  if (stamped) {
    out["timestamp"] = utc_now();
    out["elapsed_ms"] = elapsed_ms;
  }
  return out;
}

Json analyze_result(const PointSet& s) { return defect_report_to_json(analyze(s)); }

Json embed_result(const PointSet& s) {
  Json rows = Json::array();
  for (const MPoint& p : s) rows.push_back(vector_to_json(segre_embed(s.shape(), p)));
  const Defect d = defect(s);
  return Json{{"ambient_dim", s.shape().r()},
              {"span_dim", d.span_dim},
              {"defect_e", d.e},
              {"embedded", rows}};
}

Json fit_curve_result(const PointSet& s) {
  const std::optional<RncCurve> curve = fit_multidegree_one(s);
  const std::vector<ProjPoint> first = factor_points(s, 0);
  Json witnesses = Json::array();
  for (std::size_t i = 1; i < s.shape().k(); ++i) {
    const std::optional<Matrix> m = projectively_equivalent(first, factor_points(s, i));
    witnesses.push_back(Json{{"factor", i + 1},
                             {"map", m ? matrix_to_json(*m) : Json(nullptr)}});
  }
  return Json{{"status", curve ? "fitted" : "no curve"},
              {"curve", curve ? curve_to_json(*curve) : Json(nullptr)},
              {"witnesses", witnesses}};
}

Json enumerate_input(const EnumerateRequest& req) {
  Json filters{{"nondegenerate", req.filters.nondegenerate},
               {"minimal", req.filters.minimal},
               {"circuit", req.filters.circuit},
               {"min_defect", req.filters.min_defect},
               {"max_defect", req.filters.max_defect ? Json(*req.filters.max_defect)
                                                     : Json(nullptr)}};
  return Json{{"shape", req.shape.dims()},
              {"field", field_to_json(req.field)},
              {"cardinality", req.cardinality},
              {"filters", filters},
              {"reduction", req.reduce ? "fix_first_point" : "none"},
              {"limit", req.limit}};
}

Json enumerate_result(const EnumerateRequest& req) {
  EnumTask task{req.shape, req.field, req.cardinality, req.filters};
  task.reduction = req.reduce ? Reduction::kFixFirstPoint : Reduction::kNone;
  task.budget = req.budget;
  const PointTable table(req.shape, req.field);

  // Every worker walks its share in lexicographic order, so keeping each
  // worker's first `limit` hits is enough to recover the global first ones.
  const std::size_t jobs = std::max<std::size_t>(req.jobs, 1);
  std::vector<std::vector<std::pair<std::vector<std::uint32_t>, int>>> kept(jobs);
  const EnumStats stats = enumerate_parallel(
      task, table, jobs, [&](const EnumHit& h, std::size_t w) {
        if (kept[w].size() < req.limit) {
          kept[w].emplace_back(std::vector<std::uint32_t>(h.indices.begin(), h.indices.end()),
                               h.e);
        }
      });
  std::vector<std::pair<std::vector<std::uint32_t>, int>> all;
  for (auto& v : kept) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  if (all.size() > req.limit) all.resize(req.limit);

  Json sets = Json::array();
  for (const auto& [idx, e] : all) {
    sets.push_back(Json{{"defect_e", e}, {"points", points_to_json(table.make_set(idx))}});
  }
  return Json{{"points_in_space", table.size()},
              {"emitted", stats.emitted},
              {"total", stats.total},
              {"nodes", stats.nodes},
              {"listed", sets.size()},
              {"truncated", stats.emitted > sets.size()},
              {"sets", sets}};
}

VerificationReport run_verify(const VerifyRequest& req) {
  const std::string& id = req.statement_id;
  const VerifyOptions& opt = req.options;
  auto fields_or = [&](std::vector<std::uint32_t> dflt) {
    return req.fields.empty() ? dflt : req.fields;
  };
  auto single_field = [&](std::uint32_t dflt) {
    if (req.fields.size() > 1) throw PreconditionError(id + " takes a single field");
    return req.fields.empty() ? dflt : req.fields.front();
  };
  if (id == "e2") {
    return verify_prop_e2(fields_or({2, 3}),
                          req.shapes.empty() ? default_e2_shapes() : req.shapes, opt);
  }
  if (id == "e3") {
    if (!req.shapes.empty()) throw PreconditionError("e3 runs on fixed shapes; drop --shape");
    return verify_thm_e3(fields_or({2, 3}), req.positive_field, opt);
  }
  if (id == "e301") {
    return verify_prop_e301(single_field(5),
                            req.shapes.empty() ? default_e301_shapes() : req.shapes, opt);
  }
  const std::optional<Bound> bound = parse_bound(id);
  if (!bound) {
    throw PreconditionError("unknown statement id \"" + id +
                            "\" (expected e2, e3, e301, n3, n4a, n4b or n400)");
  }
  BoundParams params = default_bound_params(*bound);
  params.field = single_field(params.field);
  if (!req.shapes.empty()) params.shapes = req.shapes;
  if (req.cap) params.max_cardinality = *req.cap;
  if (req.e) params.e = *req.e;
  return verify_bounds(*bound, params, opt);
}

Json verify_input(const VerifyRequest& req) {
  Json out{{"statement_id", req.statement_id},
           {"fields", req.fields},
           {"shapes", shapes_json(req.shapes)},
           {"positive_field", req.positive_field ? Json(*req.positive_field) : Json(nullptr)},
           {"cap", req.cap ? Json(*req.cap) : Json(nullptr)},
           {"e", req.e ? Json(*req.e) : Json(nullptr)},
           {"seed", req.options.seed}};
  return out;
}

PointSet run_construct(const ConstructRequest& req) {
  Rng rng(req.seed);
  if (req.kind.starts_with("p2p1:")) {
    const std::optional<P2P1Kind> kind = parse_p2p1_kind(req.kind.substr(5));
    if (!kind) throw PreconditionError("unknown construction \"" + req.kind + "\"");
    if (req.shape && !(*req.shape == Shape({2, 1}))) {
      throw PreconditionError(req.kind + " lives on shape 2,1");
    }
    PointSet s = construct_p2p1_circuit(req.field, *kind, rng);
    const DefectReport r = analyze(s);
    check_contract(s.size() == 5, "five points");
    check_contract(r.circuit, "circuit");
    check_contract(r.nondegenerate, "nondegenerate");
    return s;
  }
  if (!req.shape) throw PreconditionError(req.kind + " needs --shape");
  const Shape& shape = *req.shape;
  const long k = static_cast<long>(shape.k());
  if (req.kind == "n2") {
    // Factor 1 carries the collinear points, so it only needs n_1 - 1 extras.
    int m = shape.n(0) - 1;
    for (std::size_t h = 1; h < shape.k(); ++h) m = std::max(m, shape.n(h));
    PointSet s = construct_example_n2(shape, req.field, req.e, rng);
    const DefectReport r = analyze(s);
    check_contract(static_cast<long>(s.size()) == req.e + 2 + m, "#S = e + 2 + m");
    check_contract(r.defect_e == req.e, "defect e");
    check_contract(r.nondegenerate, "nondegenerate");
    return s;
  }
  if (req.kind == "extremal") {
    PointSet s = construct_extremal_n400(shape, req.field, req.e, rng);
    const DefectReport r = analyze(s);
    check_contract(static_cast<long>(s.size()) == shape.m() + k + req.e, "#S = m + k + e");
    check_contract(r.defect_e == req.e, "defect e");
    check_contract(r.minimal, "minimal");
    check_contract(r.nondegenerate, "nondegenerate");
    return s;
  }
  throw PreconditionError("unknown construction \"" + req.kind +
                          "\" (expected n2, extremal, p2p1:twisted_cubic, "
                          "p2p1:conic_line or p2p1:three_lines)");
}

}  // namespace segre::cli
