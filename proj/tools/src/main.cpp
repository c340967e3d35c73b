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


#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using segre::cli::Json;

struct Output {
  std::string path;
  bool no_timestamp = false;
};

void emit(const Json& doc, const Output& out) {
  const std::string text = segre::cli::to_text(doc);
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw segre::Error("cannot write " + out.path);
  f << text;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<std::uint32_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(segre::cli::parse_field_flag(item).modulus());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of finite point sets on Segre varieties"};
  app.require_subcommand(1);
  app.set_version_flag("--version", segre::cli::kToolVersion);

  Output output;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", output.path, "Write the document here instead of stdout");
    sub->add_flag("--no-timestamp", output.no_timestamp,
                  "Leave out timestamp and elapsed time");
  };

  std::string file;
  CLI::App* analyze = app.add_subcommand("analyze", "Defect report of a point set file");
  CLI::App* embed = app.add_subcommand("embed", "Segre coordinates of a point set file");
  CLI::App* fit = app.add_subcommand("fit-curve", "Fit a multidegree (1,...,1) curve");
  for (CLI::App* sub : {analyze, embed, fit}) {
    sub->add_option("file", file, "PointSetFile JSON")->required();
    add_output(sub);
  }

  segre::cli::EnumerateRequest er;
  std::string er_shape, er_field = "2";
  int max_defect = -1;
  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate s-subsets of Y(F_p)");
  enumerate->add_option("--shape", er_shape, "Comma-separated dimensions")->required();
  enumerate->add_option("--field", er_field, "Prime p");
  enumerate->add_option("--size", er.cardinality, "Cardinality s")->required();
  enumerate->add_flag("--circuit", er.filters.circuit);
  enumerate->add_flag("--nondegenerate", er.filters.nondegenerate);
  enumerate->add_flag("--minimal", er.filters.minimal);
  enumerate->add_option("--min-defect", er.filters.min_defect);
  enumerate->add_option("--max-defect", max_defect);
  enumerate->add_flag("--reduce", er.reduce, "Fix the first point");
  enumerate->add_option("--limit", er.limit, "Sets listed in the report");
  enumerate->add_option("--jobs", er.jobs, "Worker threads");
  enumerate->add_option("--budget", er.budget, "Refuse tasks estimated above this many subsets");
  add_output(enumerate);

  segre::cli::VerifyRequest vr;
  std::string v_field, v_fields;
  std::vector<std::string> v_shapes;
  int cap = -1, v_e = -1;
  std::uint32_t positive = 0;
  CLI::App* verify = app.add_subcommand("verify", "Check a classification statement");
  verify->add_option("statement", vr.statement_id, "e2, e3, e301, n3, n4a, n4b or n400")
      ->required();
  verify->add_option("--field", v_field, "Prime p");
  verify->add_option("--fields", v_fields, "Comma-separated primes");
  verify->add_option("--shape", v_shapes, "Shape, repeatable")->take_all();
  verify->add_option("--positive-field", positive, "Prime for the e3 curve census");
  verify->add_option("--cap", cap, "Largest cardinality for n3, n4a, n4b");
  verify->add_option("--e", v_e, "Defect for n400");
  verify->add_option("--jobs", vr.options.jobs, "Worker threads");
  verify->add_option("--budget", vr.options.budget, "Per-enumeration work budget");
  verify->add_option("--seed", vr.options.seed, "Seed for randomized witnesses");
  verify->add_option("--max-counterexamples", vr.options.max_counterexamples, "Counterexamples kept in the report");
  add_output(verify);

  segre::cli::ConstructRequest cr;
  std::string c_shape, c_field = "5";
  CLI::App* construct = app.add_subcommand("construct", "Build an example point set");
  construct->add_option("kind", cr.kind,
                        "n2, extremal, p2p1:twisted_cubic, p2p1:conic_line, p2p1:three_lines")
      ->required();
  construct->add_option("--shape", c_shape, "Comma-separated dimensions");
  construct->add_option("--field", c_field, "Prime p (default 5)");
  construct->add_option("--e", cr.e, "Target defect");
  construct->add_option("--seed", cr.seed, "RNG seed")->required();
  construct->add_option("--out", output.path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : segre::cli::kExitError;
  }

  const auto start = std::chrono::steady_clock::now();
  const bool stamped = !output.no_timestamp;
  try {
    if (analyze->parsed() || embed->parsed() || fit->parsed()) {
      const segre::PointSet s = segre::cli::read_point_set_file(file);
      Json result;
      std::string kind;
      if (analyze->parsed()) {
        kind = "analyze";
        result = segre::cli::analyze_result(s);
      } else if (embed->parsed()) {
        kind = "embed";
        result = segre::cli::embed_result(s);
      } else {
        kind = "fit-curve";
        result = segre::cli::fit_curve_result(s);
      }
      emit(segre::cli::make_report(kind, segre::cli::point_set_to_json(s), std::move(result),
                                   stamped, ms_since(start)),
           output);
      return segre::cli::kExitOk;
    }
    if (enumerate->parsed()) {
      er.shape = segre::Shape::parse(er_shape);
      er.field = segre::cli::parse_field_flag(er_field);
      if (max_defect >= 0) er.filters.max_defect = max_defect;
      Json result = segre::cli::enumerate_result(er);
      emit(segre::cli::make_report("enumerate", segre::cli::enumerate_input(er),
                                   std::move(result), stamped, ms_since(start)),
           output);
      return segre::cli::kExitOk;
    }
    if (verify->parsed()) {
      if (!v_fields.empty()) vr.fields = parse_prime_list(v_fields);
      if (!v_field.empty()) vr.fields.push_back(segre::cli::parse_field_flag(v_field).modulus());
      for (const std::string& s : v_shapes) vr.shapes.push_back(segre::Shape::parse(s));
      if (positive != 0) vr.positive_field = positive;
      if (cap >= 0) vr.cap = cap;
      if (v_e >= 0) vr.e = v_e;
      const segre::VerificationReport rep = segre::cli::run_verify(vr);
      emit(segre::cli::make_report("verify", segre::cli::verify_input(vr),
                                   segre::cli::verification_to_json(rep, stamped), stamped,
                                   ms_since(start)),
           output);
      return rep.success() ? segre::cli::kExitOk : segre::cli::kExitCounterexample;
    }
    if (!c_shape.empty()) cr.shape = segre::Shape::parse(c_shape);
    cr.field = segre::cli::parse_field_flag(c_field);
    emit(segre::cli::point_set_to_json(segre::cli::run_construct(cr)), output);
    return segre::cli::kExitOk;
  } catch (const segre::BudgetExceeded& e) {
    std::cerr << "segre: " << e.what() << "\n";
    return segre::cli::kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "segre: " << e.what() << "\n";
    return segre::cli::kExitError;
  }
}
