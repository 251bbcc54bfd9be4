// Copyright 2026 The flagscheme Authors.
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


// Command-line front end: build, scheme, fusions, reconstruct, selftest.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "flagscheme/errors.hpp"
#include "flagscheme/incidence.hpp"
#include "flagscheme/report.hpp"
#include "flagscheme/scheme_io.hpp"

namespace fs = flagscheme;

namespace {

constexpr int kExitUsage = 2;

template <typename Write>
void write_file(const std::string& path, Write&& write) {
  std::ofstream out(path);
  if (!out) throw fs::UsageError("cannot write " + path);
  write(out);
  if (!out) throw fs::Error("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag association schemes of generalized quadrangles"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  app.add_option("--format", format_name, "Report format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* build = app.add_subcommand("build", "Build a generalized quadrangle");
  std::string kind, build_out;
  int param = 0;
  build->add_option("kind", kind, "grid, dual-grid or symplectic")
      ->required()
      ->check(CLI::IsMember({"grid", "dual-grid", "symplectic"}));
  build->add_option("param", param, "grid size s, or prime q")->required();
  build->add_option("-o,--output", build_out, "Structure JSON file");

  auto* scheme = app.add_subcommand("scheme", "Flag scheme of a structure");
  std::string scheme_in, scheme_out, tensor_csv, valency_csv, fused_out;
  scheme->add_option("structure", scheme_in, "Structure JSON file")
      ->required();
  scheme->add_option("-o,--output", scheme_out, "Scheme matrix file");
  scheme->add_option("--tensor-csv", tensor_csv, "Intersection numbers CSV");
  scheme->add_option("--valency-csv", valency_csv, "Valencies CSV");
  scheme->add_option("--fused-output", fused_out,
                     "4-class fused matrix file (only when s = t)");

  auto* fusions = app.add_subcommand("fusions", "Fusions of the flag scheme");
  std::vector<int> numeric;
  bool symbolic = false;
  std::string fusions_out;
  auto* num_opt = fusions->add_option("--numeric", numeric, "Parameters s t")
                      ->expected(2);
  auto* sym_opt = fusions->add_flag("--symbolic", symbolic,
                                    "Classify every partition symbolically");
  num_opt->excludes(sym_opt);
  fusions->add_option("-o,--output", fusions_out, "Fusion CSV file");

  auto* recon = app.add_subcommand("reconstruct",
                                   "Rebuild the quadrangle from a scheme");
  std::string recon_in, recon_out;
  int classes = 0;
  std::optional<std::uint64_t> seed;
  recon->add_option("scheme", recon_in, "Scheme matrix file")->required();
  recon->add_option("--classes", classes, "7 or 4")
      ->required()
      ->check(CLI::IsMember({7, 4}));
  recon->add_option("--scramble", seed, "Seed for a vertex and class scramble");
  recon->add_option("-o,--output", recon_out, "Structure JSON file");

  auto* selftest = app.add_subcommand("selftest", "Symbolic self-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (*fusions && numeric.empty() && !symbolic) {
    std::cerr << "fusions: give --numeric S T or --symbolic\n";
    return kExitUsage;
  }

  try {
    const auto format = fs::parse_format(format_name);
    std::optional<fs::Report> report;
    if (*build) {
      auto r = fs::run_build(kind, param);
      if (!build_out.empty()) fs::save_structure(r.structure, build_out);
      report = std::move(r.report);
    } else if (*scheme) {
      const auto st = fs::load_structure(scheme_in);
      auto r = fs::run_scheme(st);
      if (!scheme_out.empty())
        fs::save_scheme(scheme_out, r.data.relation, &r.data.flags);
      if (!tensor_csv.empty())
        write_file(tensor_csv,
                   [&](std::ostream& os) { fs::write_tensor_csv(os, r.tensor); });
      if (!valency_csv.empty())
        write_file(valency_csv, [&](std::ostream& os) {
          fs::write_valency_csv(os, r.tensor);
        });
      if (!fused_out.empty()) {
        if (!r.fused)
          throw fs::UsageError("--fused-output needs a structure with s = t");
        fs::save_scheme(fused_out, *r.fused);
      }
      report = std::move(r.report);
    } else if (*fusions) {
      report = symbolic ? fs::run_fusions_symbolic()
                        : fs::run_fusions_numeric(numeric[0], numeric[1]);
      if (!fusions_out.empty())
        write_file(fusions_out, [&](std::ostream& os) {
          report->write(os, fs::ReportFormat::kCsv);
        });
    } else if (*recon) {
      const auto file = fs::load_scheme(recon_in);
      auto r = fs::run_reconstruct(file.relation, classes, seed);
      if (!recon_out.empty() && r.structure)
        fs::save_structure(*r.structure, recon_out);
      report = std::move(r.report);
    } else if (*selftest) {
      report = fs::run_selftest();
    }
    report->write(std::cout, format);
    return report->exit_code();
  } catch (const fs::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::CompositeParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::UnsupportedParameters& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::Error& e) {
    std::cout << "verdict: FAIL\nfailure: " << e.what() << '\n';
    return 1;
  }
}
