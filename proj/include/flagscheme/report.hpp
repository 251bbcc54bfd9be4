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


#ifndef FLAGSCHEME_REPORT_HPP_
#define FLAGSCHEME_REPORT_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "flagscheme/flag_scheme.hpp"
#include "flagscheme/incidence.hpp"
#include "flagscheme/scheme.hpp"

namespace flagscheme {

enum class ReportFormat { kText, kJson, kCsv };

ReportFormat parse_format(std::string_view name);  // throws UsageError

// Ordered key/value record produced by each command. Rendering is a pure
// function of the fields, so equal inputs give byte-identical output.
class Report {
 public:
  using Value = std::variant<std::string, std::int64_t, bool,
                             std::vector<std::int64_t>,
                             std::vector<std::string>>;

  Report(std::string command, std::optional<std::uint64_t> seed);

  void add(std::string key, Value value);
  // Records a failed check. The verdict becomes FAIL.
  void fail(std::string key, std::string message);

  const std::string& command() const { return command_; }
  bool pass() const { return pass_; }
  int exit_code() const { return pass_ ? 0 : 1; }
  const std::vector<std::pair<std::string, Value>>& fields() const {
    return fields_;
  }
  // Optional table for the csv format; header row first.
  std::vector<std::vector<std::string>> table;

  void write(std::ostream& os, ReportFormat format) const;
  std::string render(ReportFormat format) const;

 private:
  std::string command_;
  std::optional<std::uint64_t> seed_;
  std::vector<std::pair<std::string, Value>> fields_;
  bool pass_ = true;
};

std::string order_string(const GqOrder& o);

struct BuildResult {
  IncidenceStructure structure;
  Report report;
};

// kind is grid, dual-grid or symplectic.
BuildResult run_build(std::string_view kind, int param);

struct SchemeResult {
  FlagSchemeData data;
  IntersectionTensor tensor;
  std::optional<RelationMatrix> fused;  // set when s = t
  Report report;
};

SchemeResult run_scheme(const IncidenceStructure& st);

Report run_fusions_numeric(int s, int t);
Report run_fusions_symbolic();

struct ReconstructResult {
  std::optional<IncidenceStructure> structure;
  Report report;
};

// classes must be 7 or 4 and match the matrix. With a seed the matrix is
// scrambled (vertices and classes) before reconstruction.
ReconstructResult run_reconstruct(const RelationMatrix& data, int classes,
                                  std::optional<std::uint64_t> seed);

Report run_selftest();

}  // namespace flagscheme

#endif  // FLAGSCHEME_REPORT_HPP_
