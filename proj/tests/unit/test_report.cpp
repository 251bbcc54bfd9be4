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


#include <string>

#include "doctest.h"
#include "flagscheme/errors.hpp"
#include "flagscheme/fusion.hpp"
#include "flagscheme/report.hpp"

using namespace flagscheme;

TEST_CASE("report rendering") {
  Report rep("demo", 7);
  rep.add("count", std::int64_t{3});
  rep.add("flag", true);
  rep.add("sizes", std::vector<std::int64_t>{1, 4, 8});
  rep.add("names", std::vector<std::string>{"{0}", "{0,1}"});
  CHECK(rep.render(ReportFormat::kText) ==
        "command: demo\nseed: 7\ncount: 3\nflag: yes\nsizes: (1,4,8)\n"
        "names: {0} {0,1}\nverdict: PASS\n");
  CHECK(rep.render(ReportFormat::kCsv) ==
        "key,value\ncommand,demo\nseed,7\ncount,3\nflag,yes\n"
        "sizes,\"(1,4,8)\"\nnames,\"{0} {0,1}\"\nverdict,PASS\n");
  const auto json = rep.render(ReportFormat::kJson);
  CHECK(json.find("\"seed\": 7") != std::string::npos);
  CHECK(json.find("\"verdict\": \"PASS\"") != std::string::npos);
  CHECK(rep.exit_code() == 0);
  rep.fail("check", "broken");
  CHECK(rep.exit_code() == 1);
  CHECK(rep.render(ReportFormat::kText).find("check: FAIL: broken") !=
        std::string::npos);
  CHECK(Report("x", std::nullopt).render(ReportFormat::kText) ==
        "command: x\nseed: none\nverdict: PASS\n");
  CHECK(parse_format("csv") == ReportFormat::kCsv);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("command runners") {
  CHECK_THROWS_AS(run_build("symplectic", 6), CompositeParameter);
  CHECK_THROWS_AS(run_build("grid", 0), UsageError);
  CHECK_THROWS_AS(run_build("cube", 2), UsageError);
  const auto b = run_build("dual-grid", 2);
  CHECK(b.structure.num_points() == 6);
  CHECK(b.report.pass());

  const auto s = run_scheme(build_symplectic(2));
  CHECK(s.report.pass());
  REQUIRE(s.fused);
  CHECK(s.fused->classes() == 4);
  CHECK_FALSE(run_scheme(build_grid(2)).fused);

  const auto f = run_fusions_numeric(2, 2);
  CHECK(f.table.size() == 8);
  CHECK_THROWS_AS(run_fusions_numeric(1, 1), UnsupportedParameters);
  CHECK(run_fusions_symbolic().table.size() == 26);

  CHECK_THROWS_AS(run_reconstruct(s.data.relation, 4, std::nullopt),
                  UsageError);
  CHECK_THROWS_AS(run_reconstruct(s.data.relation, 5, std::nullopt),
                  UsageError);
  const auto r = run_reconstruct(*s.fused, 4, 3);
  CHECK(r.report.pass());
  REQUIRE(r.structure);
  CHECK(r.structure->num_points() == 15);
  CHECK(run_reconstruct(*s.fused, 4, 3).report.render(ReportFormat::kText) ==
        r.report.render(ReportFormat::kText));
  CHECK(run_selftest().pass());
}
