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


#include "flagscheme/flag_scheme.hpp"

#include <algorithm>
#include <cstdint>

#include "flagscheme/formulas.hpp"
#include "parallel.hpp"

namespace flagscheme {

std::vector<Flag> enumerate_flags(const IncidenceStructure& st) {
  std::vector<Flag> flags;
  flags.reserve(st.incidence().size());
  for (const auto& [p, l] : st.incidence()) flags.push_back({p, l});
  return flags;  // incidence is already sorted
}

namespace {

bool collinear(const IncidenceStructure& st, int p, int q) {
  for (int l : st.lines_on(p))
    if (st.incident(q, l)) return true;
  return false;
}

bool lines_meet(const IncidenceStructure& st, int l, int m) {
  for (int p : st.points_on(l))
    if (st.incident(p, m)) return true;
  return false;
}

// Dense lookups for the whole structure.
class Classifier {
 public:
  explicit Classifier(const IncidenceStructure& st)
      : np_(static_cast<std::size_t>(st.num_points())),
        nl_(static_cast<std::size_t>(st.num_lines())),
        inc_(np_ * nl_, 0),
        coll_(np_ * np_, 0),
        meet_(nl_ * nl_, 0) {
    for (const auto& [p, l] : st.incidence()) inc_[p * nl_ + l] = 1;
    for (int l = 0; l < st.num_lines(); ++l)
      for (int a : st.points_on(l))
        for (int b : st.points_on(l)) coll_[a * np_ + b] = 1;
    for (int p = 0; p < st.num_points(); ++p)
      for (int a : st.lines_on(p))
        for (int b : st.lines_on(p)) meet_[a * nl_ + b] = 1;
  }

  int operator()(const Flag& f, const Flag& g) const {
    if (f.point == g.point) return f.line == g.line ? 0 : 1;
    if (f.line == g.line) return 2;
    if (inc_[g.point * nl_ + f.line]) return 3;
    if (inc_[f.point * nl_ + g.line]) return 4;
    if (coll_[f.point * np_ + g.point]) return 5;
    if (meet_[f.line * nl_ + g.line]) return 6;
    return 7;
  }

 private:
  std::size_t np_, nl_;
  std::vector<std::uint8_t> inc_, coll_, meet_;
};

}  // namespace

int classify_pair(const IncidenceStructure& st, const Flag& f1,
                  const Flag& f2) {
  if (f1.point == f2.point) return f1.line == f2.line ? 0 : 1;
  if (f1.line == f2.line) return 2;
  if (st.incident(f2.point, f1.line)) return 3;
  if (st.incident(f1.point, f2.line)) return 4;
  if (collinear(st, f1.point, f2.point)) return 5;
  if (lines_meet(st, f1.line, f2.line)) return 6;
  return 7;
}

FlagSchemeData build_flag_scheme(const IncidenceStructure& st) {
  FlagSchemeData data;
  data.order = verify_gq(st);
  data.flags = enumerate_flags(st);
  const std::size_t n = data.flags.size();
  data.relation = RelationMatrix(n, kFlagClasses);
  const Classifier classify(st);
  internal::parallel_chunks(
      n,
      [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t x = begin; x < end; ++x)
          for (std::size_t y = 0; y < n; ++y)
            data.relation.set(x, y, classify(data.flags[x], data.flags[y]));
      },
      64);
  return data;
}

DualityReport check_duality_map(const IncidenceStructure& st) {
  const auto original = build_flag_scheme(st);
  const auto dual = build_flag_scheme(dualize(st));
  const std::size_t n = original.flags.size();
  std::vector<std::size_t> image(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Flag swapped{original.flags[x].line, original.flags[x].point};
    image[x] = static_cast<std::size_t>(
        std::lower_bound(dual.flags.begin(), dual.flags.end(), swapped) -
        dual.flags.begin());
  }
  DualityReport report;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ++report.pairs_checked;
      const int r = original.relation(x, y);
      const int rd = dual.relation(image[x], image[y]);
      if (rd != flag_delta(r)) {
        report.pass = false;
        report.x = x;
        report.y = y;
        report.relation = r;
        report.dual_relation = rd;
        report.message = "flags " + std::to_string(x) + "," +
                         std::to_string(y) + ": relation " +
                         std::to_string(r) + " maps to " + std::to_string(rd);
        return report;
      }
    }
  report.message = "relation i maps to delta(i) on all " +
                   std::to_string(report.pairs_checked) + " pairs";
  return report;
}

}  // namespace flagscheme
