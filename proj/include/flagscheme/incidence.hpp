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


#ifndef FLAGSCHEME_INCIDENCE_HPP_
#define FLAGSCHEME_INCIDENCE_HPP_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "flagscheme/graph.hpp"

namespace flagscheme {

struct GqOrder {
  int s = 0, t = 0;
  auto operator<=>(const GqOrder&) const = default;
};

// Points 0..num_points-1, lines 0..num_lines-1. The incidence list is kept
// sorted and free of duplicates.
class IncidenceStructure {
 public:
  using Pair = std::pair<int, int>;

  IncidenceStructure() = default;
  // Throws StructureError on out-of-range indices or duplicate pairs.
  IncidenceStructure(int num_points, int num_lines, std::vector<Pair> incidence);

  int num_points() const { return num_points_; }
  int num_lines() const { return num_lines_; }
  const std::vector<Pair>& incidence() const { return incidence_; }
  bool incident(int point, int line) const;

  // Lines through a point and points on a line, each sorted.
  const std::vector<int>& lines_on(int point) const { return lines_on_[point]; }
  const std::vector<int>& points_on(int line) const { return points_on_[line]; }

  std::vector<std::string> point_labels;
  std::vector<std::string> line_labels;

  // Structural equality; labels are ignored.
  friend bool operator==(const IncidenceStructure& a,
                         const IncidenceStructure& b) {
    return a.num_points_ == b.num_points_ && a.num_lines_ == b.num_lines_ &&
           a.incidence_ == b.incidence_;
  }

 private:
  int num_points_ = 0, num_lines_ = 0;
  std::vector<Pair> incidence_;
  std::vector<std::vector<int>> lines_on_, points_on_;
};

// (s+1)x(s+1) grid: point r*(s+1)+c, lines are the rows then the columns.
IncidenceStructure build_grid(int s);

// W(q) for prime q: points of PG(3,q), lines totally isotropic for
// x0*y1 - x1*y0 + x2*y3 - x3*y2. Throws CompositeParameter.
IncidenceStructure build_symplectic(int q);

IncidenceStructure dualize(const IncidenceStructure& st);

// Checks GQ1, GQ2, GQ3 in that order and returns (s,t). Throws the matching
// Gq*Violation with a witness.
GqOrder verify_gq(const IncidenceStructure& st);

// Collinearity graph on the points.
Graph point_graph(const IncidenceStructure& st);

IncidenceStructure load_structure(const std::filesystem::path& path);
void save_structure(const IncidenceStructure& st,
                    const std::filesystem::path& path);
// String forms of the same JSON format.
IncidenceStructure parse_structure(const std::string& text);
std::string dump_structure(const IncidenceStructure& st);

}  // namespace flagscheme

#endif  // FLAGSCHEME_INCIDENCE_HPP_
