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


#ifndef FLAGSCHEME_FLAG_SCHEME_HPP_
#define FLAGSCHEME_FLAG_SCHEME_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flagscheme/incidence.hpp"
#include "flagscheme/scheme.hpp"

namespace flagscheme {

struct Flag {
  int point = 0;
  int line = 0;
  auto operator<=>(const Flag&) const = default;
};

struct FlagSchemeData {
  std::vector<Flag> flags;
  RelationMatrix relation;
  GqOrder order;
};

// All incident pairs sorted by (point, line).
std::vector<Flag> enumerate_flags(const IncidenceStructure& st);

// Relation index 0..7 of the ordered pair (f1, f2).
int classify_pair(const IncidenceStructure& st, const Flag& f1,
                  const Flag& f2);

// Runs verify_gq, then fills the relation matrix by rows.
FlagSchemeData build_flag_scheme(const IncidenceStructure& st);

struct DualityReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  // First counterexample, as flag indices in the original scheme.
  std::size_t x = 0, y = 0;
  int relation = 0, dual_relation = 0;
  std::string message;
};

// Compares the scheme on st with the one on dualize(st) under
// (p,L) -> (L,p); relation i must map to delta(i).
DualityReport check_duality_map(const IncidenceStructure& st);

}  // namespace flagscheme

#endif  // FLAGSCHEME_FLAG_SCHEME_HPP_
