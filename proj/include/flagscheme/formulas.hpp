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

// Closed-form intersection numbers of the 7-class scheme on the flags of a
// GQ(s,t) and of its 4-class fusion {1,2},{3,4},{5,6},{7} (valid for s=t),
// plus the order-12 group acting on index triplets.

#ifndef FLAGSCHEME_FORMULAS_HPP_
#define FLAGSCHEME_FORMULAS_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flagscheme/poly.hpp"
#include "flagscheme/scheme.hpp"

namespace flagscheme {

inline constexpr int kFlagClasses = 7;
inline constexpr int kFusedClasses = 4;

// Pairing involution of the flag scheme: 3 <-> 4, everything else fixed.
constexpr int flag_star(int i) { return i == 3 ? 4 : i == 4 ? 3 : i; }
// Point-line duality on relation indices: 1<->2, 3<->4, 5<->6, 7 and 0 fixed.
constexpr int flag_delta(int i) {
  return (i == 0 || i == 7) ? i : (i % 2 == 1 ? i + 1 : i - 1);
}

// Valency of relation i (0..7) as a polynomial in s and t.
const BivariatePoly& eta_poly(int i);
// Intersection number p^k_{ij}, all indices in 0..7.
const BivariatePoly& p_poly(int k, int i, int j);

// Fused 4-class table, polynomials in s only (t already set equal to s).
const BivariatePoly& fused_eta_poly(int i);
const BivariatePoly& fused_p_poly(int k, int i, int j);
// The flag classes merged into fused class l: {0},{1,2},{3,4},{5,6},{7}.
const std::vector<int>& fused_block(int l);

// Numeric tensors obtained by evaluating the tables.
IntersectionTensor flag_tensor_at(std::int64_t s, std::int64_t t);
IntersectionTensor fused_tensor_at(std::int64_t s);

// ---------------------------------------------------------------------------
// Triplet group

struct Triplet {
  int k = 0, i = 0, j = 0;
  auto operator<=>(const Triplet&) const = default;
};

std::string to_string(const Triplet& tr);

// Element of G = <I, S, D>, written as the word I^power S^with_s D^with_d.
// Words act right to left: D first, then S, then I^power.
struct GroupElement {
  int power = 0;
  bool with_s = false;
  bool with_d = false;

  std::string name() const;
  auto operator<=>(const GroupElement&) const = default;
};

// The 12 elements in the order id, I, I2, S, IS, I2S, D, ID, I2D, SD, ISD,
// I2SD.
const std::array<GroupElement, 12>& group_elements();
// Parses "id", "I", "I2", "IS", "I2SD", ... Throws std::invalid_argument.
GroupElement parse_group_element(std::string_view word);

Triplet triplet_apply(const GroupElement& g, const Triplet& tr);

// The 44 orbit representatives with entries in 1..7.
const std::vector<Triplet>& orbit_representatives();
std::vector<Triplet> triplet_orbit(const Triplet& tr);

struct SelfCheckReport {
  std::size_t checks = 0;
  std::vector<std::string> notes;
};

// (a) the 12 words are distinct and closed under composition, (b) the
// orbits of the representatives tile {1..7}^3, (c) for every element and
// every triplet the transformed intersection polynomial obeys the scaling
// prescribed for that element. Throws OrbitMismatch or ScalingMismatch.
SelfCheckReport verify_triplet_orbits();

// Pairing, valency-balance and row-sum identities over the whole 8x8x8
// polynomial table.
// Throws IdentityFailure.
SelfCheckReport verify_identities();

// Each fused entry equals the block sum of flag entries at t = s, for every
// representative of the fused row class. Throws IdentityFailure
// (kFusedSum).
SelfCheckReport verify_fused_table();

}  // namespace flagscheme

#endif  // FLAGSCHEME_FORMULAS_HPP_
