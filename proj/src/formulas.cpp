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

#include "flagscheme/formulas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "flagscheme/errors.hpp"

namespace flagscheme {

namespace {

using P = BivariatePoly;
using Matrix8 = std::array<std::array<P, 8>, 8>;
using Matrix5 = std::array<std::array<P, 5>, 5>;

struct FlagTables {
  std::array<P, 8> eta;
  std::array<Matrix8, 8> p;
};

struct FusedTables {
  std::array<P, 5> eta;
  std::array<Matrix5, 5> p;
};

// Rows are i, columns are j of the matrix for fixed k.
FlagTables make_flag_tables() {
  const P s = P::s(), t = P::t();
  const P st = s * t;
  FlagTables tb;
  tb.eta = {1, t, s, st, st, st * t, s * st, st * st};

  auto& L = tb.p;
  // k = 0: p^0_{ij} = eta_i [j = i*].
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) L[0][i][j] = j == flag_star(i) ? tb.eta[i] : 0;

  L[1] = Matrix8{{
      {0, 1, 0, 0, 0, 0, 0, 0},
      {1, t - 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, s, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, st, 0, 0},
      {0, 0, s, s * (t - 1), 0, 0, 0, 0},
      {0, 0, 0, 0, st, st * (t - 1), 0, 0},
      {0, 0, 0, 0, 0, 0, 0, s * st},
      {0, 0, 0, 0, 0, 0, s * st, s * st * (t - 1)},
  }};
  L[2] = Matrix8{{
      {0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, t, 0, 0, 0},
      {1, 0, s - 1, 0, 0, 0, 0, 0},
      {0, t, 0, 0, t * (s - 1), 0, 0, 0},
      {0, 0, 0, 0, 0, 0, st, 0},
      {0, 0, 0, 0, 0, 0, 0, st * t},
      {0, 0, 0, st, 0, 0, st * (s - 1), 0},
      {0, 0, 0, 0, 0, st * t, 0, st * t * (s - 1)},
  }};
  L[3] = Matrix8{{
      {0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, t, 0, 0},
      {0, 1, 0, s - 1, 0, 0, 0, 0},
      {1, t - 1, 0, 0, 0, t * (s - 1), 0, 0},
      {0, 0, 0, 0, 0, 0, 0, st},
      {0, 0, 0, 0, 0, 0, st, st * (t - 1)},
      {0, 0, s, s * (t - 1), 0, 0, 0, st * (s - 1)},
      {0, 0, 0, 0, st, st * (t - 1), st * (s - 1), st * (s - 1) * (t - 1)},
  }};
  L[4] = Matrix8{{
      {0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 1, 0, t - 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, s, 0},
      {0, 0, 0, 0, 0, 0, 0, st},
      {1, 0, s - 1, 0, 0, 0, s * (t - 1), 0},
      {0, t, 0, 0, t * (s - 1), 0, 0, st * (t - 1)},
      {0, 0, 0, 0, 0, st, 0, st * (s - 1)},
      {0, 0, 0, st, 0, st * (t - 1), st * (s - 1), st * (s - 1) * (t - 1)},
  }};
  const P t2t1 = t * t - t + 1;
  const P s2s1 = s * s - s + 1;
  L[5] = Matrix8{{
      {0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 1, 0, t - 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, s},
      {0, 0, 0, 0, 0, 0, s, s * (t - 1)},
      {0, 1, 0, s - 1, 0, 0, 0, s * (t - 1)},
      {1, t - 1, 0, 0, 0, t * (s - 1), s * (t - 1), s * (t - 1) * (t - 1)},
      {0, 0, 0, 0, s, s * (t - 1), s * (s - 1), s * (s - 1) * (t - 1)},
      {0, 0, s, s * (t - 1), s * (t - 1), s * (t - 1) * (t - 1),
       s * (s - 1) * (t - 1), s * (s - 1) * t2t1},
  }};
  L[6] = Matrix8{{
      {0, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, t},
      {0, 0, 0, 0, 1, 0, s - 1, 0},
      {0, 0, 1, 0, t - 1, 0, 0, t * (s - 1)},
      {0, 0, 0, 0, 0, t, 0, t * (s - 1)},
      {0, 0, 0, t, 0, t * (t - 1), t * (s - 1), t * (s - 1) * (t - 1)},
      {1, 0, s - 1, 0, 0, t * (s - 1), s * (t - 1), t * (s - 1) * (s - 1)},
      {0, t, 0, t * (s - 1), t * (s - 1), t * (s - 1) * (t - 1),
       t * (s - 1) * (s - 1), t * (t - 1) * s2s1},
  }};
  L[7] = Matrix8{{
      {0, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 1, t - 1},
      {0, 0, 0, 0, 0, 1, 0, s - 1},
      {0, 0, 0, 1, 0, t - 1, s - 1, (s - 1) * (t - 1)},
      {0, 0, 0, 0, 1, t - 1, s - 1, (s - 1) * (t - 1)},
      {0, 0, 1, t - 1, t - 1, (t - 1) * (t - 1), (s - 1) * (t - 1),
       (s - 1) * t2t1},
      {0, 1, 0, s - 1, s - 1, (s - 1) * (t - 1), (s - 1) * (s - 1),
       s2s1 * (t - 1)},
      {1, t - 1, s - 1, (s - 1) * (t - 1), (s - 1) * (t - 1), (s - 1) * t2t1,
       s2s1 * (t - 1),
       1 - s + s * s - t - s * s * t + t * t - s * t * t + s * s * t * t},
  }};
  return tb;
}

FusedTables make_fused_tables() {
  const P s = P::s();
  const P s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  FusedTables tb;
  tb.eta = {1, 2 * s, 2 * s2, 2 * s3, s4};
  auto& M = tb.p;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) M[0][i][j] = i == j ? tb.eta[i] : 0;
  M[1] = Matrix5{{
      {0, 1, 0, 0, 0},
      {1, s - 1, s, 0, 0},
      {0, s, s * (s - 1), s2, 0},
      {0, 0, s2, s2 * (s - 1), s3},
      {0, 0, 0, s3, s3 * (s - 1)},
  }};
  M[2] = Matrix5{{
      {0, 0, 1, 0, 0},
      {0, 1, s - 1, s, 0},
      {1, s - 1, 0, s * (s - 1), s2},
      {0, s, s * (s - 1), s2, 2 * s2 * (s - 1)},
      {0, 0, s2, 2 * s2 * (s - 1), s2 * (s - 1) * (s - 1)},
  }};
  M[3] = Matrix5{{
      {0, 0, 0, 1, 0},
      {0, 0, 1, s - 1, s},
      {0, 1, s - 1, s, 2 * s * (s - 1)},
      {1, s - 1, s, 4 * s * (s - 1), 2 * s * (s - 1) * (s - 1)},
      {0, s, 2 * s * (s - 1), 2 * s * (s - 1) * (s - 1),
       s * (s - 1) * (s2 - s + 1)},
  }};
  M[4] = Matrix5{{
      {0, 0, 0, 0, 1},
      {0, 0, 0, 2, 2 * (s - 1)},
      {0, 0, 2, 4 * (s - 1), 2 * (s - 1) * (s - 1)},
      {0, 2, 4 * (s - 1), 4 * (s - 1) * (s - 1), 2 * (s - 1) * (s2 - s + 1)},
      {1, 2 * (s - 1), 2 * (s - 1) * (s - 1), 2 * (s - 1) * (s2 - s + 1),
       s4 - 2 * s3 + 2 * s2 - 2 * s + 1},
  }};
  return tb;
}

const FlagTables& flag_tables() {
  static const FlagTables tb = make_flag_tables();
  return tb;
}

const FusedTables& fused_tables() {
  static const FusedTables tb = make_fused_tables();
  return tb;
}

void check_index(int v, int hi) {
  if (v < 0 || v > hi) throw std::out_of_range("relation index out of range");
}

}  // namespace

const BivariatePoly& eta_poly(int i) {
  check_index(i, 7);
  return flag_tables().eta[i];
}

const BivariatePoly& p_poly(int k, int i, int j) {
  check_index(k, 7);
  check_index(i, 7);
  check_index(j, 7);
  return flag_tables().p[k][i][j];
}

const BivariatePoly& fused_eta_poly(int i) {
  check_index(i, 4);
  return fused_tables().eta[i];
}

const BivariatePoly& fused_p_poly(int k, int i, int j) {
  check_index(k, 4);
  check_index(i, 4);
  check_index(j, 4);
  return fused_tables().p[k][i][j];
}

const std::vector<int>& fused_block(int l) {
  static const std::vector<std::vector<int>> blocks{
      {0}, {1, 2}, {3, 4}, {5, 6}, {7}};
  check_index(l, 4);
  return blocks[l];
}

IntersectionTensor flag_tensor_at(std::int64_t s, std::int64_t t) {
  IntersectionTensor tensor(kFlagClasses);
  for (int i = 0; i <= kFlagClasses; ++i) {
    tensor.set_eta(i, eta_poly(i).evaluate(s, t));
    tensor.set_star(i, flag_star(i));
  }
  for (int k = 0; k <= kFlagClasses; ++k)
    for (int i = 0; i <= kFlagClasses; ++i)
      for (int j = 0; j <= kFlagClasses; ++j)
        tensor.at(k, i, j) = p_poly(k, i, j).evaluate(s, t);
  return tensor;
}

IntersectionTensor fused_tensor_at(std::int64_t s) {
  IntersectionTensor tensor(kFusedClasses);
  for (int i = 0; i <= kFusedClasses; ++i)
    tensor.set_eta(i, fused_eta_poly(i).evaluate(s, s));
  for (int k = 0; k <= kFusedClasses; ++k)
    for (int i = 0; i <= kFusedClasses; ++i)
      for (int j = 0; j <= kFusedClasses; ++j)
        tensor.at(k, i, j) = fused_p_poly(k, i, j).evaluate(s, s);
  return tensor;
}

// ---------------------------------------------------------------------------
// Triplet group

std::string to_string(const Triplet& tr) {
  return "(" + std::to_string(tr.k) + " " + std::to_string(tr.i) + " " +
         std::to_string(tr.j) + ")";
}

std::string GroupElement::name() const {
  std::string out;
  if (power == 1) out += "I";
  if (power == 2) out += "I2";
  if (with_s) out += "S";
  if (with_d) out += "D";
  return out.empty() ? "id" : out;
}

const std::array<GroupElement, 12>& group_elements() {
  static const std::array<GroupElement, 12> elems = [] {
    std::array<GroupElement, 12> out{};
    std::size_t n = 0;
    for (bool d : {false, true})
      for (bool s : {false, true})
        for (int power = 0; power < 3; ++power)
          out[n++] = GroupElement{power, s, d};
    return out;
  }();
  return elems;
}

GroupElement parse_group_element(std::string_view word) {
  for (const auto& g : group_elements())
    if (g.name() == word) return g;
  throw std::invalid_argument("unknown group element '" + std::string(word) +
                              "'");
}

namespace {

Triplet apply_i(const Triplet& x) {
  return {flag_star(x.i), x.j, flag_star(x.k)};
}
Triplet apply_s(const Triplet& x) {
  return {flag_star(x.k), flag_star(x.j), flag_star(x.i)};
}
Triplet apply_d(const Triplet& x) {
  return {flag_delta(x.k), flag_delta(x.i), flag_delta(x.j)};
}

int component(const Triplet& tr, int pos) {
  return pos == 0 ? tr.k : pos == 1 ? tr.i : tr.j;
}

}  // namespace

Triplet triplet_apply(const GroupElement& g, const Triplet& tr) {
  Triplet x = tr;
  if (g.with_d) x = apply_d(x);
  if (g.with_s) x = apply_s(x);
  for (int n = 0; n < g.power; ++n) x = apply_i(x);
  return x;
}

const std::vector<Triplet>& orbit_representatives() {
  static const std::vector<Triplet> reps{
      {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 5}, {1, 1, 6}, {1, 1, 7},
      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 7}, {1, 3, 3}, {1, 3, 4},
      {1, 3, 5}, {1, 3, 6}, {1, 3, 7}, {1, 4, 3}, {1, 4, 5}, {1, 4, 6},
      {1, 4, 7}, {1, 5, 5}, {1, 5, 6}, {1, 5, 7}, {1, 6, 6}, {1, 6, 7},
      {1, 7, 7}, {3, 3, 3}, {3, 3, 5}, {3, 3, 6}, {3, 3, 7}, {3, 4, 4},
      {3, 4, 5}, {3, 4, 7}, {3, 5, 5}, {3, 5, 6}, {3, 5, 7}, {3, 6, 5},
      {3, 6, 7}, {3, 7, 7}, {5, 5, 5}, {5, 5, 6}, {5, 5, 7}, {5, 6, 7},
      {5, 7, 7}, {7, 7, 7},
  };
  return reps;
}

std::vector<Triplet> triplet_orbit(const Triplet& tr) {
  std::set<Triplet> orbit;
  for (const auto& g : group_elements()) orbit.insert(triplet_apply(g, tr));
  return {orbit.begin(), orbit.end()};
}

SelfCheckReport verify_triplet_orbits() {
  SelfCheckReport report;
  std::vector<Triplet> all;
  for (int k = 1; k <= 7; ++k)
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) all.push_back({k, i, j});

  // Each element as a permutation of the 343 triplets.
  auto index_of = [](const Triplet& x) {
    return static_cast<std::size_t>(((x.k - 1) * 7 + (x.i - 1)) * 7 + x.j - 1);
  };
  using Perm = std::vector<std::size_t>;
  auto as_perm = [&](const GroupElement& g) {
    Perm p(all.size());
    for (std::size_t n = 0; n < all.size(); ++n)
      p[n] = index_of(triplet_apply(g, all[n]));
    return p;
  };
  std::set<Perm> words;
  for (const auto& g : group_elements()) words.insert(as_perm(g));
  if (words.size() != 12)
    throw OrbitMismatch("the 12 words of G do not give 12 distinct maps");
  for (const auto& a : words)
    for (const auto& b : words) {
      Perm c(a.size());
      for (std::size_t n = 0; n < a.size(); ++n) c[n] = a[b[n]];
      if (!words.count(c))
        throw OrbitMismatch("G is not closed under composition");
      ++report.checks;
    }
  report.notes.push_back("G has order 12 and is closed under composition");

  std::set<Triplet> covered;
  std::size_t total = 0;
  for (const auto& rep : orbit_representatives()) {
    const auto orbit = triplet_orbit(rep);
    total += orbit.size();
    for (const auto& x : orbit)
      if (!covered.insert(x).second)
        throw OrbitMismatch("orbits of " + to_string(rep) +
                            " and an earlier representative overlap at " +
                            to_string(x));
  }
  if (covered.size() != all.size() || total != all.size())
    throw OrbitMismatch("orbits of the 44 representatives cover " +
                        std::to_string(covered.size()) + " of 343 triplets");
  report.notes.push_back("44 orbits tile the 343 triplets");

  // Scaling: with tr' = tr or D(tr) and f' = p(tr) or its (s,t) swap,
  // p(g tr) * eta(den of tr') == f' * eta(num of tr'), where (num, den) is
  // (k, i) for I and I2S, (k, j) for I2 and IS, and none for S and id.
  for (const auto& g : group_elements()) {
    int num = -1, den = -1;
    if ((g.power == 1 && !g.with_s) || (g.power == 2 && g.with_s)) {
      num = 0;
      den = 1;
    } else if ((g.power == 2 && !g.with_s) || (g.power == 1 && g.with_s)) {
      num = 0;
      den = 2;
    }
    for (const auto& tr : all) {
      const Triplet base = g.with_d ? apply_d(tr) : tr;
      const P f = g.with_d ? p_poly(tr.k, tr.i, tr.j).swapped()
                           : p_poly(tr.k, tr.i, tr.j);
      const Triplet image = triplet_apply(g, tr);
      P lhs = p_poly(image.k, image.i, image.j);
      P rhs = f;
      if (num >= 0) {
        lhs *= eta_poly(component(base, den));
        rhs *= eta_poly(component(base, num));
      }
      if (lhs != rhs)
        throw ScalingMismatch("element " + g.name() + " on " + to_string(tr) +
                              ": p" + to_string(image) + " = " +
                              p_poly(image.k, image.i, image.j).to_string() +
                              " does not match the prescribed value");
      ++report.checks;
    }
  }
  report.notes.push_back("scaling rules hold for 12 x 343 (element, triplet)");
  return report;
}

SelfCheckReport verify_identities() {
  SelfCheckReport report;
  for (int k = 0; k <= 7; ++k) {
    const int ks = flag_star(k);
    for (int i = 0; i <= 7; ++i) {
      const int is = flag_star(i);
      P row;
      for (int j = 0; j <= 7; ++j) {
        const int js = flag_star(j);
        const P& p = p_poly(k, i, j);
        row += p;
        if (p != p_poly(ks, js, is))
          throw IdentityFailure(IdentityKind::kPairing, k, i, j,
                                p.to_string() + " != " +
                                    p_poly(ks, js, is).to_string());
        const P lhs = eta_poly(k) * p;
        if (lhs != eta_poly(i) * p_poly(is, j, ks))
          throw IdentityFailure(
              IdentityKind::kBalance, k, i, j, "eta_k p^k_ij != eta_i p^i*_jk*");
        if (lhs != eta_poly(j) * p_poly(js, ks, i))
          throw IdentityFailure(
              IdentityKind::kBalance, k, i, j, "eta_k p^k_ij != eta_j p^j*_k*i");
        report.checks += 3;
      }
      if (row != eta_poly(i))
        throw IdentityFailure(IdentityKind::kRowSum, k, i, -1,
                              "row sum " + row.to_string() + " != eta_i");
      ++report.checks;
    }
  }
  report.notes.push_back("pairing, balance and row-sum identities hold on the 8x8x8 table");
  return report;
}

SelfCheckReport verify_fused_table() {
  SelfCheckReport report;
  P total;
  for (int l = 0; l <= 4; ++l) {
    P eta;
    for (int i : fused_block(l)) eta += eta_poly(i).with_t_equal_s();
    if (eta != fused_eta_poly(l))
      throw IdentityFailure(
          IdentityKind::kFusedSum, l, -1, -1, "fused valency mismatch");
    total += eta;
  }
  const P s = P::s();
  if (total != (s + 1) * (s + 1) * (s * s + 1))
    throw IdentityFailure(
        IdentityKind::kFusedSum, -1, -1, -1, "fused order mismatch");
  for (int l = 0; l <= 4; ++l)
    for (int l1 = 0; l1 <= 4; ++l1)
      for (int l2 = 0; l2 <= 4; ++l2)
        for (int k : fused_block(l)) {
          P sum;
          for (int i : fused_block(l1))
            for (int j : fused_block(l2)) sum += p_poly(k, i, j);
          if (sum.with_t_equal_s() != fused_p_poly(l, l1, l2))
            throw IdentityFailure(IdentityKind::kFusedSum, l, l1, l2,
                "block sum " + sum.with_t_equal_s().to_string() +
                    " from representative " + std::to_string(k) +
                    " != " + fused_p_poly(l, l1, l2).to_string());
          ++report.checks;
        }
  report.notes.push_back("fused table equals block sums of the flag table");
  return report;
}

}  // namespace flagscheme
