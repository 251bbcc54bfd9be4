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


#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "flagscheme/errors.hpp"
#include "flagscheme/flag_scheme.hpp"
#include "flagscheme/formulas.hpp"
#include "flagscheme/incidence.hpp"
#include "flagscheme/scheme.hpp"

using namespace flagscheme;

namespace {

RelationMatrix w2_matrix() {
  return build_flag_scheme(build_symplectic(2)).relation;
}

// Naive intersection count for one pair.
long long count_paths(const RelationMatrix& m, std::size_t x, std::size_t y,
                      int i, int j) {
  long long c = 0;
  for (std::size_t z = 0; z < m.size(); ++z)
    if (m(x, z) == i && m(z, y) == j) ++c;
  return c;
}

}  // namespace

TEST_CASE("scheme: tensor agrees with naive counts on every pair") {
  const auto m = build_flag_scheme(build_grid(2)).relation;
  const auto tensor = verify_scheme(m);
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y)
      for (int i = 0; i <= 7; ++i)
        for (int j = 0; j <= 7; ++j)
          REQUIRE(count_paths(m, x, y, i, j) == tensor.at(m(x, y), i, j));
  long long total = 0;
  for (auto e : tensor.valencies()) total += e;
  CHECK(total == 18);
  CHECK(tensor.order() == 18);
  CHECK_NOTHROW(check_tensor_identities(tensor));
}

TEST_CASE("scheme: single-entry corruption is caught") {
  auto m = w2_matrix();
  const int old = m(0, 5);
  m.set(0, 5, old == 7 ? 6 : 7);
  try {
    verify_scheme(m);
    FAIL("corruption not detected");
  } catch (const NotAScheme& e) {
    CHECK(e.witness().axiom == 3);
    CHECK(e.witness().x == 0);
    CHECK(e.witness().y == 5);
  }
}

TEST_CASE("scheme: consistent symmetric corruption reaches the AS4 pass") {
  auto m = w2_matrix();
  // find a 5-pair and move it (and its transpose) to class 6
  std::size_t x = 0, y = 0;
  for (y = 0; y < m.size(); ++y)
    if (m(x, y) == 5) break;
  m.set(x, y, 6);
  m.set(y, x, 6);
  try {
    verify_scheme(m);
    FAIL("corruption not detected");
  } catch (const NotAScheme& e) {
    CHECK(e.witness().axiom == 4);
    const auto& w = e.witness();
    CHECK(count_paths(m, w.x, w.y, w.i, w.j) == w.observed);
    CHECK(w.observed != w.expected);
  }
}

TEST_CASE("scheme: axiom 1, 2 and missing classes") {
  RelationMatrix m(3, 2);
  m.set(0, 1, 1);
  m.set(1, 0, 1);
  m.set(0, 2, 1);
  m.set(2, 0, 1);
  m.set(1, 2, 1);
  m.set(2, 1, 1);
  CHECK_THROWS_AS(verify_scheme(m), MissingClass);
  m.set(1, 1, 2);
  CHECK_THROWS_AS(verify_scheme(m), NotAScheme);
  RelationMatrix one(1, 0);
  const auto t = verify_scheme(one);
  CHECK(t.order() == 1);
  const auto g = thin_group_table(one);
  CHECK(g.order() == 1);
}

TEST_CASE("scheme: parabolics of the flag scheme") {
  const auto m = w2_matrix();
  const auto tensor = verify_scheme(m);
  const auto ps = find_parabolics(tensor, m);
  std::set<std::vector<int>> found;
  for (const auto& p : ps) found.insert(p.classes);
  CHECK(found.count({0}));
  CHECK(found.count({0, 1}));
  CHECK(found.count({0, 2}));
  CHECK(found.count({0, 1, 2, 3, 4, 5, 6, 7}));
  // brute force over all subsets on the matrix itself
  std::set<std::vector<int>> brute;
  for (unsigned mask = 1; mask < 256; mask += 2) {
    auto in = [&](int r) { return (mask >> r) & 1u; };
    bool ok = true;
    const auto n = m.size();
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (!in(m(x, y))) continue;
        if (!in(m(y, x))) ok = false;
        for (std::size_t z = 0; z < n && ok; ++z)
          if (in(m(y, z)) && !in(m(x, z))) ok = false;
      }
    if (!ok) continue;
    std::vector<int> cls;
    for (int r = 0; r < 8; ++r)
      if (in(r)) cls.push_back(r);
    brute.insert(cls);
  }
  CHECK(found == brute);
  for (const auto& p : ps) {
    CHECK(p.trivial == (p.classes.size() == 1 || p.classes.size() == 8));
    std::size_t covered = 0;
    for (const auto& b : p.blocks) covered += b.size();
    CHECK(covered == m.size());
  }
  CHECK_FALSE(as_parabolic(tensor, m, {0, 3}).has_value());
}

TEST_CASE("scheme: quotient by point classes is the point graph") {
  const auto m = w2_matrix();
  const auto tensor = verify_scheme(m);
  const auto e1 = as_parabolic(tensor, m, {0, 1});
  REQUIRE(e1.has_value());
  const auto q = quotient_scheme(m, *e1);
  CHECK(q.blocks.size() == 15);
  const std::vector<int> one{1};
  CHECK(srg_parameters(q.relation.graph_of(one)) ==
        SrgParameters{15, 6, 1, 3});
  CHECK(q.fused_classes[0] == std::vector<int>{0, 1});
  const auto e2 = as_parabolic(tensor, m, {0, 2});
  REQUIRE(e2.has_value());
  const auto q2 = quotient_scheme(m, *e2);
  CHECK(srg_parameters(q2.relation.graph_of(one)) ==
        SrgParameters{15, 6, 1, 3});
  const auto e0 = as_parabolic(tensor, m, {0});
  REQUIRE(e0.has_value());
  CHECK(quotient_scheme(m, *e0).relation == m);
}

TEST_CASE("scheme: quotient of the grid matches the point graph of the dual") {
  const auto st = build_grid(2);
  const auto data = build_flag_scheme(st);
  const auto tensor = verify_scheme(data.relation);
  const auto e2 = as_parabolic(tensor, data.relation, {0, 2});
  REQUIRE(e2.has_value());
  const auto q = quotient_scheme(data.relation, *e2);
  const std::vector<int> one{1};
  CHECK(srg_parameters(q.relation.graph_of(one)) ==
        srg_parameters(point_graph(dualize(st))));
}

TEST_CASE("scheme: algebraic isomorphisms") {
  const auto t = flag_tensor_at(2, 2);
  const auto isos = find_algebraic_isomorphisms(t, t);
  const std::vector<int> id{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(std::find(isos.begin(), isos.end(), id) != isos.end());
  const std::vector<int> delta{0, 2, 1, 4, 3, 6, 5, 7};
  CHECK(std::find(isos.begin(), isos.end(), delta) != isos.end());
  // group property
  std::set<std::vector<int>> all(isos.begin(), isos.end());
  for (const auto& a : isos)
    for (const auto& b : isos) {
      std::vector<int> c(8);
      for (int i = 0; i < 8; ++i) c[i] = a[b[i]];
      CHECK(all.count(c));
    }
  const auto g = verify_scheme(build_flag_scheme(build_grid(2)).relation);
  const auto gd =
      verify_scheme(build_flag_scheme(dualize(build_grid(2))).relation);
  const auto cross = find_algebraic_isomorphisms(g, gd);
  CHECK(std::find(cross.begin(), cross.end(), delta) != cross.end());
  CHECK(find_algebraic_isomorphisms(flag_tensor_at(2, 2), flag_tensor_at(3, 3))
            .empty());
}

TEST_CASE("scheme: thin case is dihedral of order 8") {
  const auto m = build_flag_scheme(build_grid(1)).relation;
  const auto g = thin_group_table(m);
  CHECK(g.order() == 8);
  CHECK(g.element_order(1) == 2);
  CHECK(g.element_order(3) == 4);
  CHECK(g.multiply(g.multiply(1, 3), 1) == 4);
  CHECK(g.inverse(3) == 4);
  CHECK(g.is_dihedral());
  CHECK_THROWS_AS(thin_group_table(w2_matrix()), NotThin);
}

TEST_CASE("scheme: csv export") {
  const auto t = flag_tensor_at(2, 2);
  std::ostringstream a, b;
  write_tensor_csv(a, t);
  write_valency_csv(b, t);
  CHECK(a.str().rfind("k,i,j,p\n0,0,0,1\n", 0) == 0);
  const std::string csv = a.str();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 513);
  CHECK(b.str() == "i,eta\n0,1\n1,2\n2,2\n3,4\n4,4\n5,8\n6,8\n7,16\n");
}
