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


#include <stdexcept>

#include "doctest.h"
#include "flagscheme/poly.hpp"

using flagscheme::BivariatePoly;

namespace {
const BivariatePoly s = BivariatePoly::s();
const BivariatePoly t = BivariatePoly::t();
}  // namespace

TEST_CASE("poly: arithmetic drops zero terms") {
  BivariatePoly a = s * t + 1;
  BivariatePoly b = a - s * t;
  CHECK(b == BivariatePoly(1));
  CHECK((a - a).is_zero());
  CHECK((a - a).terms().empty());
  CHECK((s + t) * (s - t) == s * s - t * t);
}

TEST_CASE("poly: evaluate matches direct arithmetic") {
  const BivariatePoly f = 1 - s + s * s - t - s * s * t + t * t -
                          s * t * t + s * s * t * t;
  for (int a = -3; a <= 6; ++a)
    for (int b = -3; b <= 6; ++b) {
      const long long direct = 1 - a + a * a - b - a * a * b + b * b -
                               a * b * b + a * a * b * b;
      CHECK(f.evaluate(a, b) == direct);
    }
  CHECK(f.evaluate(2, 2) == 5);
}

TEST_CASE("poly: substitutions") {
  const BivariatePoly f = s * t * t + 3 * s - t;
  CHECK(f.swapped() == s * s * t + 3 * t - s);
  CHECK(f.with_t_equal_s() == s * s * s + 2 * s);
  CHECK(f.with_t_equal_one() == 4 * s - 1);
  CHECK(f.with_s_equal_one() == t * t + 3 - t);
  CHECK(f.swapped().swapped() == f);
}

TEST_CASE("poly: canonical rendering") {
  CHECK(BivariatePoly().to_string() == "0");
  CHECK(BivariatePoly(-4).to_string() == "-4*s^0*t^0");
  CHECK((s * t - 2 * t + 1).to_string() == "1*s^1*t^1 - 2*s^0*t^1 + 1*s^0*t^0");
  CHECK((-s).to_string() == "-1*s^1*t^0");
}

TEST_CASE("poly: overflow is reported") {
  const BivariatePoly big = BivariatePoly::monomial(1, 40, 0);
  CHECK_THROWS_AS(big.evaluate(4, 1), std::overflow_error);
  CHECK(big.evaluate(2, 7) == (1LL << 40));
}
