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

#ifndef FLAGSCHEME_POLY_HPP_
#define FLAGSCHEME_POLY_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace flagscheme {

// Integer polynomial in the two quadrangle parameters s and t.
//
// Terms are keyed by (deg_s, deg_t). Zero coefficients are never stored, so
// two polynomials are equal exactly when their term maps are equal.
class BivariatePoly {
 public:
  using Monomial = std::pair<int, int>;
  using Terms = std::map<Monomial, std::int64_t>;

  BivariatePoly() = default;
  BivariatePoly(std::int64_t constant);  // NOLINT: implicit on purpose

  static BivariatePoly s();
  static BivariatePoly t();
  static BivariatePoly monomial(std::int64_t coeff, int deg_s, int deg_t);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int deg_s, int deg_t) const;
  int degree_s() const;
  int degree_t() const;

  BivariatePoly& operator+=(const BivariatePoly& rhs);
  BivariatePoly& operator-=(const BivariatePoly& rhs);
  BivariatePoly& operator*=(const BivariatePoly& rhs);

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) {
    return a += b;
  }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) {
    return a -= b;
  }
  friend BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) {
    return a *= b;
  }
  BivariatePoly operator-() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  // Exact evaluation; throws std::overflow_error if an intermediate value
  // leaves the 64-bit range.
  std::int64_t evaluate(std::int64_t s, std::int64_t t) const;

  // f(s,t) -> f(t,s).
  BivariatePoly swapped() const;
  // f(s,t) -> f(s,s); the result has no t terms.
  BivariatePoly with_t_equal_s() const;
  // f(s,t) -> f(s,1).
  BivariatePoly with_t_equal_one() const;
  // f(s,t) -> f(1,t).
  BivariatePoly with_s_equal_one() const;

  // Canonical rendering `c*s^a*t^b + ...`, terms sorted by (a,b) descending,
  // negative terms written as ` - |c|*s^a*t^b`. The zero polynomial is "0".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, std::int64_t c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p);

}  // namespace flagscheme

#endif  // FLAGSCHEME_POLY_HPP_
