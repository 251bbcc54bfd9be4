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

#include "flagscheme/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagscheme {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int e = 0; e < exp; ++e) r = checked_mul(r, base);
  return r;
}

}  // namespace

BivariatePoly::BivariatePoly(std::int64_t constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

BivariatePoly BivariatePoly::s() { return monomial(1, 1, 0); }
BivariatePoly BivariatePoly::t() { return monomial(1, 0, 1); }

BivariatePoly BivariatePoly::monomial(std::int64_t coeff, int deg_s,
                                      int deg_t) {
  if (deg_s < 0 || deg_t < 0)
    throw std::invalid_argument("negative exponent in monomial");
  BivariatePoly p;
  p.add_term({deg_s, deg_t}, coeff);
  return p;
}

std::int64_t BivariatePoly::coefficient(int deg_s, int deg_t) const {
  auto it = terms_.find({deg_s, deg_t});
  return it == terms_.end() ? 0 : it->second;
}

int BivariatePoly::degree_s() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int BivariatePoly::degree_t() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

void BivariatePoly::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& rhs) {
  BivariatePoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_)
      out.add_term({ma.first + mb.first, ma.second + mb.second},
                   checked_mul(ca, cb));
  terms_ = std::move(out.terms_);
  return *this;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out;
  out -= *this;
  return out;
}

std::int64_t BivariatePoly::evaluate(std::int64_t s, std::int64_t t) const {
  std::int64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    acc = checked_add(
        acc, checked_mul(c, checked_mul(checked_pow(s, m.first),
                                        checked_pow(t, m.second))));
  }
  return acc;
}

BivariatePoly BivariatePoly::swapped() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) out.add_term({m.second, m.first}, c);
  return out;
}

BivariatePoly BivariatePoly::with_t_equal_s() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) out.add_term({m.first + m.second, 0}, c);
  return out;
}

BivariatePoly BivariatePoly::with_t_equal_one() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) out.add_term({m.first, 0}, c);
  return out;
}

BivariatePoly BivariatePoly::with_s_equal_one() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) out.add_term({0, m.second}, c);
  return out;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << mag << "*s^" << m.first << "*t^" << m.second;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) {
  return os << p.to_string();
}

}  // namespace flagscheme
