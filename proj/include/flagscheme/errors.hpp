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

#ifndef FLAGSCHEME_ERRORS_HPP_
#define FLAGSCHEME_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagscheme {

// Root of every exception thrown by the library. Each subclass carries the
// concrete witness that triggered it so callers can print or inspect it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-format problems (JSON structure files, scheme matrix files).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what)
      : Error("parse error at line " + std::to_string(line) + " (" + field +
              "): " + what),
        line_(line),
        field_(std::move(field)) {}
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class CompositeParameter : public Error {
 public:
  explicit CompositeParameter(long long q)
      : Error("parameter " + std::to_string(q) + " is not prime"), q_(q) {}
  long long value() const { return q_; }

 private:
  long long q_;
};

// Structural problems with an incidence structure that make it unusable
// before any axiom is consulted (index out of range, duplicate pair).
class StructureError : public Error {
 public:
  using Error::Error;
};

// A failed generalized-quadrangle axiom. For GQ1 the witness is a pair of
// points, for GQ2 a pair of lines, for GQ3 an anti-flag (point, line).
class GqViolation : public Error {
 public:
  GqViolation(int axiom, int first, int second, const std::string& what)
      : Error("GQ" + std::to_string(axiom) + " violated: " + what),
        axiom_(axiom),
        witness_(first, second) {}
  int axiom() const { return axiom_; }
  std::pair<int, int> witness() const { return witness_; }

 private:
  int axiom_;
  std::pair<int, int> witness_;
};

class Gq1Violation : public GqViolation {
 public:
  Gq1Violation(int p, int q, const std::string& what)
      : GqViolation(1, p, q, what) {}
};

class Gq2Violation : public GqViolation {
 public:
  Gq2Violation(int l, int m, const std::string& what)
      : GqViolation(2, l, m, what) {}
};

class Gq3Violation : public GqViolation {
 public:
  Gq3Violation(int point, int line, const std::string& what)
      : GqViolation(3, point, line, what) {}
};

// Relation matrix fails an association-scheme axiom. For AS4 failures the
// triple (k, i, j) names the intersection number that is not constant and
// (x, y) is a pair in R_k whose count differs from the representative's.
class NotAScheme : public Error {
 public:
  struct Witness {
    int axiom = 4;
    int k = -1, i = -1, j = -1;
    std::size_t x = 0, y = 0;
    long long expected = 0, observed = 0;
  };
  NotAScheme(const Witness& w, const std::string& what)
      : Error("not an association scheme (AS" + std::to_string(w.axiom) +
              "): " + what),
        witness_(w) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

class MissingClass : public Error {
 public:
  explicit MissingClass(int k)
      : Error("relation " + std::to_string(k) + " is empty"), k_(k) {}
  int relation() const { return k_; }

 private:
  int k_;
};

class QuotientIllDefined : public Error {
 public:
  QuotientIllDefined(std::size_t a, std::size_t b, const std::string& what)
      : Error("quotient ill-defined on blocks " + std::to_string(a) + ", " +
              std::to_string(b) + ": " + what),
        blocks_(a, b) {}
  std::pair<std::size_t, std::size_t> blocks() const { return blocks_; }

 private:
  std::pair<std::size_t, std::size_t> blocks_;
};

class NotThin : public Error {
 public:
  NotThin(int relation, long long valency)
      : Error("scheme is not thin: relation " + std::to_string(relation) +
              " has valency " + std::to_string(valency)),
        relation_(relation) {}
  int relation() const { return relation_; }

 private:
  int relation_;
};

class NotSrg : public Error {
 public:
  NotSrg(std::size_t u, std::size_t v, const std::string& what)
      : Error("graph is not strongly regular: " + what), witness_(u, v) {}
  std::pair<std::size_t, std::size_t> witness() const { return witness_; }

 private:
  std::pair<std::size_t, std::size_t> witness_;
};

// Symbolic self-checks of the closed-form tables.
enum class IdentityKind {
  kPairing,   // p[k][i][j] = p[k*][j*][i*]
  kBalance,   // eta_k p[k][i][j] = eta_i p[i*][j][k*] and its mirror
  kRowSum,    // sum_j p[k][i][j] = eta_i
  kFusedSum,  // fused entries are block sums of flag entries
};

inline const char* identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::kPairing: return "pairing";
    case IdentityKind::kBalance: return "valency balance";
    case IdentityKind::kRowSum: return "row sum";
    case IdentityKind::kFusedSum: return "fused block sum";
  }
  return "?";
}

class IdentityFailure : public Error {
 public:
  IdentityFailure(IdentityKind kind, int k, int i, int j,
                  const std::string& what)
      : Error(std::string(identity_name(kind)) + " identity fails at (" +
              std::to_string(k) + "," + std::to_string(i) + "," +
              std::to_string(j) + "): " + what),
        kind_(kind),
        k_(k),
        i_(i),
        j_(j) {}
  IdentityKind kind() const { return kind_; }
  int k() const { return k_; }
  int i() const { return i_; }
  int j() const { return j_; }

 private:
  IdentityKind kind_;
  int k_, i_, j_;
};

class OrbitMismatch : public Error {
 public:
  using Error::Error;
};

class ScalingMismatch : public Error {
 public:
  using Error::Error;
};

class NotAFusion : public Error {
 public:
  using Error::Error;
};

class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

// Reconstruction failures.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

class NotParabolic : public Error {
 public:
  using Error::Error;
};

class NoIsomorphism : public Error {
 public:
  using Error::Error;
};

class CoverViolation : public Error {
 public:
  CoverViolation(std::size_t vertex, const std::string& what)
      : Error("clique cover violated at vertex " + std::to_string(vertex) +
              ": " + what),
        vertex_(vertex) {}
  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

class NotBipartite : public Error {
 public:
  NotBipartite(std::size_t clique_a, std::size_t clique_b)
      : Error("clique-intersection graph has an odd cycle through cliques " +
              std::to_string(clique_a) + " and " + std::to_string(clique_b)),
        witness_(clique_a, clique_b) {}
  std::pair<std::size_t, std::size_t> witness() const { return witness_; }

 private:
  std::pair<std::size_t, std::size_t> witness_;
};

class GqAxiomFailure : public Error {
 public:
  using Error::Error;
};

// Bad command-line arguments or inputs of the wrong shape for a command.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace flagscheme

#endif  // FLAGSCHEME_ERRORS_HPP_
