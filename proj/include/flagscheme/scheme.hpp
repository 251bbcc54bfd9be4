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

// Generic association-scheme machinery: relation matrices, intersection
// tensors, parabolics, quotients, algebraic isomorphisms and thin schemes.

#ifndef FLAGSCHEME_SCHEME_HPP_
#define FLAGSCHEME_SCHEME_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "flagscheme/graph.hpp"

namespace flagscheme {

// Dense n x n matrix of relation indices 0..d.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  RelationMatrix(std::size_t n, int d);

  std::size_t size() const { return n_; }
  int classes() const { return d_; }

  int operator()(std::size_t x, std::size_t y) const {
    return cells_[x * n_ + y];
  }
  void set(std::size_t x, std::size_t y, int rel) {
    cells_[x * n_ + y] = static_cast<std::uint8_t>(rel);
  }
  std::span<const std::uint8_t> row(std::size_t x) const {
    return {cells_.data() + x * n_, n_};
  }

  // Returns the matrix with vertices renamed: result(perm[x], perm[y]) =
  // this(x, y).
  RelationMatrix permute_vertices(std::span<const std::size_t> perm) const;
  // Returns the matrix with classes renamed: result(x,y) = map[this(x,y)].
  // map[0] must be 0.
  RelationMatrix relabel_classes(std::span<const int> map) const;

  // Graph on the vertices whose edges are the pairs in the given classes.
  Graph graph_of(std::span<const int> classes) const;

  friend bool operator==(const RelationMatrix&,
                         const RelationMatrix&) = default;

 private:
  std::size_t n_ = 0;
  int d_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Intersection numbers p[k][i][j] of a d-class scheme together with the
// valencies eta and the pairing involution star.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(int d);

  int classes() const { return d_; }
  std::int64_t& at(int k, int i, int j) { return p_[index(k, i, j)]; }
  std::int64_t at(int k, int i, int j) const { return p_[index(k, i, j)]; }
  std::int64_t eta(int i) const { return eta_[i]; }
  int star(int i) const { return star_[i]; }
  void set_eta(int i, std::int64_t v) { eta_[i] = v; }
  void set_star(int i, int v) { star_[i] = v; }

  std::span<const std::int64_t> valencies() const { return eta_; }
  std::span<const int> pairing() const { return star_; }

  // Sum of the valencies, i.e. the number of vertices.
  std::int64_t order() const;
  bool is_symmetric() const;
  bool is_commutative() const;

  friend bool operator==(const IntersectionTensor&,
                         const IntersectionTensor&) = default;

 private:
  std::size_t index(int k, int i, int j) const {
    const auto m = static_cast<std::size_t>(d_ + 1);
    return (static_cast<std::size_t>(k) * m + static_cast<std::size_t>(i)) *
               m +
           static_cast<std::size_t>(j);
  }
  int d_ = 0;
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> eta_;
  std::vector<int> star_;
};

// Computes the intersection numbers from one representative pair of each
// class and then confirms every pair of the matrix against them (AS1-AS4).
// Throws NotAScheme or MissingClass.
IntersectionTensor verify_scheme(const RelationMatrix& data);

// Checks the standard identities on a tensor:
//   (2) p[k][i][j] = p[k*][j*][i*]
//   (3) eta_k p[k][i][j] = eta_i p[i*][j][k*] = eta_j p[j*][k*][i]
//   (4) sum_j p[k][i][j] = eta_i
// Throws IdentityFailure naming the equation and the triple.
void check_tensor_identities(const IntersectionTensor& tensor);

// First entry where two tensors differ, described for a report; empty when
// they are equal.
std::string tensor_difference(const IntersectionTensor& got,
                              const IntersectionTensor& want);

struct Parabolic {
  std::vector<int> classes;  // sorted, contains 0
  std::vector<std::vector<std::size_t>> blocks;
  bool trivial = false;
};

// Exhaustive over the 2^d subsets containing 0. Equivalence is decided from
// the tensor and the blocks are then confirmed on the matrix.
std::vector<Parabolic> find_parabolics(const IntersectionTensor& tensor,
                                       const RelationMatrix& data);

// Tests one class subset (which must contain 0) and returns the parabolic
// if it is one.
std::optional<Parabolic> as_parabolic(const IntersectionTensor& tensor,
                                      const RelationMatrix& data,
                                      std::vector<int> classes);

struct QuotientScheme {
  std::vector<std::vector<std::size_t>> blocks;
  // fused_classes[c] lists the original classes whose pairs between blocks
  // form quotient class c. fused_classes[0] is the parabolic itself.
  std::vector<std::vector<int>> fused_classes;
  RelationMatrix relation;
};

// Blocks of the parabolic become vertices. Each pair of blocks is labelled
// by the set of original classes met between them; these sets must be
// pairwise equal or disjoint, otherwise QuotientIllDefined is thrown.
QuotientScheme quotient_scheme(const RelationMatrix& data, const Parabolic& e);

// Every permutation sigma of 0..d fixing 0 with
// second.at(sigma[k], sigma[i], sigma[j]) == first.at(k, i, j).
std::vector<std::vector<int>> find_algebraic_isomorphisms(
    const IntersectionTensor& first, const IntersectionTensor& second);

// Group of a thin scheme under the complex product.
class ThinGroup {
 public:
  explicit ThinGroup(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const;
  int element_order(int a) const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  // Dihedral of order 2m (m >= 2): an element r of order m and an
  // involution f outside <r> with f r f = r^-1.
  bool is_dihedral() const;

 private:
  std::vector<std::vector<int>> table_;
};

ThinGroup thin_group_table(const IntersectionTensor& tensor);
ThinGroup thin_group_table(const RelationMatrix& data);

// CSV exports.
void write_tensor_csv(std::ostream& os, const IntersectionTensor& tensor);
void write_valency_csv(std::ostream& os, const IntersectionTensor& tensor);

}  // namespace flagscheme

#endif  // FLAGSCHEME_SCHEME_HPP_
