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


#ifndef FLAGSCHEME_RECONSTRUCT_HPP_
#define FLAGSCHEME_RECONSTRUCT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flagscheme/graph.hpp"
#include "flagscheme/incidence.hpp"
#include "flagscheme/scheme.hpp"

namespace flagscheme {

struct CliqueCover {
  // Sorted vertex lists, ordered lexicographically.
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::vector<std::size_t>> vertex_to_cliques;
};

// ---------------------------------------------------------------------------
// 7 classes

struct Reconstruction7 {
  IncidenceStructure structure;
  GqOrder order;
  // Point and line of the structure that each vertex becomes.
  std::vector<int> vertex_point, vertex_line;
};

// Points are the classes of R0+R1, lines the classes of R0+R2. Throws
// ParameterMismatch, NotParabolic or GqAxiomFailure.
Reconstruction7 reconstruct_from_7class(const RelationMatrix& data);

struct Relabelling {
  RelationMatrix relation;
  // map[k] is the canonical class of input class k.
  std::vector<int> map;
  GqOrder order;  // parameters of the matching table
};

// Renames classes so that the tensor equals the flag table at some (s,t).
// Throws NoIsomorphism.
Relabelling relabel_to_canonical(const RelationMatrix& data);

// ---------------------------------------------------------------------------
// 4 classes

// Maximal cliques of the class-1 graph with the cover checks: every vertex
// on exactly two cliques of size s+1 and 2(s+1)(s^2+1) cliques in all, s
// taken from the class-1 degree. Does not verify the scheme axioms.
// Throws CoverViolation.
CliqueCover compute_clique_cover_4class(const RelationMatrix& data);
CliqueCover clique_cover_from_graph(const Graph& g, int s);

// Same as relabel_to_canonical for the fused table at some s.
Relabelling relabel_to_canonical_fused(const RelationMatrix& data);

struct LevelDecomposition {
  std::size_t base = 0;
  std::array<std::vector<std::size_t>, 5> levels;
  // 0 for P, 1 for L, per clique of the cover.
  std::vector<int> labels;
  std::array<std::size_t, 5> sizes() const;
};

// Builds the levels from x0 by walking to the other clique through each
// vertex, labelling cliques alternately. Throws GqAxiomFailure when a level
// disagrees with the relation row of x0 or the labels clash.
LevelDecomposition level_decomposition(const RelationMatrix& data,
                                       const CliqueCover& cover, int s,
                                       std::size_t x0);

struct Reconstruction4 {
  IncidenceStructure structure;
  GqOrder order;
  CliqueCover cover;
  // 0 for points, 1 for lines.
  std::vector<int> clique_color;
  std::vector<int> vertex_point, vertex_line;
  LevelDecomposition levels;  // from vertex 0
  std::size_t bases_checked = 0;
};

// Two-colours the clique-intersection graph, lowest clique of each
// component becoming a point, then checks the axioms and the level
// decomposition from every base vertex. Throws ParameterMismatch,
// CoverViolation, NotBipartite or GqAxiomFailure.
Reconstruction4 reconstruct_from_4class(const RelationMatrix& data);

struct UniqueQmReport {
  bool pass = true;
  std::size_t antiflags_checked = 0;
  std::size_t far_pairs_checked = 0;
  std::string message;
};

// Exactly one (Q,M) for each non-incident (P,L) of rec.structure, and for
// every pair (x,y) in class 4 the two middle vertices of a (3,1) path lie
// one in L(y) and one in P(y).
UniqueQmReport check_unique_qm(const RelationMatrix& data,
                               const Reconstruction4& rec);

// ---------------------------------------------------------------------------
// Scrambling

// Deterministic permutation of 0..n-1 from a 64-bit seed.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

struct Scrambled {
  RelationMatrix relation;
  std::vector<std::size_t> vertex_map;  // new index of each old vertex
  std::vector<int> class_map;           // new class of each old class
};

Scrambled scramble(const RelationMatrix& data, std::uint64_t seed,
                   bool relabel_classes = true);

}  // namespace flagscheme

#endif  // FLAGSCHEME_RECONSTRUCT_HPP_
