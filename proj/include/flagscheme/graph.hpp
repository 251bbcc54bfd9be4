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

#ifndef FLAGSCHEME_GRAPH_HPP_
#define FLAGSCHEME_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace flagscheme {

// Simple undirected graph with a dense adjacency matrix; desk-scale only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0), nbrs_(n) {}

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return adj_[u * n_ + v] != 0;
  }
  const std::vector<std::size_t>& neighbours(std::size_t u) const {
    return nbrs_[u];
  }
  std::size_t degree(std::size_t u) const { return nbrs_[u].size(); }

  // Ignores loops and repeated edges.
  void add_edge(std::size_t u, std::size_t v);

  bool is_connected() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
};

struct SrgParameters {
  std::size_t v = 0, k = 0, lambda = 0, mu = 0;
  auto operator<=>(const SrgParameters&) const = default;
};

// Brute-force common-neighbour counts. Complete graphs report mu = 0.
// Throws NotSrg with the offending pair.
SrgParameters srg_parameters(const Graph& g);

}  // namespace flagscheme

#endif  // FLAGSCHEME_GRAPH_HPP_
