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

#include "flagscheme/graph.hpp"

#include <optional>
#include <string>

#include "flagscheme/errors.hpp"

namespace flagscheme {

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v || adjacent(u, v)) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  nbrs_[u].push_back(v);
  nbrs_[v].push_back(u);
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<std::uint8_t> seen(n_, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : nbrs_[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == n_;
}

SrgParameters srg_parameters(const Graph& g) {
  const std::size_t n = g.size();
  SrgParameters out;
  out.v = n;
  if (n == 0) return out;
  out.k = g.degree(0);
  for (std::size_t u = 1; u < n; ++u) {
    if (g.degree(u) != out.k)
      throw NotSrg(0, u,
                   "vertices 0 and " + std::to_string(u) +
                       " have different degrees");
  }
  std::optional<std::size_t> lambda, mu;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      std::size_t common = 0;
      for (std::size_t w : g.neighbours(u))
        if (g.adjacent(w, v)) ++common;
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        throw NotSrg(u, v,
                     "pair (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has " + std::to_string(common) +
                         " common neighbours, expected " +
                         std::to_string(*slot));
      }
    }
  }
  out.lambda = lambda.value_or(0);
  out.mu = mu.value_or(0);
  return out;
}

}  // namespace flagscheme
