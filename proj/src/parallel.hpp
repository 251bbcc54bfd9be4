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

#ifndef FLAGSCHEME_SRC_PARALLEL_HPP_
#define FLAGSCHEME_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace flagscheme::internal {

// Splits [0, n) into contiguous chunks, one per hardware thread, and calls
// body(chunk_index, begin, end) for each. Runs inline when only one thread
// is available or the range is small. Returns the number of chunks used.
template <typename Body>
std::size_t parallel_chunks(std::size_t n, Body&& body,
                            std::size_t min_chunk = 16) {
  std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, n / min_chunk));
  if (workers <= 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  const std::size_t step = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * step);
    const std::size_t end = std::min(n, begin + step);
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  return workers;
}

inline std::size_t max_chunks() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace flagscheme::internal

#endif  // FLAGSCHEME_SRC_PARALLEL_HPP_
