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


#ifndef FLAGSCHEME_FUSION_HPP_
#define FLAGSCHEME_FUSION_HPP_

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagscheme/scheme.hpp"

namespace flagscheme {

// Partition of the relation indices 1..d; index 0 forms its own implicit
// block. Blocks are kept sorted and ordered by their smallest member.
class IndexPartition {
 public:
  IndexPartition() = default;
  // Throws std::invalid_argument unless the blocks cover 1..d exactly once.
  IndexPartition(int d, std::vector<std::vector<int>> blocks);

  // Accepts "{1,2}|{3,4}" and "{1,2}{3,4}" (spaces ignored).
  static IndexPartition parse(std::string_view text, int d);
  // Partition with all indices in their own block.
  static IndexPartition singletons(int d);

  int classes() const { return d_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  // 0 for index 0, otherwise 1 + position of the containing block.
  int block_of(int i) const { return block_of_[i]; }

  // Every block is mapped onto a block by the pairing.
  bool star_closed(std::span<const int> star) const;

  std::string to_string() const;  // {1,2}|{3,4}

  friend bool operator==(const IndexPartition& a, const IndexPartition& b) {
    return a.d_ == b.d_ && a.blocks_ == b.blocks_;
  }
  friend bool operator<(const IndexPartition& a, const IndexPartition& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  int d_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

std::ostream& operator<<(std::ostream& os, const IndexPartition& p);

// All set partitions of 1..d in restricted-growth order.
std::vector<IndexPartition> all_partitions(int d);

// The 4-class fusion {1,2}|{3,4}|{5,6}|{7}.
IndexPartition four_class_partition();

// Star-closure plus the block-sum criterion: for k, k' in one block the
// sums of p[k][i][j] over i in one block and j in another agree.
bool check_fusion(const IntersectionTensor& tensor, const IndexPartition& part);

// Block sums of an accepted partition. Throws NotAFusion.
IntersectionTensor fuse_tensor(const IntersectionTensor& tensor,
                               const IndexPartition& part);

// Relabels the matrix by block index. Throws NotAFusion.
RelationMatrix fuse(const RelationMatrix& data, const IndexPartition& part);
RelationMatrix fuse(const RelationMatrix& data,
                    const IntersectionTensor& tensor,
                    const IndexPartition& part);

// Accepted partitions with 2 <= blocks <= d-1, in restricted-growth order.
std::vector<IndexPartition> enumerate_fusions(const IntersectionTensor& tensor);

// enumerate_fusions on the flag table at (s,t). Throws UnsupportedParameters
// for (1,1) and for s or t below 1.
std::vector<IndexPartition> scan_flag_fusions(int s, int t);

enum class Feasibility { kAll, kSEqT, kTEq1, kSEq1, kPoint, kNever };

struct FeasibilityCondition {
  Feasibility tag = Feasibility::kNever;
  // Isolated parameter pairs, for kPoint.
  std::vector<std::pair<int, int>> points;
  // Grid pairs (s,t), 1 <= s,t <= kScanBound without (1,1), at which every
  // difference vanishes.
  std::vector<std::pair<int, int>> zero_set;
  // The tag describes zero_set exactly on the grid.
  bool exact_match = true;

  // Whether the tag admits (s,t).
  bool holds_at(int s, int t) const;
  std::string to_string() const;  // ALL, S_EQ_T, ..., POINT(2,2), NEVER
};

inline constexpr int kScanBound = 5;

// Symbolic classification of a partition of the flag indices 1..7.
FeasibilityCondition classify_partition(const IndexPartition& part);

// Apply the point-line duality blockwise.
IndexPartition dual_partition(const IndexPartition& part);
// Same condition with s and t exchanged.
FeasibilityCondition dual_condition(const FeasibilityCondition& c);

struct FusionRow {
  IndexPartition partition;
  FeasibilityCondition condition;
};

// Every star-closed partition of 1..7 with 2..6 blocks whose condition is
// not NEVER, in restricted-growth order.
std::vector<FusionRow> classify_all_fusions();

// CSV `partition,condition`; fields with commas are quoted.
void write_fusion_csv(std::ostream& os, const std::vector<FusionRow>& rows);

}  // namespace flagscheme

#endif  // FLAGSCHEME_FUSION_HPP_
