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


#include "flagscheme/fusion.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "flagscheme/errors.hpp"
#include "flagscheme/formulas.hpp"
#include "flagscheme/poly.hpp"
#include "parallel.hpp"

namespace flagscheme {

IndexPartition::IndexPartition(int d, std::vector<std::vector<int>> blocks)
    : d_(d), blocks_(std::move(blocks)), block_of_(d + 1, -1) {
  if (d < 0) throw std::invalid_argument("negative class count");
  block_of_[0] = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t n = 0; n < blocks_.size(); ++n)
    for (int i : blocks_[n]) {
      if (i < 1 || i > d)
        throw std::invalid_argument("index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(d));
      if (block_of_[i] != -1)
        throw std::invalid_argument("index " + std::to_string(i) +
                                    " appears twice");
      block_of_[i] = static_cast<int>(n) + 1;
    }
  for (int i = 1; i <= d; ++i)
    if (block_of_[i] == -1)
      throw std::invalid_argument("index " + std::to_string(i) +
                                  " is not covered");
}

IndexPartition IndexPartition::parse(std::string_view text, int d) {
  std::vector<std::vector<int>> blocks;
  std::vector<int>* cur = nullptr;
  std::string num;
  auto flush = [&] {
    if (num.empty()) return;
    if (!cur) throw std::invalid_argument("number outside braces");
    cur->push_back(std::stoi(num));
    num.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      if (cur) throw std::invalid_argument("nested braces");
      blocks.emplace_back();
      cur = &blocks.back();
    } else if (c == '}') {
      flush();
      if (!cur) throw std::invalid_argument("unbalanced braces");
      cur = nullptr;
    } else if (c == ',') {
      flush();
    } else if (c == '|') {
      if (cur) throw std::invalid_argument("'|' inside a block");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "'");
    }
  }
  if (cur) throw std::invalid_argument("unbalanced braces");
  return IndexPartition(d, std::move(blocks));
}

IndexPartition IndexPartition::singletons(int d) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= d; ++i) blocks.push_back({i});
  return IndexPartition(d, std::move(blocks));
}

bool IndexPartition::star_closed(std::span<const int> star) const {
  for (const auto& b : blocks_) {
    const int target = block_of_[star[b.front()]];
    for (int i : b)
      if (block_of_[star[i]] != target) return false;
    if (blocks_[target - 1].size() != b.size()) return false;
  }
  return true;
}

std::string IndexPartition::to_string() const {
  std::string out;
  for (std::size_t n = 0; n < blocks_.size(); ++n) {
    if (n) out += '|';
    out += '{';
    for (std::size_t m = 0; m < blocks_[n].size(); ++m) {
      if (m) out += ',';
      out += std::to_string(blocks_[n][m]);
    }
    out += '}';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IndexPartition& p) {
  return os << p.to_string();
}

std::vector<IndexPartition> all_partitions(int d) {
  std::vector<IndexPartition> out;
  if (d <= 0) {
    out.emplace_back(0, std::vector<std::vector<int>>{});
    return out;
  }
  // rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1])
  std::vector<int> rgs(d, 0), maxp(d, 0);
  while (true) {
    int nblocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<std::vector<int>> blocks(nblocks);
    for (int i = 0; i < d; ++i) blocks[rgs[i]].push_back(i + 1);
    out.emplace_back(d, std::move(blocks));
    int i = d - 1;
    while (i > 0 && rgs[i] == maxp[i] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < d; ++j) {
      rgs[j] = 0;
      maxp[j] = std::max(maxp[j - 1], rgs[j - 1]);
    }
  }
  return out;
}

IndexPartition four_class_partition() {
  return IndexPartition(7, {{1, 2}, {3, 4}, {5, 6}, {7}});
}

namespace {

// sums[k][a][b] = sum of p[k][i][j] with i in block a, j in block b.
template <typename T, typename Entry>
std::vector<std::vector<std::vector<T>>> block_sums(const IndexPartition& part,
                                                    Entry&& entry) {
  const int d = part.classes();
  const std::size_t e = part.size() + 1;
  std::vector<std::vector<std::vector<T>>> sums(
      d + 1, std::vector<std::vector<T>>(e, std::vector<T>(e, T{})));
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j)
        sums[k][part.block_of(i)][part.block_of(j)] += entry(k, i, j);
  return sums;
}

void require_same_classes(const IntersectionTensor& tensor,
                          const IndexPartition& part) {
  if (tensor.classes() != part.classes())
    throw std::invalid_argument("partition and tensor have different d");
}

}  // namespace

bool check_fusion(const IntersectionTensor& tensor,
                  const IndexPartition& part) {
  require_same_classes(tensor, part);
  if (!part.star_closed(tensor.pairing())) return false;
  const auto sums = block_sums<std::int64_t>(
      part, [&](int k, int i, int j) { return tensor.at(k, i, j); });
  for (const auto& b : part.blocks())
    for (int k : b)
      if (sums[k] != sums[b.front()]) return false;
  return true;
}

IntersectionTensor fuse_tensor(const IntersectionTensor& tensor,
                               const IndexPartition& part) {
  if (!check_fusion(tensor, part))
    throw NotAFusion("partition " + part.to_string() +
                     " does not satisfy the fusion criterion");
  const auto sums = block_sums<std::int64_t>(
      part, [&](int k, int i, int j) { return tensor.at(k, i, j); });
  const int e = static_cast<int>(part.size());
  IntersectionTensor out(e);
  for (int l = 0; l <= e; ++l) {
    const int rep = l == 0 ? 0 : part.blocks()[l - 1].front();
    out.set_star(l, part.block_of(tensor.star(rep)));
    std::int64_t eta = 0;
    if (l == 0)
      eta = tensor.eta(0);
    else
      for (int i : part.blocks()[l - 1]) eta += tensor.eta(i);
    out.set_eta(l, eta);
    for (int a = 0; a <= e; ++a)
      for (int b = 0; b <= e; ++b) out.at(l, a, b) = sums[rep][a][b];
  }
  return out;
}

RelationMatrix fuse(const RelationMatrix& data,
                    const IntersectionTensor& tensor,
                    const IndexPartition& part) {
  if (!check_fusion(tensor, part))
    throw NotAFusion("partition " + part.to_string() +
                     " does not satisfy the fusion criterion");
  std::vector<int> map(data.classes() + 1);
  for (int i = 0; i <= data.classes(); ++i) map[i] = part.block_of(i);
  RelationMatrix relabelled = data.relabel_classes(map);
  RelationMatrix out(data.size(), static_cast<int>(part.size()));
  for (std::size_t x = 0; x < data.size(); ++x)
    for (std::size_t y = 0; y < data.size(); ++y)
      out.set(x, y, relabelled(x, y));
  return out;
}

RelationMatrix fuse(const RelationMatrix& data, const IndexPartition& part) {
  return fuse(data, verify_scheme(data), part);
}

std::vector<IndexPartition> enumerate_fusions(
    const IntersectionTensor& tensor) {
  const int d = tensor.classes();
  const auto parts = all_partitions(d);
  std::vector<char> accepted(parts.size(), 0);
  internal::parallel_chunks(
      parts.size(),
      [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t n = begin; n < end; ++n) {
          const auto e = parts[n].size();
          accepted[n] = e >= 2 && static_cast<int>(e) <= d - 1 &&
                        check_fusion(tensor, parts[n]);
        }
      },
      64);
  std::vector<IndexPartition> out;
  for (std::size_t n = 0; n < parts.size(); ++n)
    if (accepted[n]) out.push_back(parts[n]);
  return out;
}

std::vector<IndexPartition> scan_flag_fusions(int s, int t) {
  if (s < 1 || t < 1)
    throw UnsupportedParameters("s and t must be at least 1");
  if (s == 1 && t == 1)
    throw UnsupportedParameters(
        "(s,t) = (1,1) gives the thin scheme and is excluded from fusion "
        "scans");
  return enumerate_fusions(flag_tensor_at(s, t));
}

// ---------------------------------------------------------------------------
// Symbolic classification

bool FeasibilityCondition::holds_at(int s, int t) const {
  switch (tag) {
    case Feasibility::kAll:
      return true;
    case Feasibility::kSEqT:
      return s == t;
    case Feasibility::kTEq1:
      return t == 1;
    case Feasibility::kSEq1:
      return s == 1;
    case Feasibility::kPoint:
      return std::find(points.begin(), points.end(), std::pair{s, t}) !=
             points.end();
    case Feasibility::kNever:
      return false;
  }
  return false;
}

std::string FeasibilityCondition::to_string() const {
  switch (tag) {
    case Feasibility::kAll:
      return "ALL";
    case Feasibility::kSEqT:
      return "S_EQ_T";
    case Feasibility::kTEq1:
      return "T_EQ_1";
    case Feasibility::kSEq1:
      return "S_EQ_1";
    case Feasibility::kNever:
      return "NEVER";
    case Feasibility::kPoint:
      break;
  }
  std::string out = "POINT(";
  for (std::size_t n = 0; n < points.size(); ++n) {
    if (n) out += ';';
    out += std::to_string(points[n].first) + "," +
           std::to_string(points[n].second);
  }
  return out + ")";
}

namespace {

std::vector<std::pair<int, int>> scan_grid() {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= kScanBound; ++s)
    for (int t = 1; t <= kScanBound; ++t)
      if (s != 1 || t != 1) out.emplace_back(s, t);
  return out;
}

}  // namespace

FeasibilityCondition classify_partition(const IndexPartition& part) {
  if (part.classes() != kFlagClasses)
    throw std::invalid_argument("classification needs a partition of 1..7");
  FeasibilityCondition cond;
  std::vector<int> star(kFlagClasses + 1);
  for (int i = 0; i <= kFlagClasses; ++i) star[i] = flag_star(i);
  if (!part.star_closed(star)) return cond;

  const auto sums = block_sums<BivariatePoly>(
      part, [](int k, int i, int j) { return p_poly(k, i, j); });
  std::vector<BivariatePoly> diffs;
  for (const auto& b : part.blocks())
    for (int k : b) {
      if (k == b.front()) continue;
      for (std::size_t a = 0; a < sums[k].size(); ++a)
        for (std::size_t c = 0; c < sums[k].size(); ++c) {
          auto diff = sums[k][a][c] - sums[b.front()][a][c];
          if (!diff.is_zero()) diffs.push_back(std::move(diff));
        }
    }

  for (const auto& [s, t] : scan_grid()) {
    bool zero = true;
    for (const auto& f : diffs)
      if (f.evaluate(s, t) != 0) {
        zero = false;
        break;
      }
    if (zero) cond.zero_set.emplace_back(s, t);
  }

  auto all_vanish = [&](auto&& subst) {
    for (const auto& f : diffs)
      if (!subst(f).is_zero()) return false;
    return true;
  };
  if (diffs.empty()) {
    cond.tag = Feasibility::kAll;
  } else if (all_vanish([](const BivariatePoly& f) {
               return f.with_t_equal_s();
             })) {
    cond.tag = Feasibility::kSEqT;
  } else if (all_vanish([](const BivariatePoly& f) {
               return f.with_t_equal_one();
             })) {
    cond.tag = Feasibility::kTEq1;
  } else if (all_vanish([](const BivariatePoly& f) {
               return f.with_s_equal_one();
             })) {
    cond.tag = Feasibility::kSEq1;
  } else if (!cond.zero_set.empty()) {
    cond.tag = Feasibility::kPoint;
    cond.points = cond.zero_set;
  } else {
    cond.tag = Feasibility::kNever;
  }
  for (const auto& [s, t] : scan_grid()) {
    const bool in_zero =
        std::find(cond.zero_set.begin(), cond.zero_set.end(),
                  std::pair{s, t}) != cond.zero_set.end();
    if (in_zero != cond.holds_at(s, t)) cond.exact_match = false;
  }
  return cond;
}

IndexPartition dual_partition(const IndexPartition& part) {
  if (part.classes() != kFlagClasses)
    throw std::invalid_argument("duality acts on partitions of 1..7");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : part.blocks()) {
    std::vector<int> image;
    for (int i : b) image.push_back(flag_delta(i));
    blocks.push_back(std::move(image));
  }
  return IndexPartition(part.classes(), std::move(blocks));
}

FeasibilityCondition dual_condition(const FeasibilityCondition& c) {
  FeasibilityCondition out = c;
  if (c.tag == Feasibility::kTEq1) out.tag = Feasibility::kSEq1;
  if (c.tag == Feasibility::kSEq1) out.tag = Feasibility::kTEq1;
  for (auto& p : out.points) std::swap(p.first, p.second);
  for (auto& p : out.zero_set) std::swap(p.first, p.second);
  std::sort(out.points.begin(), out.points.end());
  std::sort(out.zero_set.begin(), out.zero_set.end());
  return out;
}

std::vector<FusionRow> classify_all_fusions() {
  const auto parts = all_partitions(kFlagClasses);
  std::vector<FeasibilityCondition> conds(parts.size());
  internal::parallel_chunks(
      parts.size(),
      [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t n = begin; n < end; ++n)
          if (parts[n].size() >= 2 && parts[n].size() <= kFlagClasses - 1)
            conds[n] = classify_partition(parts[n]);
      },
      16);
  std::vector<FusionRow> out;
  for (std::size_t n = 0; n < parts.size(); ++n)
    if (conds[n].tag != Feasibility::kNever)
      out.push_back({parts[n], conds[n]});
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_fusion_csv(std::ostream& os, const std::vector<FusionRow>& rows) {
  os << "partition,condition\n";
  for (const auto& r : rows)
    os << csv_field(r.partition.to_string()) << ','
       << csv_field(r.condition.to_string()) << '\n';
}

}  // namespace flagscheme
