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


#include "flagscheme/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "flagscheme/errors.hpp"
#include "flagscheme/formulas.hpp"
#include "parallel.hpp"

namespace flagscheme {

namespace {

IncidenceStructure make_structure(int np, int nl,
                                  std::vector<IncidenceStructure::Pair> inc) {
  try {
    return IncidenceStructure(np, nl, std::move(inc));
  } catch (const StructureError& e) {
    throw GqAxiomFailure(std::string("reconstructed incidence: ") + e.what());
  }
}

GqOrder checked_order(const IncidenceStructure& st, GqOrder expected) {
  GqOrder got;
  try {
    got = verify_gq(st);
  } catch (const GqViolation& e) {
    throw GqAxiomFailure(std::string("reconstructed structure: ") + e.what());
  }
  if (got != expected)
    throw GqAxiomFailure("reconstructed structure has order (" +
                         std::to_string(got.s) + "," + std::to_string(got.t) +
                         "), expected (" + std::to_string(expected.s) + "," +
                         std::to_string(expected.t) + ")");
  return got;
}

std::int64_t flag_order(std::int64_t s, std::int64_t t) {
  return (s + 1) * (t + 1) * (s * t + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// 7 classes

Reconstruction7 reconstruct_from_7class(const RelationMatrix& data) {
  if (data.classes() != kFlagClasses)
    throw ParameterMismatch("expected 7 classes, got " +
                            std::to_string(data.classes()));
  const auto tensor = verify_scheme(data);
  const auto t = tensor.eta(1), s = tensor.eta(2);
  if (s < 1 || t < 1 || flag_order(s, t) != tensor.order())
    throw ParameterMismatch("valencies do not fit any GQ(s,t)");
  const auto table = flag_tensor_at(s, t);
  if (tensor != table)
    throw ParameterMismatch("tensor differs from the table at (" +
                            std::to_string(s) + "," + std::to_string(t) +
                            "): " + tensor_difference(tensor, table));

  const auto e1 = as_parabolic(tensor, data, {0, 1});
  if (!e1) throw NotParabolic("R0 with R1 is not an equivalence relation");
  const auto e2 = as_parabolic(tensor, data, {0, 2});
  if (!e2) throw NotParabolic("R0 with R2 is not an equivalence relation");

  Reconstruction7 rec;
  const std::size_t n = data.size();
  rec.vertex_point.assign(n, -1);
  rec.vertex_line.assign(n, -1);
  for (std::size_t b = 0; b < e1->blocks.size(); ++b)
    for (std::size_t x : e1->blocks[b]) rec.vertex_point[x] = static_cast<int>(b);
  for (std::size_t b = 0; b < e2->blocks.size(); ++b)
    for (std::size_t x : e2->blocks[b]) rec.vertex_line[x] = static_cast<int>(b);
  std::vector<IncidenceStructure::Pair> inc;
  for (std::size_t x = 0; x < n; ++x)
    inc.emplace_back(rec.vertex_point[x], rec.vertex_line[x]);
  rec.structure = make_structure(static_cast<int>(e1->blocks.size()),
                                 static_cast<int>(e2->blocks.size()),
                                 std::move(inc));
  rec.order = checked_order(
      rec.structure, {static_cast<int>(s), static_cast<int>(t)});
  return rec;
}

namespace {

template <typename Target>
std::optional<Relabelling> try_relabel(const RelationMatrix& data,
                                       const IntersectionTensor& tensor,
                                       const Target& target, GqOrder order) {
  const auto isos = find_algebraic_isomorphisms(tensor, target);
  if (isos.empty()) return std::nullopt;
  Relabelling out;
  out.map = isos.front();
  out.relation = data.relabel_classes(out.map);
  out.order = order;
  return out;
}

}  // namespace

Relabelling relabel_to_canonical(const RelationMatrix& data) {
  if (data.classes() != kFlagClasses)
    throw NoIsomorphism("expected 7 classes, got " +
                        std::to_string(data.classes()));
  const auto tensor = verify_scheme(data);
  const auto n = static_cast<std::int64_t>(data.size());
  // Scrambled labels cannot tell a structure from its dual, so the
  // candidate with the larger s is tried first.
  std::vector<std::pair<std::int64_t, std::int64_t>> candidates;
  for (std::int64_t s = 1; flag_order(s, 1) <= n; ++s)
    for (std::int64_t t = 1; flag_order(s, t) <= n; ++t)
      if (flag_order(s, t) == n) candidates.emplace_back(s, t);
  std::sort(candidates.rbegin(), candidates.rend());
  for (auto [s, t] : candidates)
    if (auto r = try_relabel(data, tensor, flag_tensor_at(s, t),
                             {static_cast<int>(s), static_cast<int>(t)}))
      return *r;
  throw NoIsomorphism("no class relabelling matches the flag table");
}

Relabelling relabel_to_canonical_fused(const RelationMatrix& data) {
  if (data.classes() != kFusedClasses)
    throw NoIsomorphism("expected 4 classes, got " +
                        std::to_string(data.classes()));
  const auto tensor = verify_scheme(data);
  const auto n = static_cast<std::int64_t>(data.size());
  for (std::int64_t s = 1; flag_order(s, s) <= n; ++s) {
    if (flag_order(s, s) != n) continue;
    if (auto r = try_relabel(data, tensor, fused_tensor_at(s),
                             {static_cast<int>(s), static_cast<int>(s)}))
      return *r;
  }
  throw NoIsomorphism("no class relabelling matches the fused table");
}

// ---------------------------------------------------------------------------
// Clique cover

namespace {

using VertexList = std::vector<std::size_t>;

void bron_kerbosch(const Graph& g, VertexList& r, VertexList p, VertexList x,
                   std::vector<VertexList>& out) {
  if (p.empty()) {
    if (x.empty()) {
      VertexList c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  std::size_t pivot = p.front(), best = 0;
  for (const auto* set : {&p, &x})
    for (std::size_t u : *set) {
      std::size_t c = 0;
      for (std::size_t v : p) c += g.adjacent(u, v);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
  VertexList todo;
  for (std::size_t v : p)
    if (!g.adjacent(pivot, v)) todo.push_back(v);
  for (std::size_t v : todo) {
    VertexList p2, x2;
    for (std::size_t w : p)
      if (g.adjacent(v, w)) p2.push_back(w);
    for (std::size_t w : x)
      if (g.adjacent(v, w)) x2.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

CliqueCover clique_cover_from_graph(const Graph& g, int s) {
  const std::size_t n = g.size();
  if (s < 1) throw CoverViolation(0, "class 1 has odd or zero valency");

  // Each maximal clique is found once, from its smallest vertex.
  std::vector<std::vector<VertexList>> found(internal::max_chunks());
  internal::parallel_chunks(
      n,
      [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; ++v) {
          VertexList p, x, r{v};
          for (std::size_t w : g.neighbours(v)) (w > v ? p : x).push_back(w);
          bron_kerbosch(g, r, std::move(p), std::move(x), found[chunk]);
        }
      },
      32);
  CliqueCover cover;
  for (auto& part : found)
    for (auto& c : part) cover.cliques.push_back(std::move(c));
  std::sort(cover.cliques.begin(), cover.cliques.end());

  cover.vertex_to_cliques.assign(n, {});
  for (std::size_t c = 0; c < cover.cliques.size(); ++c) {
    const auto& clique = cover.cliques[c];
    if (clique.size() != static_cast<std::size_t>(s) + 1)
      throw CoverViolation(clique.front(),
                           "maximal clique of size " +
                               std::to_string(clique.size()) + ", expected " +
                               std::to_string(s + 1));
    for (std::size_t v : clique) cover.vertex_to_cliques[v].push_back(c);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (cover.vertex_to_cliques[v].size() != 2)
      throw CoverViolation(v, "vertex lies on " +
                                  std::to_string(
                                      cover.vertex_to_cliques[v].size()) +
                                  " maximal cliques, expected 2");
  const auto expected = static_cast<std::size_t>(2 * (s + 1) * (s * s + 1));
  if (cover.cliques.size() != expected)
    throw CoverViolation(0, std::to_string(cover.cliques.size()) +
                                " cliques, expected " +
                                std::to_string(expected));
  return cover;
}

CliqueCover compute_clique_cover_4class(const RelationMatrix& data) {
  if (data.size() == 0) throw CoverViolation(0, "empty scheme");
  std::size_t degree = 0;
  for (auto r : data.row(0)) degree += r == 1;
  const int s = degree % 2 == 0 ? static_cast<int>(degree / 2) : 0;
  const std::vector<int> one{1};
  return clique_cover_from_graph(data.graph_of(one), s);
}

// ---------------------------------------------------------------------------
// Level decomposition

std::array<std::size_t, 5> LevelDecomposition::sizes() const {
  std::array<std::size_t, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = levels[i].size();
  return out;
}

LevelDecomposition level_decomposition(const RelationMatrix& data,
                                       const CliqueCover& cover, int s,
                                       std::size_t x0) {
  const std::size_t n = data.size();
  LevelDecomposition out;
  out.base = x0;
  out.labels.assign(cover.cliques.size(), -1);
  std::vector<int> level_of(n, -1);
  auto place = [&](std::size_t v, int level) {
    if (level_of[v] != -1) return;
    level_of[v] = level;
    out.levels[level].push_back(v);
  };
  auto fail = [&](const std::string& what) {
    return GqAxiomFailure("level construction from vertex " +
                          std::to_string(x0) + ": " + what);
  };

  place(x0, 0);
  const auto& c0 = cover.vertex_to_cliques[x0];
  out.labels[c0[0]] = 0;
  out.labels[c0[1]] = 1;
  for (std::size_t c : c0)
    for (std::size_t v : cover.cliques[c]) place(v, 1);

  for (int i = 1; i <= 3; ++i) {
    for (std::size_t y : out.levels[i]) {
      const auto& cs = cover.vertex_to_cliques[y];
      auto touches_previous = [&](std::size_t c) {
        for (std::size_t v : cover.cliques[c])
          if (level_of[v] == i - 1) return true;
        return false;
      };
      const bool a_back = touches_previous(cs[0]);
      const bool b_back = touches_previous(cs[1]);
      if (a_back == b_back)
        throw fail("vertex " + std::to_string(y) + " on level " +
                   std::to_string(i) + " has " +
                   (a_back ? "two" : "no") + " cliques back to level " +
                   std::to_string(i - 1));
      const std::size_t back = a_back ? cs[0] : cs[1];
      const std::size_t fwd = a_back ? cs[1] : cs[0];
      const int want = 1 - out.labels[back];
      if (out.labels[back] == -1)
        throw fail("clique " + std::to_string(back) + " reached unlabelled");
      if (out.labels[fwd] == -1)
        out.labels[fwd] = want;
      else if (out.labels[fwd] != want)
        throw NotBipartite(back, fwd);
      for (std::size_t v : cover.cliques[fwd]) place(v, i + 1);
    }
  }

  const auto ss = static_cast<std::size_t>(s);
  const std::array<std::size_t, 5> expected{1, 2 * ss, 2 * ss * ss,
                                            2 * ss * ss * ss,
                                            ss * ss * ss * ss};
  if (out.sizes() != expected)
    throw fail("level sizes (" + std::to_string(out.levels[0].size()) + "," +
               std::to_string(out.levels[1].size()) + "," +
               std::to_string(out.levels[2].size()) + "," +
               std::to_string(out.levels[3].size()) + "," +
               std::to_string(out.levels[4].size()) + ") differ from the valencies");
  for (int i = 0; i <= 4; ++i) {
    std::sort(out.levels[i].begin(), out.levels[i].end());
    for (std::size_t v : out.levels[i])
      if (data(x0, v) != i)
        throw fail("vertex " + std::to_string(v) + " on level " +
                   std::to_string(i) + " is in relation " +
                   std::to_string(data(x0, v)));
  }
  for (std::size_t c = 0; c < out.labels.size(); ++c)
    if (out.labels[c] == -1)
      throw fail("clique " + std::to_string(c) + " was never labelled");
  return out;
}

// ---------------------------------------------------------------------------
// 4 classes

Reconstruction4 reconstruct_from_4class(const RelationMatrix& data) {
  if (data.classes() != kFusedClasses)
    throw ParameterMismatch("expected 4 classes, got " +
                            std::to_string(data.classes()));
  const auto tensor = verify_scheme(data);
  const auto eta1 = tensor.eta(1);
  if (eta1 < 2 || eta1 % 2 != 0 || flag_order(eta1 / 2, eta1 / 2) != tensor.order())
    throw ParameterMismatch("valencies do not fit any GQ(s,s)");
  const int s = static_cast<int>(eta1 / 2);
  const auto table = fused_tensor_at(s);
  if (tensor != table)
    throw ParameterMismatch("tensor differs from the fused table at s=" +
                            std::to_string(s) + ": " +
                            tensor_difference(tensor, table));

  Reconstruction4 rec;
  rec.cover = compute_clique_cover_4class(data);
  const auto& cover = rec.cover;
  const std::size_t m = cover.cliques.size();

  rec.clique_color.assign(m, -1);
  for (std::size_t start = 0; start < m; ++start) {
    if (rec.clique_color[start] != -1) continue;
    rec.clique_color[start] = 0;
    std::vector<std::size_t> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t c = queue[head];
      for (std::size_t v : cover.cliques[c])
        for (std::size_t d : cover.vertex_to_cliques[v]) {
          if (d == c) continue;
          if (rec.clique_color[d] == -1) {
            rec.clique_color[d] = 1 - rec.clique_color[c];
            queue.push_back(d);
          } else if (rec.clique_color[d] == rec.clique_color[c]) {
            throw NotBipartite(c, d);
          }
        }
    }
  }

  std::vector<int> index(m, -1);
  int np = 0, nl = 0;
  for (std::size_t c = 0; c < m; ++c)
    index[c] = rec.clique_color[c] == 0 ? np++ : nl++;
  const std::size_t n = data.size();
  rec.vertex_point.assign(n, -1);
  rec.vertex_line.assign(n, -1);
  std::vector<IncidenceStructure::Pair> inc;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t c : cover.vertex_to_cliques[x])
      (rec.clique_color[c] == 0 ? rec.vertex_point[x] : rec.vertex_line[x]) =
          index[c];
    inc.emplace_back(rec.vertex_point[x], rec.vertex_line[x]);
  }
  rec.structure = make_structure(np, nl, std::move(inc));
  rec.order = checked_order(rec.structure, {s, s});

  // Level construction from every base; each must give the same split.
  std::vector<std::optional<std::string>> failures(internal::max_chunks());
  internal::parallel_chunks(
      n,
      [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        for (std::size_t x0 = begin; x0 < end; ++x0) {
          try {
            const auto lv = level_decomposition(data, cover, s, x0);
            bool same = true, swapped = true;
            for (std::size_t c = 0; c < m; ++c) {
              same = same && lv.labels[c] == rec.clique_color[c];
              swapped = swapped && lv.labels[c] != rec.clique_color[c];
            }
            if (!same && !swapped) {
              failures[chunk] = "levels from vertex " + std::to_string(x0) +
                                " split the cliques differently";
              return;
            }
          } catch (const Error& e) {
            failures[chunk] = e.what();
            return;
          }
        }
      },
      8);
  for (const auto& f : failures)
    if (f) throw GqAxiomFailure(*f);
  rec.bases_checked = n;
  rec.levels = level_decomposition(data, cover, s, 0);
  return rec;
}

UniqueQmReport check_unique_qm(const RelationMatrix& data,
                               const Reconstruction4& rec) {
  UniqueQmReport report;
  const auto& st = rec.structure;
  for (int p = 0; p < st.num_points(); ++p)
    for (int l = 0; l < st.num_lines(); ++l) {
      if (st.incident(p, l)) continue;
      ++report.antiflags_checked;
      int count = 0;
      for (int mline : st.lines_on(p))
        for (int q : st.points_on(l))
          if (st.incident(q, mline)) ++count;
      if (count != 1) {
        report.pass = false;
        report.message = "point " + std::to_string(p) + " and line " +
                         std::to_string(l) + " have " + std::to_string(count) +
                         " pairs (Q,M)";
        return report;
      }
    }

  const std::size_t n = data.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (data(x, y) != 4) continue;
      ++report.far_pairs_checked;
      int in_line = 0, in_point = 0, total = 0;
      for (std::size_t z = 0; z < n; ++z) {
        if (data(x, z) != 3 || data(z, y) != 1) continue;
        ++total;
        in_line += rec.vertex_line[z] == rec.vertex_line[y];
        in_point += rec.vertex_point[z] == rec.vertex_point[y];
      }
      if (total != 2 || in_line != 1 || in_point != 1) {
        report.pass = false;
        report.message = "pair (" + std::to_string(x) + "," +
                         std::to_string(y) + "): " + std::to_string(total) +
                         " middle vertices, " + std::to_string(in_line) +
                         " on L(y), " + std::to_string(in_point) + " on P(y)";
        return report;
      }
    }
  report.message = std::to_string(report.antiflags_checked) +
                   " anti-flags and " +
                   std::to_string(report.far_pairs_checked) +
                   " class-4 pairs checked";
  return report;
}

// ---------------------------------------------------------------------------
// Scrambling

namespace {

// Unbiased draw from [0, bound) that does not depend on the standard
// library's distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = rng.max() - rng.max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

std::vector<std::size_t> permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[draw(rng, i)]);
  return perm;
}

}  // namespace

std::vector<std::size_t> seeded_permutation(std::size_t n,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return permutation(rng, n);
}

Scrambled scramble(const RelationMatrix& data, std::uint64_t seed,
                   bool relabel_classes) {
  std::mt19937_64 rng(seed);
  Scrambled out;
  out.vertex_map = permutation(rng, data.size());
  const int d = data.classes();
  out.class_map.resize(d + 1);
  std::iota(out.class_map.begin(), out.class_map.end(), 0);
  if (relabel_classes) {
    const auto cperm = permutation(rng, static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k)
      out.class_map[k] = 1 + static_cast<int>(cperm[k - 1]);
  }
  out.relation =
      data.permute_vertices(out.vertex_map).relabel_classes(out.class_map);
  return out;
}

}  // namespace flagscheme
