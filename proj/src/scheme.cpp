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

#include "flagscheme/scheme.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "flagscheme/errors.hpp"
#include "parallel.hpp"

namespace flagscheme {

// ---------------------------------------------------------------------------
// RelationMatrix

RelationMatrix::RelationMatrix(std::size_t n, int d)
    : n_(n), d_(d), cells_(n * n, 0) {
  if (d < 0 || d > 31)
    throw std::invalid_argument("class count must lie in 0..31");
}

RelationMatrix RelationMatrix::permute_vertices(
    std::span<const std::size_t> perm) const {
  if (perm.size() != n_)
    throw std::invalid_argument("permutation size mismatch");
  RelationMatrix out(n_, d_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      out.set(perm[x], perm[y], (*this)(x, y));
  return out;
}

RelationMatrix RelationMatrix::relabel_classes(std::span<const int> map) const {
  if (map.size() != static_cast<std::size_t>(d_ + 1) || map[0] != 0)
    throw std::invalid_argument("class map must cover 0..d and fix 0");
  RelationMatrix out(n_, d_);
  for (std::size_t c = 0; c < cells_.size(); ++c)
    out.cells_[c] = static_cast<std::uint8_t>(map[cells_[c]]);
  return out;
}

Graph RelationMatrix::graph_of(std::span<const int> classes) const {
  std::uint32_t mask = 0;
  for (int c : classes) mask |= 1u << c;
  Graph g(n_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y)
      if ((mask >> (*this)(x, y)) & 1u || (mask >> (*this)(y, x)) & 1u)
        g.add_edge(x, y);
  return g;
}

// ---------------------------------------------------------------------------
// IntersectionTensor

IntersectionTensor::IntersectionTensor(int d)
    : d_(d),
      p_(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), 0),
      eta_(static_cast<std::size_t>(d + 1), 0),
      star_(static_cast<std::size_t>(d + 1)) {
  std::iota(star_.begin(), star_.end(), 0);
}

std::int64_t IntersectionTensor::order() const {
  return std::accumulate(eta_.begin(), eta_.end(), std::int64_t{0});
}

bool IntersectionTensor::is_symmetric() const {
  for (int i = 0; i <= d_; ++i)
    if (star_[i] != i) return false;
  return true;
}

bool IntersectionTensor::is_commutative() const {
  for (int k = 0; k <= d_; ++k)
    for (int i = 0; i <= d_; ++i)
      for (int j = i + 1; j <= d_; ++j)
        if (at(k, i, j) != at(k, j, i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// verify_scheme

namespace {

NotAScheme::Witness witness(int axiom, std::size_t x, std::size_t y) {
  NotAScheme::Witness w;
  w.axiom = axiom;
  w.x = x;
  w.y = y;
  return w;
}

}  // namespace

IntersectionTensor verify_scheme(const RelationMatrix& data) {
  const std::size_t n = data.size();
  const int d = data.classes();
  const int m = d + 1;
  if (n == 0) throw std::invalid_argument("empty relation matrix");

  // AS1/AS2: entries in range, diagonal exactly R0.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int r = data(x, y);
      if (r > d)
        throw NotAScheme(witness(1, x, y),
                         "entry " + std::to_string(r) + " exceeds d");
      if ((x == y) != (r == 0))
        throw NotAScheme(witness(2, x, y),
                         "relation 0 must be exactly the diagonal");
    }
  }

  // Representative pair of each class, in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> rep(
      m, {std::numeric_limits<std::size_t>::max(), 0});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto& r = rep[data(x, y)];
      if (r.first == std::numeric_limits<std::size_t>::max()) r = {x, y};
    }
  for (int k = 1; k <= d; ++k)
    if (rep[k].first == std::numeric_limits<std::size_t>::max())
      throw MissingClass(k);

  IntersectionTensor tensor(d);

  // AS3: the transpose of every class is a class.
  for (int i = 0; i <= d; ++i)
    tensor.set_star(i, data(rep[i].second, rep[i].first));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (data(y, x) != tensor.star(data(x, y))) {
        auto w = witness(3, x, y);
        w.k = data(x, y);
        throw NotAScheme(w, "transpose of relation " +
                                std::to_string(data(x, y)) +
                                " is not a single relation");
      }

  // AS4 candidate values from the representatives.
  for (int k = 0; k <= d; ++k) {
    const auto [x, y] = rep[k];
    for (std::size_t z = 0; z < n; ++z) ++tensor.at(k, data(x, z), data(z, y));
  }
  for (int i = 0; i <= d; ++i)
    tensor.set_eta(i, tensor.at(0, i, tensor.star(i)));

  // AS4 over every pair. Each chunk owns a disjoint range of rows x and
  // records the first failing pair it sees.
  const std::size_t chunks = internal::max_chunks();
  std::vector<std::optional<NotAScheme::Witness>> failures(chunks);
  internal::parallel_chunks(
      n,
      [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<std::int32_t> counts(n * m * m);
        for (std::size_t x = begin; x < end; ++x) {
          std::fill(counts.begin(), counts.end(), 0);
          const auto row_x = data.row(x);
          for (std::size_t z = 0; z < n; ++z) {
            const auto row_z = data.row(z);
            std::int32_t* base = counts.data() + row_x[z] * m;
            for (std::size_t y = 0; y < n; ++y) ++base[y * m * m + row_z[y]];
          }
          for (std::size_t y = 0; y < n; ++y) {
            const int k = row_x[y];
            const std::int32_t* c = counts.data() + y * m * m;
            for (int i = 0; i <= d; ++i)
              for (int j = 0; j <= d; ++j)
                if (c[i * m + j] != tensor.at(k, i, j)) {
                  NotAScheme::Witness w = witness(4, x, y);
                  w.k = k;
                  w.i = i;
                  w.j = j;
                  w.expected = tensor.at(k, i, j);
                  w.observed = c[i * m + j];
                  failures[chunk] = w;
                  return;
                }
          }
        }
      },
      4);
  for (const auto& f : failures) {
    if (!f) continue;
    throw NotAScheme(
        *f, "pair (" + std::to_string(f->x) + "," + std::to_string(f->y) +
                ") in R_" + std::to_string(f->k) + " has " +
                std::to_string(f->observed) + " vertices z for (i,j)=(" +
                std::to_string(f->i) + "," + std::to_string(f->j) +
                "), representative pair has " + std::to_string(f->expected));
  }

  check_tensor_identities(tensor);
  return tensor;
}

std::string tensor_difference(const IntersectionTensor& got,
                              const IntersectionTensor& want) {
  if (got.classes() != want.classes())
    return "class counts " + std::to_string(got.classes()) + " and " +
           std::to_string(want.classes());
  const int d = got.classes();
  for (int i = 0; i <= d; ++i)
    if (got.eta(i) != want.eta(i))
      return "valency " + std::to_string(i) + " is " +
             std::to_string(got.eta(i)) + ", table gives " +
             std::to_string(want.eta(i));
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j)
        if (got.at(k, i, j) != want.at(k, i, j))
          return "p[" + std::to_string(k) + "][" + std::to_string(i) + "][" +
                 std::to_string(j) + "] is " + std::to_string(got.at(k, i, j)) +
                 ", table gives " + std::to_string(want.at(k, i, j));
  for (int i = 0; i <= d; ++i)
    if (got.star(i) != want.star(i))
      return "pairing of class " + std::to_string(i) + " differs";
  return {};
}

void check_tensor_identities(const IntersectionTensor& tensor) {
  const int d = tensor.classes();
  for (int k = 0; k <= d; ++k) {
    const int ks = tensor.star(k);
    for (int i = 0; i <= d; ++i) {
      const int is = tensor.star(i);
      std::int64_t row = 0;
      for (int j = 0; j <= d; ++j) {
        const int js = tensor.star(j);
        const auto p = tensor.at(k, i, j);
        row += p;
        if (p != tensor.at(ks, js, is))
          throw IdentityFailure(
              IdentityKind::kPairing, k, i, j, "p[k][i][j] != p[k*][j*][i*]");
        const auto lhs = tensor.eta(k) * p;
        if (lhs != tensor.eta(i) * tensor.at(is, j, ks) ||
            lhs != tensor.eta(j) * tensor.at(js, ks, i))
          throw IdentityFailure(IdentityKind::kBalance, k, i, j,
                                "eta_k p[k][i][j] != eta_i p[i*][j][k*]");
      }
      if (row != tensor.eta(i))
        throw IdentityFailure(
            IdentityKind::kRowSum, k, i, -1, "row sum differs from eta_i");
    }
  }
}

// ---------------------------------------------------------------------------
// Parabolics and quotients

namespace {

std::uint32_t mask_of(const std::vector<int>& classes) {
  std::uint32_t mask = 0;
  for (int c : classes) mask |= 1u << c;
  return mask;
}

bool is_equivalence(const IntersectionTensor& tensor, std::uint32_t mask) {
  const int d = tensor.classes();
  if (!(mask & 1u)) return false;
  for (int i = 0; i <= d; ++i) {
    if (!((mask >> i) & 1u)) continue;
    if (!((mask >> tensor.star(i)) & 1u)) return false;
    for (int j = 0; j <= d; ++j) {
      if (!((mask >> j) & 1u)) continue;
      for (int k = 0; k <= d; ++k)
        if (!((mask >> k) & 1u) && tensor.at(k, i, j) != 0) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> classes_of(const RelationMatrix& data,
                                                 std::uint32_t mask) {
  const std::size_t n = data.size();
  std::vector<std::size_t> block_of(n, std::numeric_limits<std::size_t>::max());
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t x = 0; x < n; ++x) {
    if (block_of[x] != std::numeric_limits<std::size_t>::max()) continue;
    std::vector<std::size_t> block;
    for (std::size_t y = x; y < n; ++y)
      if ((mask >> data(x, y)) & 1u) {
        block.push_back(y);
        block_of[y] = blocks.size();
      }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace

std::optional<Parabolic> as_parabolic(const IntersectionTensor& tensor,
                                      const RelationMatrix& data,
                                      std::vector<int> classes) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  const std::uint32_t mask = mask_of(classes);
  if (!is_equivalence(tensor, mask)) return std::nullopt;

  Parabolic e;
  e.blocks = classes_of(data, mask);
  // Confirm on the matrix: every block is a clique of the union and the
  // blocks cover each vertex exactly once.
  std::size_t covered = 0;
  for (const auto& block : e.blocks) {
    covered += block.size();
    for (std::size_t x : block)
      for (std::size_t y : block)
        if (!((mask >> data(x, y)) & 1u))
          throw std::logic_error("tensor and matrix disagree on parabolic");
  }
  if (covered != data.size())
    throw std::logic_error("parabolic blocks do not partition the vertices");
  e.classes = std::move(classes);
  e.trivial = e.classes.size() == 1 ||
              static_cast<int>(e.classes.size()) == tensor.classes() + 1;
  return e;
}

std::vector<Parabolic> find_parabolics(const IntersectionTensor& tensor,
                                       const RelationMatrix& data) {
  const int d = tensor.classes();
  std::vector<Parabolic> out;
  for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
    std::vector<int> classes{0};
    for (int i = 1; i <= d; ++i)
      if ((bits >> (i - 1)) & 1u) classes.push_back(i);
    if (auto e = as_parabolic(tensor, data, std::move(classes)))
      out.push_back(std::move(*e));
  }
  std::sort(out.begin(), out.end(), [](const Parabolic& a, const Parabolic& b) {
    if (a.classes.size() != b.classes.size())
      return a.classes.size() < b.classes.size();
    return a.classes < b.classes;
  });
  return out;
}

QuotientScheme quotient_scheme(const RelationMatrix& data, const Parabolic& e) {
  const std::size_t n = data.size();
  const std::size_t nb = e.blocks.size();
  std::vector<std::size_t> block_of(n);
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t x : e.blocks[b]) block_of[x] = b;

  std::vector<std::uint32_t> pair_mask(nb * nb, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      pair_mask[block_of[x] * nb + block_of[y]] |= 1u << data(x, y);

  // Distinct masks must be pairwise disjoint; the diagonal mask is e.
  const std::uint32_t emask = mask_of(e.classes);
  std::vector<std::uint32_t> distinct{emask};
  for (std::size_t a = 0; a < nb; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      const std::uint32_t mk = pair_mask[a * nb + b];
      if ((a == b) != (mk == emask))
        throw QuotientIllDefined(a, b,
                                 a == b ? "block is not a class of e"
                                        : "blocks share parabolic classes");
      if (std::find(distinct.begin(), distinct.end(), mk) != distinct.end())
        continue;
      for (std::uint32_t other : distinct)
        if (other & mk)
          throw QuotientIllDefined(a, b,
                                   "class sets overlap without being equal");
      distinct.push_back(mk);
    }
  }
  std::sort(distinct.begin() + 1, distinct.end(),
            [](std::uint32_t a, std::uint32_t b) {
              return std::countr_zero(a) < std::countr_zero(b);
            });

  QuotientScheme q;
  q.blocks = e.blocks;
  for (std::uint32_t mk : distinct) {
    std::vector<int> cls;
    for (int c = 0; c < 32; ++c)
      if ((mk >> c) & 1u) cls.push_back(c);
    q.fused_classes.push_back(std::move(cls));
  }
  q.relation = RelationMatrix(nb, static_cast<int>(distinct.size()) - 1);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      const auto it =
          std::find(distinct.begin(), distinct.end(), pair_mask[a * nb + b]);
      q.relation.set(a, b, static_cast<int>(it - distinct.begin()));
    }
  return q;
}

// ---------------------------------------------------------------------------
// Algebraic isomorphisms

namespace {

struct IsoSearch {
  const IntersectionTensor& first;
  const IntersectionTensor& second;
  int d;
  std::vector<int> sigma;
  std::vector<bool> used;
  std::vector<std::vector<int>> results;

  // Checks every triple whose largest index is m, all indices assigned.
  bool consistent(int m) const {
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) {
        const int triples[3][3] = {{m, a, b}, {a, m, b}, {a, b, m}};
        for (const auto& tr : triples)
          if (second.at(sigma[tr[0]], sigma[tr[1]], sigma[tr[2]]) !=
              first.at(tr[0], tr[1], tr[2]))
            return false;
      }
    return true;
  }

  void extend(int m) {
    if (m > d) {
      results.push_back(sigma);
      return;
    }
    const bool self_paired = first.star(m) == m;
    for (int v = 1; v <= d; ++v) {
      if (used[v] || second.eta(v) != first.eta(m) ||
          (second.star(v) == v) != self_paired)
        continue;
      sigma[m] = v;
      used[v] = true;
      const int ms = first.star(m);
      const bool pair_ok = ms > m || second.star(v) == sigma[ms];
      if (pair_ok && consistent(m)) extend(m + 1);
      used[v] = false;
    }
    sigma[m] = -1;
  }
};

}  // namespace

std::vector<std::vector<int>> find_algebraic_isomorphisms(
    const IntersectionTensor& first, const IntersectionTensor& second) {
  if (first.classes() != second.classes()) return {};
  const int d = first.classes();
  auto sorted = [](std::span<const std::int64_t> v) {
    std::vector<std::int64_t> out(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
  };
  if (sorted(first.valencies()) != sorted(second.valencies())) return {};

  IsoSearch search{first, second, d, std::vector<int>(d + 1, -1),
                   std::vector<bool>(d + 1, false), {}};
  search.sigma[0] = 0;
  search.used[0] = true;
  if (!search.consistent(0)) return {};
  search.extend(1);
  return std::move(search.results);
}

// ---------------------------------------------------------------------------
// Thin schemes

ThinGroup::ThinGroup(std::vector<std::vector<int>> table)
    : table_(std::move(table)) {}

int ThinGroup::inverse(int a) const {
  for (int b = 0; b < order(); ++b)
    if (table_[a][b] == 0) return b;
  throw std::logic_error("element without inverse");
}

int ThinGroup::element_order(int a) const {
  int x = a;
  for (int k = 1; k <= order(); ++k) {
    if (x == 0) return k;
    x = table_[x][a];
  }
  throw std::logic_error("element of unbounded order");
}

bool ThinGroup::is_dihedral() const {
  const int n = order();
  if (n < 4 || n % 2 != 0) return false;
  const int m = n / 2;
  for (int r = 0; r < n; ++r) {
    if (element_order(r) != m) continue;
    std::vector<bool> in_cyclic(n, false);
    for (int x = 0, k = 0; k < m; ++k, x = table_[x][r]) in_cyclic[x] = true;
    for (int f = 0; f < n; ++f) {
      if (in_cyclic[f] || element_order(f) != 2) continue;
      if (table_[table_[f][r]][f] == inverse(r)) return true;
    }
  }
  return false;
}

ThinGroup thin_group_table(const IntersectionTensor& tensor) {
  const int d = tensor.classes();
  for (int i = 1; i <= d; ++i)
    if (tensor.eta(i) != 1) throw NotThin(i, tensor.eta(i));
  std::vector<std::vector<int>> table(d + 1, std::vector<int>(d + 1, -1));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k)
        if (tensor.at(k, i, j) != 0) {
          if (table[i][j] != -1)
            throw std::logic_error("complex product is not a single relation");
          table[i][j] = k;
        }
  return ThinGroup(std::move(table));
}

ThinGroup thin_group_table(const RelationMatrix& data) {
  return thin_group_table(verify_scheme(data));
}

// ---------------------------------------------------------------------------
// Export

void write_tensor_csv(std::ostream& os, const IntersectionTensor& tensor) {
  const int d = tensor.classes();
  os << "k,i,j,p\n";
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j)
        os << k << ',' << i << ',' << j << ',' << tensor.at(k, i, j) << '\n';
}

void write_valency_csv(std::ostream& os, const IntersectionTensor& tensor) {
  os << "i,eta\n";
  for (int i = 0; i <= tensor.classes(); ++i)
    os << i << ',' << tensor.eta(i) << '\n';
}

}  // namespace flagscheme
