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


#include "flagscheme/incidence.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "flagscheme/errors.hpp"
#include "json.hpp"

namespace flagscheme {

IncidenceStructure::IncidenceStructure(int num_points, int num_lines,
                                       std::vector<Pair> incidence)
    : num_points_(num_points),
      num_lines_(num_lines),
      incidence_(std::move(incidence)) {
  if (num_points < 0 || num_lines < 0)
    throw StructureError("negative point or line count");
  std::sort(incidence_.begin(), incidence_.end());
  lines_on_.assign(static_cast<std::size_t>(num_points), {});
  points_on_.assign(static_cast<std::size_t>(num_lines), {});
  for (std::size_t n = 0; n < incidence_.size(); ++n) {
    const auto [p, l] = incidence_[n];
    if (p < 0 || p >= num_points || l < 0 || l >= num_lines)
      throw StructureError("incidence (" + std::to_string(p) + "," +
                           std::to_string(l) + ") out of range");
    if (n > 0 && incidence_[n - 1] == incidence_[n])
      throw StructureError("duplicate incidence (" + std::to_string(p) + "," +
                           std::to_string(l) + ")");
    lines_on_[p].push_back(l);
    points_on_[l].push_back(p);
  }
  for (auto& v : points_on_) std::sort(v.begin(), v.end());
}

bool IncidenceStructure::incident(int point, int line) const {
  const auto& v = lines_on_[point];
  return std::binary_search(v.begin(), v.end(), line);
}

IncidenceStructure build_grid(int s) {
  if (s < 1) throw StructureError("grid needs s >= 1");
  const int m = s + 1;
  std::vector<IncidenceStructure::Pair> inc;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      inc.emplace_back(r * m + c, r);
      inc.emplace_back(r * m + c, m + c);
    }
  return IncidenceStructure(m * m, 2 * m, std::move(inc));
}

namespace {

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

using Vec4 = std::array<int, 4>;

int mod(long long a, int q) {
  const long long r = a % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

int inverse_mod(int a, int q) {
  for (int b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  return 0;
}

Vec4 normalize(Vec4 v, int q) {
  for (int x : v) {
    if (x == 0) continue;
    const int inv = inverse_mod(x, q);
    for (int& y : v) y = y * inv % q;
    break;
  }
  return v;
}

}  // namespace

IncidenceStructure build_symplectic(int q) {
  if (!is_prime(q)) throw CompositeParameter(q);
  std::vector<Vec4> points;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          Vec4 v{a, b, c, d};
          if (v != Vec4{} && normalize(v, q) == v) points.push_back(v);
        }
  std::map<Vec4, int> index;
  for (std::size_t n = 0; n < points.size(); ++n)
    index[points[n]] = static_cast<int>(n);

  auto form = [q](const Vec4& x, const Vec4& y) {
    return mod(static_cast<long long>(x[0]) * y[1] - x[1] * y[0] +
                   x[2] * y[3] - x[3] * y[2],
               q);
  };

  std::set<std::vector<int>> lines;
  for (std::size_t u = 0; u < points.size(); ++u)
    for (std::size_t v = u + 1; v < points.size(); ++v) {
      if (form(points[u], points[v]) != 0) continue;
      std::vector<int> span;
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          if (a == 0 && b == 0) continue;
          Vec4 w;
          for (int c = 0; c < 4; ++c)
            w[c] = (a * points[u][c] + b * points[v][c]) % q;
          span.push_back(index.at(normalize(w, q)));
        }
      std::sort(span.begin(), span.end());
      span.erase(std::unique(span.begin(), span.end()), span.end());
      lines.insert(std::move(span));
    }

  std::vector<IncidenceStructure::Pair> inc;
  int l = 0;
  for (const auto& line : lines) {
    for (int p : line) inc.emplace_back(p, l);
    ++l;
  }
  return IncidenceStructure(static_cast<int>(points.size()), l,
                            std::move(inc));
}

IncidenceStructure dualize(const IncidenceStructure& st) {
  std::vector<IncidenceStructure::Pair> inc;
  inc.reserve(st.incidence().size());
  for (const auto& [p, l] : st.incidence()) inc.emplace_back(l, p);
  IncidenceStructure out(st.num_lines(), st.num_points(), std::move(inc));
  out.point_labels = st.line_labels;
  out.line_labels = st.point_labels;
  return out;
}

namespace {

// Shared-line count for every pair of points.
std::vector<int> common_lines(const IncidenceStructure& st) {
  const auto n = static_cast<std::size_t>(st.num_points());
  std::vector<int> count(n * n, 0);
  for (int l = 0; l < st.num_lines(); ++l) {
    const auto& pts = st.points_on(l);
    for (int a : pts)
      for (int b : pts)
        if (a != b) ++count[static_cast<std::size_t>(a) * n + b];
  }
  return count;
}

}  // namespace

GqOrder verify_gq(const IncidenceStructure& st) {
  if (st.num_points() == 0 || st.num_lines() == 0)
    throw Gq1Violation(-1, -1, "structure has no points or no lines");

  // GQ1
  const int t1 = static_cast<int>(st.lines_on(0).size());
  for (int p = 1; p < st.num_points(); ++p)
    if (static_cast<int>(st.lines_on(p).size()) != t1)
      throw Gq1Violation(0, p,
                         "point " + std::to_string(p) + " lies on " +
                             std::to_string(st.lines_on(p).size()) +
                             " lines, point 0 on " + std::to_string(t1));
  if (t1 < 2)
    throw Gq1Violation(0, 0, "points lie on " + std::to_string(t1) +
                                 " lines, need t >= 1");
  const auto np = static_cast<std::size_t>(st.num_points());
  const auto shared = common_lines(st);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b)
      if (shared[a * np + b] > 1)
        throw Gq1Violation(static_cast<int>(a), static_cast<int>(b),
                           "points " + std::to_string(a) + " and " +
                               std::to_string(b) + " share " +
                               std::to_string(shared[a * np + b]) + " lines");

  // GQ2
  const int s1 = static_cast<int>(st.points_on(0).size());
  for (int l = 1; l < st.num_lines(); ++l)
    if (static_cast<int>(st.points_on(l).size()) != s1)
      throw Gq2Violation(0, l,
                         "line " + std::to_string(l) + " carries " +
                             std::to_string(st.points_on(l).size()) +
                             " points, line 0 carries " + std::to_string(s1));
  if (s1 < 2)
    throw Gq2Violation(0, 0, "lines carry " + std::to_string(s1) +
                                 " points, need s >= 1");
  for (int l = 0; l < st.num_lines(); ++l) {
    std::vector<int> seen(static_cast<std::size_t>(st.num_lines()), 0);
    for (int p : st.points_on(l))
      for (int m : st.lines_on(p))
        if (m > l && ++seen[m] > 1)
          throw Gq2Violation(l, m, "lines " + std::to_string(l) + " and " +
                                       std::to_string(m) +
                                       " share more than one point");
  }

  // GQ3: for an anti-flag (p,L) count the points of L collinear with p.
  for (int p = 0; p < st.num_points(); ++p)
    for (int l = 0; l < st.num_lines(); ++l) {
      if (st.incident(p, l)) continue;
      int count = 0;
      for (int q : st.points_on(l))
        if (shared[static_cast<std::size_t>(p) * np + q] != 0) ++count;
      if (count != 1)
        throw Gq3Violation(p, l, "anti-flag (" + std::to_string(p) + "," +
                                     std::to_string(l) + ") has " +
                                     std::to_string(count) +
                                     " pairs (q,M), expected 1");
    }
  return {s1 - 1, t1 - 1};
}

Graph point_graph(const IncidenceStructure& st) {
  Graph g(static_cast<std::size_t>(st.num_points()));
  for (int l = 0; l < st.num_lines(); ++l) {
    const auto& pts = st.points_on(l);
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        g.add_edge(static_cast<std::size_t>(pts[a]),
                   static_cast<std::size_t>(pts[b]));
  }
  return g;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

int get_count(const json& doc, const char* field) {
  if (!doc.contains(field)) throw ParseError(1, field, "missing field");
  const auto& v = doc.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(1, field, "expected a non-negative integer");
  return v.get<int>();
}

std::vector<std::string> get_labels(const json& doc, const char* field) {
  std::vector<std::string> out;
  if (!doc.contains(field)) return out;
  const auto& v = doc.at(field);
  if (!v.is_array()) throw ParseError(1, field, "expected an array");
  for (const auto& x : v) {
    if (!x.is_string()) throw ParseError(1, field, "labels must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

IncidenceStructure parse_structure(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of(text, e.byte), "json", e.what());
  }
  if (!doc.is_object()) throw ParseError(1, "document", "expected an object");
  const int np = get_count(doc, "num_points");
  const int nl = get_count(doc, "num_lines");
  if (!doc.contains("incidence") || !doc.at("incidence").is_array())
    throw ParseError(1, "incidence", "expected an array of [point, line]");
  std::vector<IncidenceStructure::Pair> inc;
  std::size_t n = 0;
  for (const auto& e : doc.at("incidence")) {
    const std::string field = "incidence[" + std::to_string(n++) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError(1, field, "expected [point, line]");
    inc.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  IncidenceStructure out;
  try {
    out = IncidenceStructure(np, nl, std::move(inc));
  } catch (const StructureError& e) {
    throw ParseError(1, "incidence", e.what());
  }
  out.point_labels = get_labels(doc, "point_labels");
  out.line_labels = get_labels(doc, "line_labels");
  if (!out.point_labels.empty() &&
      out.point_labels.size() != static_cast<std::size_t>(np))
    throw ParseError(1, "point_labels", "wrong number of labels");
  if (!out.line_labels.empty() &&
      out.line_labels.size() != static_cast<std::size_t>(nl))
    throw ParseError(1, "line_labels", "wrong number of labels");
  return out;
}

std::string dump_structure(const IncidenceStructure& st) {
  json doc;
  doc["num_points"] = st.num_points();
  doc["num_lines"] = st.num_lines();
  json inc = json::array();
  for (const auto& [p, l] : st.incidence()) inc.push_back({p, l});
  doc["incidence"] = std::move(inc);
  if (!st.point_labels.empty()) doc["point_labels"] = st.point_labels;
  if (!st.line_labels.empty()) doc["line_labels"] = st.line_labels;
  return doc.dump() + "\n";
}

IncidenceStructure load_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "file", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

void save_structure(const IncidenceStructure& st,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << dump_structure(st);
}

}  // namespace flagscheme
