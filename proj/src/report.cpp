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


#include "flagscheme/report.hpp"

#include <ostream>
#include <sstream>

#include "flagscheme/errors.hpp"
#include "flagscheme/formulas.hpp"
#include "flagscheme/fusion.hpp"
#include "flagscheme/reconstruct.hpp"
#include "json.hpp"

namespace flagscheme {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string tuple_string(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string text_value(const Report::Value& v) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "yes" : "no"; }
    std::string operator()(const std::vector<std::int64_t>& v) const {
      return tuple_string(v);
    }
    std::string operator()(const std::vector<std::string>& v) const {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i];
      }
      return out;
    }
  };
  return std::visit(Visitor{}, v);
}

Json json_value(const Report::Value& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string class_set(const std::vector<int>& classes) {
  std::string out = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(classes[i]);
  }
  return out + "}";
}

std::string srg_string(const SrgParameters& p) {
  return "srg(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

std::vector<std::int64_t> to_list(std::span<const std::int64_t> v) {
  return {v.begin(), v.end()};
}

template <typename T>
std::vector<std::int64_t> to_list(const std::vector<T>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

std::int64_t count(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw UsageError("unknown report format '" + std::string(name) + "'");
}

Report::Report(std::string command, std::optional<std::uint64_t> seed)
    : command_(std::move(command)), seed_(seed) {}

void Report::add(std::string key, Value value) {
  fields_.emplace_back(std::move(key), std::move(value));
}

void Report::fail(std::string key, std::string message) {
  pass_ = false;
  fields_.emplace_back(std::move(key), "FAIL: " + std::move(message));
}

void Report::write(std::ostream& os, ReportFormat format) const {
  const std::string seed = seed_ ? std::to_string(*seed_) : "none";
  const std::string verdict = pass_ ? "PASS" : "FAIL";
  switch (format) {
    case ReportFormat::kText: {
      os << "command: " << command_ << "\nseed: " << seed << '\n';
      for (const auto& [k, v] : fields_) os << k << ": " << text_value(v) << '\n';
      if (!table.empty()) {
        for (const auto& row : table) {
          os << ' ';
          for (const auto& cell : row) os << ' ' << cell;
          os << '\n';
        }
      }
      os << "verdict: " << verdict << '\n';
      break;
    }
    case ReportFormat::kJson: {
      Json doc;
      doc["command"] = command_;
      if (seed_)
        doc["seed"] = *seed_;
      else
        doc["seed"] = nullptr;
      for (const auto& [k, v] : fields_) doc[k] = json_value(v);
      if (!table.empty()) {
        Json rows = Json::array();
        for (std::size_t r = 1; r < table.size(); ++r) {
          Json row;
          for (std::size_t c = 0; c < table[0].size(); ++c)
            row[table[0][c]] = table[r][c];
          rows.push_back(std::move(row));
        }
        doc["table"] = std::move(rows);
      }
      doc["verdict"] = verdict;
      os << doc.dump(2) << '\n';
      break;
    }
    case ReportFormat::kCsv: {
      if (!table.empty()) {
        for (const auto& row : table) {
          for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << csv_field(row[c]);
          os << '\n';
        }
        break;
      }
      os << "key,value\ncommand," << csv_field(command_) << "\nseed," << seed
         << '\n';
      for (const auto& [k, v] : fields_)
        os << csv_field(k) << ',' << csv_field(text_value(v)) << '\n';
      os << "verdict," << verdict << '\n';
      break;
    }
  }
}

std::string Report::render(ReportFormat format) const {
  std::ostringstream os;
  write(os, format);
  return os.str();
}

std::string order_string(const GqOrder& o) {
  return "(" + std::to_string(o.s) + "," + std::to_string(o.t) + ")";
}

// ---------------------------------------------------------------------------

BuildResult run_build(std::string_view kind, int param) {
  IncidenceStructure st;
  if (kind == "grid" || kind == "dual-grid") {
    if (param < 1) throw UsageError("grid size must be at least 1");
    st = build_grid(param);
    if (kind == "dual-grid") st = dualize(st);
  } else if (kind == "symplectic") {
    st = build_symplectic(param);
  } else {
    throw UsageError("unknown structure kind '" + std::string(kind) +
                     "' (grid, dual-grid, symplectic)");
  }
  Report rep("build", std::nullopt);
  rep.add("kind", std::string(kind));
  rep.add("parameter", std::int64_t{param});
  rep.add("points", std::int64_t{st.num_points()});
  rep.add("lines", std::int64_t{st.num_lines()});
  rep.add("incidences", count(st.incidence().size()));
  try {
    rep.add("order", order_string(verify_gq(st)));
    rep.add("gq axioms", std::string("pass"));
  } catch (const GqViolation& e) {
    rep.fail("gq axioms", e.what());
  }
  return {std::move(st), std::move(rep)};
}

SchemeResult run_scheme(const IncidenceStructure& st) {
  SchemeResult r{{}, {}, std::nullopt, Report("scheme", std::nullopt)};
  auto& rep = r.report;
  rep.add("points", std::int64_t{st.num_points()});
  rep.add("lines", std::int64_t{st.num_lines()});
  const GqOrder order = verify_gq(st);
  rep.add("order", order_string(order));
  rep.add("gq axioms", std::string("pass"));

  r.data = build_flag_scheme(st);
  const auto& m = r.data.relation;
  rep.add("flags", count(m.size()));
  r.tensor = verify_scheme(m);
  const auto& tensor = r.tensor;
  rep.add("classes", std::int64_t{tensor.classes()});
  rep.add("scheme axioms", std::string("pass"));
  rep.add("valencies", to_list(tensor.valencies()));
  rep.add("symmetric", tensor.is_symmetric());
  rep.add("commutative", tensor.is_commutative());
  for (int k = 0, found = 0; k <= tensor.classes() && !found; ++k)
    for (int i = 1; i <= tensor.classes() && !found; ++i)
      for (int j = i + 1; j <= tensor.classes() && !found; ++j)
        if (tensor.at(k, i, j) != tensor.at(k, j, i)) {
          found = 1;
          rep.add("noncommuting entries",
                  "p[" + std::to_string(k) + "][" + std::to_string(i) + "][" +
                      std::to_string(j) + "]=" +
                      std::to_string(tensor.at(k, i, j)) + " p[" +
                      std::to_string(k) + "][" + std::to_string(j) + "][" +
                      std::to_string(i) + "]=" +
                      std::to_string(tensor.at(k, j, i)));
        }

  rep.add("p[1][4][5] p[1][5][4]",
          std::vector<std::int64_t>{tensor.at(1, 4, 5), tensor.at(1, 5, 4)});

  const auto table = flag_tensor_at(order.s, order.t);
  const auto diff = tensor_difference(tensor, table);
  if (diff.empty())
    rep.add("tensor matches table at " + order_string(order), true);
  else
    rep.fail("tensor matches table at " + order_string(order), diff);

  const auto parabolics = find_parabolics(tensor, m);
  std::vector<std::string> names;
  for (const auto& p : parabolics) names.push_back(class_set(p.classes));
  rep.add("parabolics", names);
  const std::vector<int> one{1};
  for (const auto& p : parabolics) {
    if (p.trivial) continue;
    const std::string key = "quotient " + class_set(p.classes);
    try {
      const auto q = quotient_scheme(m, p);
      const auto srg = srg_parameters(q.relation.graph_of(one));
      std::string text = srg_string(srg) + " on " +
                         std::to_string(q.blocks.size()) + " blocks";
      if (p.classes == std::vector<int>{0, 1})
        text += srg == srg_parameters(point_graph(st))
                    ? ", same parameters as the point graph"
                    : ", point graph differs";
      if (p.classes == std::vector<int>{0, 2})
        text += srg == srg_parameters(point_graph(dualize(st)))
                    ? ", same parameters as the line graph"
                    : ", line graph differs";
      rep.add(key, text);
    } catch (const Error& e) {
      rep.add(key, std::string(e.what()));
    }
  }

  bool thin = true;
  for (int i = 0; i <= tensor.classes(); ++i) thin = thin && tensor.eta(i) == 1;
  rep.add("thin", thin);
  if (thin) {
    const auto g = thin_group_table(tensor);
    rep.add("group order", std::int64_t{g.order()});
    rep.add("dihedral", g.is_dihedral());
  }

  const auto dual = check_duality_map(st);
  if (dual.pass)
    rep.add("duality map", "pass (" + std::to_string(dual.pairs_checked) +
                               " pairs)");
  else
    rep.fail("duality map", dual.message);

  if (order.s == order.t) {
    const auto part = four_class_partition();
    const std::string key = "fusion " + part.to_string();
    if (!check_fusion(tensor, part)) {
      rep.fail(key, "block sums are not constant");
    } else {
      r.fused = fuse(m, part);
      const auto ft = verify_scheme(*r.fused);
      const auto fdiff = tensor_difference(ft, fused_tensor_at(order.s));
      if (!fdiff.empty()) {
        rep.fail(key, fdiff);
      } else {
        std::size_t nontrivial = 0;
        for (const auto& p : find_parabolics(ft, *r.fused))
          nontrivial += !p.trivial;
        rep.add(key, "tensor matches fused table, symmetric " +
                         std::string(ft.is_symmetric() ? "yes" : "no") +
                         ", non-trivial parabolics " +
                         std::to_string(nontrivial));
      }
    }
  }
  return r;
}

namespace {

void add_fusion_table(Report& rep, const std::vector<FusionRow>& rows) {
  rep.table.push_back({"partition", "condition"});
  for (const auto& row : rows)
    rep.table.push_back({row.partition.to_string(), row.condition.to_string()});
}

std::int64_t star_closed_count() {
  std::int64_t n = 0;
  const auto tensor = flag_tensor_at(2, 2);
  for (const auto& p : all_partitions(kFlagClasses))
    n += p.star_closed(tensor.pairing());
  return n;
}

}  // namespace

Report run_fusions_numeric(int s, int t) {
  Report rep("fusions", std::nullopt);
  const auto found = scan_flag_fusions(s, t);
  rep.add("mode", std::string("numeric"));
  rep.add("parameters", order_string({s, t}));
  rep.add("partitions", count(all_partitions(kFlagClasses).size()));
  rep.add("star-closed", star_closed_count());
  rep.add("fusions", count(found.size()));
  std::vector<FusionRow> rows;
  bool agree = true;
  for (const auto& p : found) {
    auto c = classify_partition(p);
    agree = agree && c.holds_at(s, t);
    rows.push_back({p, std::move(c)});
  }
  if (agree)
    rep.add("symbolic conditions agree", true);
  else
    rep.fail("symbolic conditions agree",
             "a numeric fusion has a condition excluding these parameters");
  add_fusion_table(rep, rows);
  return rep;
}

Report run_fusions_symbolic() {
  Report rep("fusions", std::nullopt);
  const auto rows = classify_all_fusions();
  rep.add("mode", std::string("symbolic"));
  rep.add("partitions", count(all_partitions(kFlagClasses).size()));
  rep.add("star-closed", star_closed_count());
  rep.add("scan grid", "1.." + std::to_string(kScanBound) +
                           " squared without (1,1)");
  rep.add("feasible", count(rows.size()));
  bool exact = true;
  for (const auto& r : rows) exact = exact && r.condition.exact_match;
  if (exact)
    rep.add("conditions exact on grid", true);
  else
    rep.fail("conditions exact on grid", "a tag does not describe its zero set");
  add_fusion_table(rep, rows);
  return rep;
}

ReconstructResult run_reconstruct(const RelationMatrix& data, int classes,
                                  std::optional<std::uint64_t> seed) {
  if (classes != kFlagClasses && classes != kFusedClasses)
    throw UsageError("--classes must be 7 or 4");
  if (data.classes() != classes)
    throw UsageError("matrix has " + std::to_string(data.classes()) +
                     " classes but --classes " + std::to_string(classes) +
                     " was given");
  ReconstructResult r{std::nullopt, Report("reconstruct", seed)};
  auto& rep = r.report;
  rep.add("vertices", count(data.size()));
  rep.add("classes", std::int64_t{classes});

  RelationMatrix work = data;
  if (seed) {
    auto sc = scramble(data, *seed);
    rep.add("scramble class map", to_list(sc.class_map));
    work = std::move(sc.relation);
  }

  if (classes == kFlagClasses) {
    const auto rl = relabel_to_canonical(work);
    rep.add("relabelling", to_list(rl.map));
    const auto rec = reconstruct_from_7class(rl.relation);
    rep.add("inferred order", order_string(rec.order));
    rep.add("points", std::int64_t{rec.structure.num_points()});
    rep.add("lines", std::int64_t{rec.structure.num_lines()});
    rep.add("gq axioms", std::string("pass"));
    r.structure = rec.structure;
  } else {
    const auto rl = relabel_to_canonical_fused(work);
    rep.add("relabelling", to_list(rl.map));
    const auto rec = reconstruct_from_4class(rl.relation);
    rep.add("inferred order", order_string(rec.order));
    rep.add("cliques", count(rec.cover.cliques.size()));
    rep.add("clique size", count(rec.cover.cliques.front().size()));
    rep.add("points", std::int64_t{rec.structure.num_points()});
    rep.add("lines", std::int64_t{rec.structure.num_lines()});
    const auto sizes = rec.levels.sizes();
    rep.add("level sizes",
            to_list(std::vector<std::size_t>(sizes.begin(), sizes.end())));
    rep.add("bases checked", count(rec.bases_checked));
    rep.add("gq axioms", std::string("pass"));
    const auto qm = check_unique_qm(rl.relation, rec);
    if (qm.pass)
      rep.add("unique (Q,M)", "pass (" + qm.message + ")");
    else
      rep.fail("unique (Q,M)", qm.message);
    r.structure = rec.structure;
  }
  return r;
}

Report run_selftest() {
  Report rep("selftest", std::nullopt);
  auto step = [&](const std::string& key, auto&& body) {
    try {
      rep.add(key, body());
    } catch (const Error& e) {
      rep.fail(key, e.what());
    }
  };
  step("identities", [] {
    return "pass (" + std::to_string(verify_identities().checks) + " checks)";
  });
  step("triplet orbits", [] {
    return "pass (" + std::to_string(verify_triplet_orbits().checks) +
           " checks)";
  });
  step("fused table", [] {
    return "pass (" + std::to_string(verify_fused_table().checks) + " checks)";
  });
  struct Case {
    const char* name;
    IncidenceStructure (*make)();
  };
  const Case cases[] = {
      {"grid(1)", [] { return build_grid(1); }},
      {"grid(2)", [] { return build_grid(2); }},
      {"grid(3)", [] { return build_grid(3); }},
      {"grid(4)", [] { return build_grid(4); }},
      {"dual grid(2)", [] { return dualize(build_grid(2)); }},
      {"dual grid(3)", [] { return dualize(build_grid(3)); }},
      {"W(2)", [] { return build_symplectic(2); }},
      {"W(3)", [] { return build_symplectic(3); }},
  };
  for (const auto& c : cases) {
    step(std::string("table vs ") + c.name, [&] {
      const auto st = c.make();
      const auto order = verify_gq(st);
      const auto tensor = verify_scheme(build_flag_scheme(st).relation);
      const auto diff =
          tensor_difference(tensor, flag_tensor_at(order.s, order.t));
      if (!diff.empty()) throw Error(diff);
      return "pass at " + order_string(order);
    });
  }
  return rep;
}

}  // namespace flagscheme
