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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flagscheme/errors.hpp"
#include "flagscheme/flag_scheme.hpp"
#include "flagscheme/formulas.hpp"
#include "flagscheme/fusion.hpp"
#include "flagscheme/incidence.hpp"
#include "flagscheme/reconstruct.hpp"
#include "flagscheme/report.hpp"
#include "flagscheme/scheme.hpp"
#include "flagscheme/scheme_io.hpp"

namespace py = pybind11;
namespace fs = flagscheme;

namespace {

std::vector<std::vector<int>> matrix_rows(const fs::RelationMatrix& m) {
  std::vector<std::vector<int>> out(m.size(), std::vector<int>(m.size()));
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) out[x][y] = m(x, y);
  return out;
}

fs::RelationMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows,
                                    int d) {
  fs::RelationMatrix m(rows.size(), d);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != rows.size())
      throw py::value_error("matrix must be square");
    for (std::size_t y = 0; y < rows.size(); ++y) {
      if (rows[x][y] < 0 || rows[x][y] > d)
        throw py::value_error("relation index out of range");
      m.set(x, y, rows[x][y]);
    }
  }
  return m;
}

py::tuple order_tuple(const fs::GqOrder& o) { return py::make_tuple(o.s, o.t); }

std::vector<std::vector<int>> parabolic_classes(const fs::RelationMatrix& m) {
  std::vector<std::vector<int>> out;
  for (const auto& p : fs::find_parabolics(fs::verify_scheme(m), m))
    out.push_back(p.classes);
  return out;
}

}  // namespace

PYBIND11_MODULE(flagscheme, m) {
  m.doc() = "Flag association schemes of generalized quadrangles";

  // Base first: pybind11 tries translators newest first.
  auto base = py::register_exception<fs::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<fs::ParseError>(m, "ParseError", base);
  py::register_exception<fs::CompositeParameter>(m, "CompositeParameter", base);
  py::register_exception<fs::StructureError>(m, "StructureError", base);
  py::register_exception<fs::GqViolation>(m, "GqViolation", base);
  py::register_exception<fs::NotAScheme>(m, "NotAScheme", base);
  py::register_exception<fs::NotAFusion>(m, "NotAFusion", base);
  py::register_exception<fs::UnsupportedParameters>(m, "UnsupportedParameters",
                                                    base);
  py::register_exception<fs::ParameterMismatch>(m, "ParameterMismatch", base);
  py::register_exception<fs::NoIsomorphism>(m, "NoIsomorphism", base);
  py::register_exception<fs::CoverViolation>(m, "CoverViolation", base);
  py::register_exception<fs::GqAxiomFailure>(m, "GqAxiomFailure", base);
  py::register_exception<fs::UsageError>(m, "UsageError", base);

  py::class_<fs::IncidenceStructure>(m, "IncidenceStructure")
      .def(py::init<int, int, std::vector<fs::IncidenceStructure::Pair>>(),
           py::arg("num_points"), py::arg("num_lines"), py::arg("incidence"))
      .def_property_readonly("num_points", &fs::IncidenceStructure::num_points)
      .def_property_readonly("num_lines", &fs::IncidenceStructure::num_lines)
      .def_property_readonly("incidence", &fs::IncidenceStructure::incidence)
      .def("incident", &fs::IncidenceStructure::incident)
      .def("lines_on", &fs::IncidenceStructure::lines_on)
      .def("points_on", &fs::IncidenceStructure::points_on)
      .def("to_json", &fs::dump_structure)
      .def("__eq__", [](const fs::IncidenceStructure& a,
                        const fs::IncidenceStructure& b) { return a == b; })
      .def("__repr__", [](const fs::IncidenceStructure& st) {
        return "<IncidenceStructure " + std::to_string(st.num_points()) +
               " points, " + std::to_string(st.num_lines()) + " lines>";
      });

  m.def("build_grid", &fs::build_grid, py::arg("s"));
  m.def("build_symplectic", &fs::build_symplectic, py::arg("q"));
  m.def("dualize", &fs::dualize);
  m.def("verify_gq", [](const fs::IncidenceStructure& st) {
    return order_tuple(fs::verify_gq(st));
  });
  m.def("parse_structure", &fs::parse_structure, py::arg("text"));
  m.def("load_structure", [](const std::string& path) {
    return fs::load_structure(path);
  });

  py::class_<fs::RelationMatrix>(m, "RelationMatrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"), py::arg("classes"))
      .def_property_readonly("size", &fs::RelationMatrix::size)
      .def_property_readonly("classes", &fs::RelationMatrix::classes)
      .def("__call__", [](const fs::RelationMatrix& r, std::size_t x,
                          std::size_t y) {
        if (x >= r.size() || y >= r.size()) throw py::index_error();
        return r(x, y);
      })
      .def("rows", &matrix_rows)
      .def("to_text", [](const fs::RelationMatrix& r) {
        return fs::dump_scheme(r);
      })
      .def("__eq__", [](const fs::RelationMatrix& a,
                        const fs::RelationMatrix& b) { return a == b; });
  m.def("parse_scheme", [](const std::string& text) {
    return fs::parse_scheme(text).relation;
  });

  py::class_<fs::IntersectionTensor>(m, "IntersectionTensor")
      .def_property_readonly("classes", &fs::IntersectionTensor::classes)
      .def("p", py::overload_cast<int, int, int>(&fs::IntersectionTensor::at,
                                                 py::const_),
           py::arg("k"), py::arg("i"), py::arg("j"))
      .def_property_readonly("valencies", [](const fs::IntersectionTensor& t) {
        return std::vector<std::int64_t>(t.valencies().begin(),
                                         t.valencies().end());
      })
      .def_property_readonly("pairing", [](const fs::IntersectionTensor& t) {
        return std::vector<int>(t.pairing().begin(), t.pairing().end());
      })
      .def_property_readonly("order", &fs::IntersectionTensor::order)
      .def("is_symmetric", &fs::IntersectionTensor::is_symmetric)
      .def("is_commutative", &fs::IntersectionTensor::is_commutative)
      .def("__eq__", [](const fs::IntersectionTensor& a,
                        const fs::IntersectionTensor& b) { return a == b; });

  py::class_<fs::FlagSchemeData>(m, "FlagScheme")
      .def_property_readonly("flags", [](const fs::FlagSchemeData& d) {
        std::vector<std::pair<int, int>> out;
        for (const auto& f : d.flags) out.emplace_back(f.point, f.line);
        return out;
      })
      .def_readonly("relation", &fs::FlagSchemeData::relation)
      .def_property_readonly("order", [](const fs::FlagSchemeData& d) {
        return order_tuple(d.order);
      });

  m.def("build_flag_scheme", &fs::build_flag_scheme);
  m.def("verify_scheme", &fs::verify_scheme);
  m.def("flag_tensor_at", &fs::flag_tensor_at, py::arg("s"), py::arg("t"));
  m.def("fused_tensor_at", &fs::fused_tensor_at, py::arg("s"));
  m.def("find_parabolics", &parabolic_classes,
        "Class sets whose union is an equivalence relation.");

  m.def("fuse", [](const fs::RelationMatrix& r, const std::string& part) {
    return fs::fuse(r, fs::IndexPartition::parse(part, r.classes()));
  }, py::arg("relation"), py::arg("partition"));
  m.def("four_class_partition", [] {
    return fs::four_class_partition().to_string();
  });
  m.def("scan_flag_fusions", [](int s, int t) {
    std::vector<std::string> out;
    for (const auto& p : fs::scan_flag_fusions(s, t))
      out.push_back(p.to_string());
    return out;
  }, py::arg("s"), py::arg("t"));
  m.def("classify_partition", [](const std::string& part) {
    return fs::classify_partition(fs::IndexPartition::parse(part, 7))
        .to_string();
  });
  m.def("classify_all_fusions", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& row : fs::classify_all_fusions())
      out.emplace_back(row.partition.to_string(), row.condition.to_string());
    return out;
  });

  m.def("scramble", [](const fs::RelationMatrix& r, std::uint64_t seed,
                       bool relabel_classes) {
    auto sc = fs::scramble(r, seed, relabel_classes);
    return py::make_tuple(sc.relation, sc.vertex_map, sc.class_map);
  }, py::arg("relation"), py::arg("seed"), py::arg("relabel_classes") = true,
        "Returns (matrix, vertex_map, class_map).");
  m.def("relabel_to_canonical", [](const fs::RelationMatrix& r) {
    auto rl = fs::relabel_to_canonical(r);
    return py::make_tuple(rl.relation, rl.map, order_tuple(rl.order));
  });
  m.def("relabel_to_canonical_fused", [](const fs::RelationMatrix& r) {
    auto rl = fs::relabel_to_canonical_fused(r);
    return py::make_tuple(rl.relation, rl.map, order_tuple(rl.order));
  });
  m.def("reconstruct_from_7class", [](const fs::RelationMatrix& r) {
    return fs::reconstruct_from_7class(r).structure;
  });
  m.def("reconstruct_from_4class", [](const fs::RelationMatrix& r) {
    const auto rec = fs::reconstruct_from_4class(r);
    const auto qm = fs::check_unique_qm(r, rec);
    py::dict out;
    out["structure"] = rec.structure;
    out["order"] = order_tuple(rec.order);
    out["cliques"] = rec.cover.cliques.size();
    const auto sizes = rec.levels.sizes();
    out["level_sizes"] = std::vector<std::size_t>(sizes.begin(), sizes.end());
    out["unique_qm"] = qm.pass;
    return out;
  });

  m.def("selftest", [] {
    const auto rep = fs::run_selftest();
    return py::make_tuple(rep.pass(), rep.render(fs::ReportFormat::kText));
  }, "Returns (passed, report text).");
}
