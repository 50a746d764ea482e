#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "leibcx/catalog.hpp"
#include "leibcx/chain.hpp"
#include "leibcx/cli.hpp"
#include "leibcx/cohomology.hpp"
#include "leibcx/dgla.hpp"
#include "leibcx/io.hpp"
#include "leibcx/suites.hpp"

namespace py = pybind11;
using namespace leibcx;

namespace {

// Rationals cross the boundary as canonical strings; the Python side turns
// them into fractions.Fraction.
std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

py::dict check_dict(const CheckResult& c) {
  py::dict d;
  d["name"] = c.name;
  d["passed"] = c.passed;
  d["detail"] = c.detail;
  d["witness"] = c.witness;
  d["informational"] = c.informational;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Leibniz algebra homology and cohomology";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<LeibnizAlgebra>(m, "Algebra")
      .def_property_readonly("name", &LeibnizAlgebra::name)
      .def_property_readonly("dim", &LeibnizAlgebra::dim)
      .def_property_readonly("basis", &LeibnizAlgebra::basis_names)
      .def("_structure", [](const LeibnizAlgebra& a) { return strings(a.structure()); })
      .def("_bracket", [](const LeibnizAlgebra& a, int i, int j) { return strings(a.basis_bracket(i, j)); })
      .def("to_json", [](const LeibnizAlgebra& a) { return algebra_to_json(a).dump(); })
      .def("__eq__", [](const LeibnizAlgebra& a, const LeibnizAlgebra& b) { return a == b; })
      .def("__repr__", [](const LeibnizAlgebra& a) {
        return "<Algebra " + a.name() + " dim=" + std::to_string(a.dim()) + ">";
      });

  m.def("catalog_names", &catalog_names);
  m.def("catalog", &catalog, py::arg("name"));
  m.def("load_algebra", &load_algebra, py::arg("source"), "AlgebraFile path or catalog:NAME");
  m.def("parse_algebra", &parse_algebra, py::arg("text"), py::arg("fallback_name") = "algebra");

  m.def(
      "validate",
      [](const LeibnizAlgebra& a) {
        const ValidationReport r = validate_leibniz(a);
        std::vector<std::tuple<int, int, int>> triples;
        for (const auto& f : r.failures) triples.emplace_back(f.i + 1, f.j + 1, f.k + 1);
        return py::make_tuple(r.passed, triples);
      },
      py::arg("algebra"), "(passed, failing 1-based triples)");
  m.def("is_lie", &is_lie);
  m.def("liezation_dim", [](const LeibnizAlgebra& a) { return liezation(a).complement.size(); });
  m.def("omega0", [](const LeibnizAlgebra& a) { return omega0(a).dim; });

  m.def(
      "homology",
      [](const LeibnizAlgebra& a, int max_degree, bool loday) {
        return homology(a, max_degree, loday ? ComplexKind::Loday : ComplexKind::FreeLie).homology;
      },
      py::arg("algebra"), py::arg("max_degree") = 4, py::arg("loday") = false);
  m.def(
      "cohomology", [](const LeibnizAlgebra& a, int max_degree) { return cohomology(a, max_degree).cohomology; },
      py::arg("algebra"), py::arg("max_degree") = 4);
  m.def("free_lie_dims", [](int alphabet, int max_degree) {
    const FreeLieTower t(alphabet, max_degree);
    std::vector<std::size_t> out;
    for (int n = 1; n <= max_degree; ++n) out.push_back(t.slice(n).dim());
    return out;
  });

  m.def(
      "double",
      [](const LeibnizAlgebra& a, const std::string& cocycle_json) {
        Cochain h(a.dim(), 2);
        if (!cocycle_json.empty()) h = parse_cochain(cocycle_json, a.dim());
        return double_extension(ExtensionDatum(a, h)).algebra;
      },
      py::arg("algebra"), py::arg("cocycle_json") = "");

  m.def(
      "check",
      [](const LeibnizAlgebra& a, const std::string& suite, int max_degree) {
        py::list out;
        for (const auto& c : run_suite(suite, a, max_degree)) out.append(check_dict(c));
        return out;
      },
      py::arg("algebra"), py::arg("suite") = "all", py::arg("max_degree") = 4);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "(exit code, stdout, stderr) of one leibcx command line");
}
